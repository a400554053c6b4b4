"""Second Yang-Baxter cohomology of a finite biquandle, exact over Q or GF(p).

A 2-cochain assigns a field value to every ordered pair (x, y); it is stored
as a vector of length n^2 indexed by (x-1)*n + (y-1).  The cocycle condition
comes from the third Reidemeister move: for all triples (x, y, z),

    phi(x,y) + phi(x^y, z) + phi(y_x, z_(x^y))
        = phi(x, z_y) + phi(y, z) + phi(x^(z_y), y^z).

The coboundary of a 1-cochain lam is

    (d lam)(x, y) = lam(x) + lam(y) - lam(x^y) - lam(y_x),

which vanishing-tested against the cocycle matrix gives d2 = 0.  Cocycles
that also vanish at every kink witness pair are insensitive to the first
Reidemeister move ("RI-reduced"); the reduced second cohomology is spanned
by such cocycles modulo coboundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from .core import Biquandle, ParseError, kink_witnesses
from .linalg import ExactMatrix, FieldSpec, RankTracker, in_span, kernel_basis, matvec, rref


@dataclass(frozen=True)
class Cochain1:
    field: FieldSpec
    coeffs: tuple

    @property
    def n(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class Cochain2:
    field: FieldSpec
    coeffs: tuple  # length n^2, index (x-1)*n + (y-1)

    @property
    def n(self) -> int:
        return int(len(self.coeffs) ** 0.5 + 0.5)

    def value(self, x: int, y: int):
        return self.coeffs[(x - 1) * self.n + (y - 1)]


def cochain2_from_pairs(n: int, field: FieldSpec, pairs: dict) -> Cochain2:
    """Build a 2-cochain from {(x, y): coefficient}."""
    coeffs = [field.zero()] * (n * n)
    for (x, y), v in pairs.items():
        if not (1 <= x <= n and 1 <= y <= n):
            raise ValueError(f"pair ({x},{y}) outside 1..{n}")
        coeffs[(x - 1) * n + (y - 1)] = field.coerce(v)
    return Cochain2(field, tuple(coeffs))


def zero_cochain(n: int, field: FieldSpec) -> Cochain2:
    return Cochain2(field, tuple(field.zero() for _ in range(n * n)))


def cocycle_matrix(T: Biquandle, field: FieldSpec) -> ExactMatrix:
    """n^3 x n^2 matrix of the cocycle condition, one row per triple
    (x, y, z) in lexicographic order; contributions accumulate."""
    n = T.n
    rows = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            for z in range(1, n + 1):
                row = [0] * (n * n)

                def bump(a, b, delta):
                    row[(a - 1) * n + (b - 1)] += delta

                bump(x, y, 1)
                bump(T.up(x, y), z, 1)
                bump(T.down(y, x), T.down(z, T.up(x, y)), 1)
                bump(x, T.down(z, y), -1)
                bump(y, z, -1)
                bump(T.up(x, T.down(z, y)), T.up(y, z), -1)
                rows.append([field.coerce(v) for v in row])
    return ExactMatrix(n ** 3, n * n, rows)


def is_cocycle(T: Biquandle, v: Cochain2) -> bool:
    M = cocycle_matrix(T, v.field)
    return not any(matvec(M, v.coeffs, v.field))


def coboundary_of(T: Biquandle, lam: Cochain1) -> Cochain2:
    F = lam.field
    n = T.n
    coeffs = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            s = F.add(lam.coeffs[x - 1], lam.coeffs[y - 1])
            s = F.sub(s, lam.coeffs[T.up(x, y) - 1])
            s = F.sub(s, lam.coeffs[T.down(y, x) - 1])
            coeffs.append(s)
    return Cochain2(F, tuple(coeffs))


def coboundary_basis(T: Biquandle, field: FieldSpec) -> list[Cochain2]:
    """Canonical basis of the space of 2-coboundaries: the images of the
    indicator 1-cochains, row-reduced, nonzero rows kept."""
    n = T.n
    images = []
    for a in range(1, n + 1):
        lam = Cochain1(field, tuple(field.one() if i == a - 1 else field.zero()
                                    for i in range(n)))
        images.append(list(coboundary_of(T, lam).coeffs))
    R, pivots = rref(ExactMatrix(n, n * n, images), field)
    return [Cochain2(field, tuple(R.data[i])) for i in range(len(pivots))]


def cohomology_basis(T: Biquandle, field: FieldSpec) -> list[Cochain2]:
    """Representatives of H2: kernel basis vectors of the cocycle matrix
    that extend the span of the coboundaries, in canonical order."""
    cob = coboundary_basis(T, field)
    tracker = RankTracker(field, T.n ** 2)
    for b in cob:
        tracker.add(b.coeffs)
    reps = []
    for v in kernel_basis(cocycle_matrix(T, field), field):
        if tracker.add(v):
            reps.append(Cochain2(field, v))
    return reps


def ri_constraint_pairs(T: Biquandle) -> list[tuple[int, int]]:
    """Pairs where an RI-reduced cocycle must vanish, from every axiom 4
    witness: (x, a) for each witness x of a, and (a, y) for each witness y."""
    pairs = set()
    for a, (xs, ys) in kink_witnesses(T).items():
        for x in xs:
            pairs.add((x, a))
        for y in ys:
            pairs.add((a, y))
    return sorted(pairs)


def is_ri_reduced(T: Biquandle, v: Cochain2) -> bool:
    return all(not v.value(x, y) for x, y in ri_constraint_pairs(T))


def _primitive(coeffs: tuple) -> tuple:
    """Scale a rational vector to primitive integers, first nonzero positive."""
    denoms = [c.denominator for c in coeffs]
    scale = lcm(*denoms) if denoms else 1
    ints = [int(c * scale) for c in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    first = next((v for v in ints if v), 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def reduced_cohomology_basis(T: Biquandle, field: FieldSpec) -> list[Cochain2]:
    """Representatives of the RI-reduced second cohomology.

    W = cocycles vanishing at all RI constraint pairs; representatives of
    W mod (W meet coboundaries) are found by rank extension over the
    coboundary basis.  Over Q each representative is normalized to a
    primitive integer vector with positive leading entry.
    """
    n = T.n
    M = cocycle_matrix(T, field)
    rows = [row[:] for row in M.data]
    for x, y in ri_constraint_pairs(T):
        row = [field.zero()] * (n * n)
        row[(x - 1) * n + (y - 1)] = field.one()
        rows.append(row)
    stacked = ExactMatrix(len(rows), n * n, rows)

    tracker = RankTracker(field, n * n)
    for b in coboundary_basis(T, field):
        tracker.add(b.coeffs)
    reps = []
    for v in kernel_basis(stacked, field):
        if tracker.add(v):
            if field.is_rational:
                v = _primitive(v)
            reps.append(Cochain2(field, v))
    return reps


class CochainClass(Enum):
    NOT_COCYCLE = "not-cocycle"
    COBOUNDARY = "coboundary"
    NONTRIVIAL_COCYCLE = "nontrivial-cocycle"


@dataclass(frozen=True)
class ClassifiedCochain:
    kind: CochainClass
    ri_reduced: bool


def classify_cochain(T: Biquandle, v: Cochain2) -> ClassifiedCochain:
    ri = is_ri_reduced(T, v)
    if not is_cocycle(T, v):
        return ClassifiedCochain(CochainClass.NOT_COCYCLE, ri)
    basis = [b.coeffs for b in coboundary_basis(T, v.field)]
    if in_span(basis, v.coeffs, v.field):
        return ClassifiedCochain(CochainClass.COBOUNDARY, ri)
    return ClassifiedCochain(CochainClass.NONTRIVIAL_COCYCLE, ri)


# ---------------------------------------------------------------------------
# Display and file format.


def _coeff_text(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def format_cochain(v: Cochain2) -> str:
    """Chi-notation, pairs in lexicographic order: -X(1,3)-X(2,1)+2*X(3,3)."""
    n = v.n
    parts = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            c = v.value(x, y)
            if not c:
                continue
            if c == 1:
                parts.append(f"+X({x},{y})")
            elif c == -1:
                parts.append(f"-X({x},{y})")
            else:
                text = _coeff_text(c)
                if not text.startswith("-"):
                    text = "+" + text
                parts.append(f"{text}*X({x},{y})")
    if not parts:
        return "0"
    joined = "".join(parts)
    return joined[1:] if joined.startswith("+") else joined


def write_cochain(v: Cochain2) -> str:
    """One 'x y value' line per nonzero coefficient, after a field header."""
    lines = [f"field {v.field.name()}"]
    n = v.n
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            c = v.value(x, y)
            if c:
                lines.append(f"{x} {y} {_coeff_text(c)}")
    return "\n".join(lines) + "\n"


def read_cochain(text: str, n: int) -> Cochain2:
    """Parse the cocycle file format; the pair range is checked against n."""
    field = None
    pairs: dict[tuple[int, int], object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if field is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "field":
                raise ParseError("expected 'field Q' or 'field Zp:<prime>' header", lineno)
            try:
                field = FieldSpec.from_name(parts[1])
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'x y value', got {line!r}", lineno)
        try:
            x, y = int(parts[0]), int(parts[1])
            value = field.coerce(parts[2])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coefficient line {line!r}", lineno) from None
        if not (1 <= x <= n and 1 <= y <= n):
            raise ParseError(f"pair ({x},{y}) outside 1..{n}", lineno)
        if (x, y) in pairs:
            raise ParseError(f"duplicate pair ({x},{y})", lineno)
        pairs[(x, y)] = value
    if field is None:
        raise ParseError("missing field header")
    return cochain2_from_pairs(n, field, pairs)
