"""Exact linear algebra over Q and GF(p).

Rational arithmetic uses fractions.Fraction (always in lowest terms);
prime-field arithmetic uses integer residues 0..p-1.  No floating point
anywhere, so reduced forms and kernel bases are bit-for-bit reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (p None) or the prime field of order p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def name(self) -> str:
        return "Q" if self.p is None else f"Zp:{self.p}"

    @staticmethod
    def from_name(name: str) -> "FieldSpec":
        if name == "Q":
            return FieldSpec()
        if name.startswith("Zp:"):
            try:
                p = int(name[3:])
            except ValueError:
                raise ValueError(f"bad field name {name!r}") from None
            return FieldSpec(p)
        raise ValueError(f"bad field name {name!r}; expected Q or Zp:<prime>")

    # -- element arithmetic ------------------------------------------------

    def coerce(self, v):
        """Accept int, Fraction, or a 'p/q' string."""
        if isinstance(v, str):
            v = Fraction(v)
        if self.p is None:
            return Fraction(v)
        if isinstance(v, Fraction):
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return v % self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))


QQ = FieldSpec()


@dataclass
class ExactMatrix:
    """Dense matrix with exact field entries."""

    rows: int
    cols: int
    data: list[list]

    @staticmethod
    def from_rows(rows: list, field: FieldSpec) -> "ExactMatrix":
        data = [[field.coerce(v) for v in row] for row in rows]
        r = len(data)
        c = len(data[0]) if data else 0
        if any(len(row) != c for row in data):
            raise ValueError("ragged rows")
        return ExactMatrix(r, c, data)

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [row[:] for row in self.data])


def rref(M: ExactMatrix, F: FieldSpec) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form via Gauss-Jordan elimination.

    Pivot selection is the first nonzero entry top-down in each column,
    left to right; no magnitude-based pivoting, so the result is canonical.
    Returns (R, pivot columns 1-based ascending).
    """
    R = M.copy()
    data = R.data
    pivots: list[int] = []
    r = 0
    for c in range(R.cols):
        if r >= R.rows:
            break
        pr = next((i for i in range(r, R.rows) if data[i][c]), None)
        if pr is None:
            continue
        data[r], data[pr] = data[pr], data[r]
        inv = F.inv(data[r][c])
        data[r] = [F.mul(inv, v) for v in data[r]]
        for i in range(R.rows):
            if i != r and data[i][c]:
                f = data[i][c]
                data[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(data[i], data[r])]
        pivots.append(c + 1)
        r += 1
    return R, pivots


def rank(M: ExactMatrix, F: FieldSpec) -> int:
    return len(rref(M, F)[1])


def kernel_basis(M: ExactMatrix, F: FieldSpec) -> list[tuple]:
    """Canonical basis of the right null space.

    One vector per free column, in ascending column order; each vector has
    a 1 at its own free column and 0 at every other free column.
    """
    R, pivots = rref(M, F)
    pivot_set = {p - 1 for p in pivots}
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [F.zero()] * M.cols
        v[fc] = F.one()
        for r, pc in enumerate(pivots):
            v[pc - 1] = F.neg(R.data[r][fc])
        basis.append(tuple(v))
    return basis


def matvec(M: ExactMatrix, v, F: FieldSpec):
    out = []
    for row in M.data:
        s = F.zero()
        for a, b in zip(row, v):
            if a and b:
                s = F.add(s, F.mul(a, b))
        out.append(s)
    return tuple(out)


def in_span(vectors: list, v, F: FieldSpec) -> bool:
    """Exact membership of v in the span of the given vectors."""
    vecs = [list(w) for w in vectors]
    if not vecs:
        return not any(v)
    base = ExactMatrix.from_rows(vecs, F)
    extended = ExactMatrix.from_rows(vecs + [list(v)], F)
    return rank(base, F) == rank(extended, F)


class RankTracker:
    """Incremental independence test: feed vectors, learn which extend the span."""

    def __init__(self, field: FieldSpec, dim: int):
        self.field = field
        self.dim = dim
        self._echelon: list[tuple[int, list]] = []  # (leading column, reduced row)

    @property
    def rank(self) -> int:
        return len(self._echelon)

    def add(self, v) -> bool:
        """Reduce v against the stored rows; True iff v was independent."""
        F = self.field
        w = [F.coerce(x) for x in v]
        for lead, row in self._echelon:
            if w[lead]:
                f = w[lead]
                w = [F.sub(x, F.mul(f, y)) for x, y in zip(w, row)]
        lead = next((i for i, x in enumerate(w) if x), None)
        if lead is None:
            return False
        inv = F.inv(w[lead])
        w = [F.mul(inv, x) for x in w]
        self._echelon.append((lead, w))
        self._echelon.sort(key=lambda t: t[0])
        return True
