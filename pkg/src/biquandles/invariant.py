"""Yang-Baxter 2-cocycle state-sum invariants of virtual knots and links.

Each coloring of a code by a valid biquandle contributes one signed sum of
cocycle values: +phi(under_in, over_in) at a positive crossing and
-phi(under_out, over_out) at a negative one, undercrossing color first.
The invariant is the multiset of these sums, read as exponents of t; the
zero cocycle recovers the counting invariant as N * t^0.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import Cochain2, is_cocycle, is_ri_reduced, reduced_cohomology_basis
from .coloring import enumerate_colorings
from .core import Biquandle
from .gauss import GaussCode, crossings_of
from .linalg import FieldSpec


@dataclass(frozen=True)
class LaurentMultiset:
    """Multiset of exponents of t, stored as exponent -> multiplicity."""

    terms: tuple  # ((exponent, multiplicity), ...) sorted by exponent

    @staticmethod
    def from_exponents(exponents) -> "LaurentMultiset":
        counts: dict = {}
        for e in exponents:
            counts[e] = counts.get(e, 0) + 1
        return LaurentMultiset(tuple(sorted(counts.items())))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def size(self) -> int:
        return sum(m for _e, m in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, m in self.terms:
            if isinstance(e, Fraction) and e.denominator == 1:
                e = e.numerator
            if e == 0:
                parts.append(f"{m}")
            elif e == 1:
                parts.append(f"{m}*t")
            else:
                parts.append(f"{m}*t^{e}")
        return " + ".join(parts)


def boltzmann_sum(code: GaussCode, T: Biquandle, phi: Cochain2, coloring) -> object:
    """Signed sum of cocycle values over the crossings of one coloring.

    coloring is indexable by semi-arc - 1 (as returned by
    enumerate_colorings).
    """
    F = phi.field
    total = F.zero()
    for x in crossings_of(code):
        if x.sign > 0:
            total = F.add(total, phi.value(coloring[x.under_in - 1],
                                           coloring[x.over_in - 1]))
        else:
            total = F.sub(total, phi.value(coloring[x.under_out - 1],
                                           coloring[x.over_out - 1]))
    return total


def yb_invariant(code: GaussCode, T: Biquandle, phi: Cochain2,
                 jobs: int = 1) -> LaurentMultiset:
    """State-sum invariant for one cocycle.

    Errors if T is invalid or phi fails the cocycle condition; warns if phi
    is not RI-reduced (the result is then only an invariant of framed
    moves).
    """
    if not T.is_valid:
        raise ValueError("biquandle fails validation")
    if phi.n != T.n:
        raise ValueError(f"cochain is over {phi.n} elements, biquandle over {T.n}")
    if not is_cocycle(T, phi):
        raise ValueError("cochain is not a cocycle")
    if not is_ri_reduced(T, phi):
        warnings.warn("cocycle is not RI-reduced; the state sum may change "
                      "under first Reidemeister moves")
    colorings = enumerate_colorings(code, T, jobs=jobs)
    return LaurentMultiset.from_exponents(
        boltzmann_sum(code, T, phi, c) for c in colorings)


def yb_invariant_suite(code: GaussCode, T: Biquandle, field: FieldSpec,
                       jobs: int = 1) -> list[tuple[Cochain2, LaurentMultiset]]:
    """The invariant for every reduced-cohomology basis cocycle."""
    out = []
    for phi in reduced_cohomology_basis(T, field):
        out.append((phi, yb_invariant(code, T, phi, jobs=jobs)))
    return out
