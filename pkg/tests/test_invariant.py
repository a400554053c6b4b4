"""State-sum invariants: frozen values, laws, and input checking."""

import random
from fractions import Fraction

import pytest

from biquandles.cohomology import (Cochain1, Cochain2, coboundary_of,
                                   cochain2_from_pairs, read_cochain,
                                   zero_cochain)
from biquandles.core import Biquandle, alexander_biquandle
from biquandles.coloring import counting_invariant
from biquandles.gauss import insert_r_move
from biquandles.invariant import LaurentMultiset, boltzmann_sum, yb_invariant, yb_invariant_suite
from biquandles.linalg import FieldSpec

Q = FieldSpec.from_name("Q")
F5 = FieldSpec.from_name("Zp:5")


@pytest.fixture(scope="module")
def phi1(data_dir):
    return read_cochain((data_dir / "phi1.cyc").read_text(), 4)


@pytest.fixture(scope="module")
def phi2(data_dir):
    return read_cochain((data_dir / "phi2.cyc").read_text(), 4)


# --- the multiset container ------------------------------------------------


def test_laurent_from_exponents():
    m = LaurentMultiset.from_exponents([0, 1, 1, -2, 0, 0])
    assert m.as_dict() == {-2: 1, 0: 3, 1: 2}
    assert m.size == 6
    assert str(m) == "1*t^-2 + 3 + 2*t"


def test_laurent_empty_and_fraction_exponents():
    assert str(LaurentMultiset.from_exponents([])) == "0"
    m = LaurentMultiset.from_exponents([Fraction(1, 2), Fraction(2, 2), Fraction(0, 5)])
    assert str(m) == "1 + 1*t^1/2 + 1*t"


# --- frozen values ----------------------------------------------------------


def test_kishino_values(kishino_code, kishino_T, phi1, phi2):
    v1 = yb_invariant(kishino_code, kishino_T, phi1)
    v2 = yb_invariant(kishino_code, kishino_T, phi2)
    assert v1.as_dict() == {-1: 2, 0: 12, 1: 2}
    assert v2.as_dict() == {-2: 2, 0: 12, 2: 2}
    assert str(v1) == "2*t^-1 + 12 + 2*t"
    assert str(v2) == "2*t^-2 + 12 + 2*t^2"


def test_trivial_values_elsewhere(unknot_code, trefoil_code, conway_code,
                                  kishino_T, phi1, phi2):
    # Both cocycles are blind to these: every coloring contributes t^0.
    for code in (unknot_code, trefoil_code, conway_code):
        for phi in (phi1, phi2):
            v = yb_invariant(code, kishino_T, phi)
            assert v.as_dict() == {0: 4}
            assert str(v) == "4"


def test_link_values(link_code, kishino_T, phi1, phi2):
    assert yb_invariant(link_code, kishino_T, phi1).as_dict() == \
        {-2: 4, -1: 4, 0: 4, 1: 4}
    assert yb_invariant(link_code, kishino_T, phi2).as_dict() == \
        {-3: 2, -1: 4, 0: 2, 1: 4, 2: 2, 3: 2}


def test_kishino_mod_five(kishino_code, kishino_T, data_dir):
    text = (data_dir / "phi1.cyc").read_text().replace("field Q", "field Zp:5")
    phi = read_cochain(text, 4)
    v = yb_invariant(kishino_code, kishino_T, phi)
    assert v.as_dict() == {0: 12, 1: 2, 4: 2}
    assert str(v) == "12 + 2*t + 2*t^4"


def test_suite(kishino_code, unknot_code, kishino_T):
    suite = yb_invariant_suite(kishino_code, kishino_T, Q)
    assert [v.as_dict() for _phi, v in suite] == \
        [{-1: 2, 0: 12, 1: 2}, {-2: 2, 0: 12, 2: 2}]
    assert [str(v) for _phi, v in yb_invariant_suite(unknot_code, kishino_T, Q)] == \
        ["4", "4"]


# --- invariance laws --------------------------------------------------------


def test_zero_cocycle_recovers_counting(trefoil_code, link_code, kishino_code,
                                        kishino_T):
    z = zero_cochain(4, Q)
    for code in (trefoil_code, link_code, kishino_code):
        v = yb_invariant(code, kishino_T, z)
        assert v.as_dict() == {0: counting_invariant(code, kishino_T)}


def test_coboundary_shift_is_invisible(kishino_code, kishino_T, phi2):
    rng = random.Random(7)
    base = yb_invariant(kishino_code, kishino_T, phi2)
    for _ in range(3):
        lam = Cochain1(Q, tuple(Q.coerce(rng.randrange(-5, 6)) for _ in range(4)))
        shifted = Cochain2(Q, tuple(
            Q.add(a, b) for a, b in zip(phi2.coeffs,
                                        coboundary_of(kishino_T, lam).coeffs)))
        assert yb_invariant(kishino_code, kishino_T, shifted) == base


def test_reidemeister_moves_preserve_value(kishino_code, kishino_T, phi2):
    base = yb_invariant(kishino_code, kishino_T, phi2)
    for move, site in [("R1+", (0, 2)), ("R1-", (0, 0)),
                       ("R2", ((0, 1), (0, 5)))]:
        moved = insert_r_move(kishino_code, move, site)
        assert yb_invariant(moved, kishino_T, phi2) == base


def test_half_exponents(kishino_code, kishino_T, phi1):
    # Scaling a cocycle halves every exponent but changes nothing else.
    half = Cochain2(Q, tuple(Q.coerce(Fraction(1, 2)) * c for c in phi1.coeffs))
    v = yb_invariant(kishino_code, kishino_T, half)
    assert v.as_dict() == {Fraction(-1, 2): 2, 0: 12, Fraction(1, 2): 2}
    assert str(v) == "2*t^-1/2 + 12 + 2*t^1/2"


def test_boltzmann_sum_of_constant_coloring(kishino_code, kishino_T, phi1, phi2):
    # Neither shipped cocycle has a (1,1) term, so the all-ones coloring
    # contributes zero at every crossing.
    ones = (1,) * kishino_code.n_semi_arcs
    assert boltzmann_sum(kishino_code, kishino_T, phi1, ones) == 0
    assert boltzmann_sum(kishino_code, kishino_T, phi2, ones) == 0


def test_parallel_invariant(conway_code):
    A = alexander_biquandle(5, 2, 3)
    z = zero_cochain(5, Q)
    assert yb_invariant(conway_code, A, z, jobs=2) == \
        yb_invariant(conway_code, A, z, jobs=1)


# --- input checking ---------------------------------------------------------


def test_invalid_biquandle_rejected(unknot_code):
    bad = Biquandle(tuple(((1, 1), (1, 1)) for _ in range(4)))
    with pytest.raises(ValueError, match="fails validation"):
        yb_invariant(unknot_code, bad, zero_cochain(2, Q))


def test_size_mismatch_rejected(unknot_code, kishino_T):
    with pytest.raises(ValueError, match="cochain is over 2 elements, biquandle over 4"):
        yb_invariant(unknot_code, kishino_T, zero_cochain(2, Q))


def test_non_cocycle_rejected(unknot_code, kishino_T):
    v = cochain2_from_pairs(4, Q, {(1, 2): 1})
    with pytest.raises(ValueError, match="not a cocycle"):
        yb_invariant(unknot_code, kishino_T, v)


def test_unreduced_cocycle_warns(unknot_code, kishino_T):
    v = cochain2_from_pairs(4, Q, {(1, 1): 1, (2, 4): 1, (3, 3): 1, (4, 2): 1})
    with pytest.warns(UserWarning, match="not RI-reduced"):
        got = yb_invariant(unknot_code, kishino_T, v)
    assert got.as_dict() == {0: 4}
