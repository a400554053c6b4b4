from fractions import Fraction

import pytest

from biquandles.linalg import (QQ, ExactMatrix, FieldSpec, RankTracker,
                               in_span, kernel_basis, matvec, rank, rref)

F5 = FieldSpec(5)


def test_field_names():
    assert QQ.name() == "Q"
    assert F5.name() == "Zp:5"
    assert FieldSpec.from_name("Q") == QQ
    assert FieldSpec.from_name("Zp:7") == FieldSpec(7)
    with pytest.raises(ValueError):
        FieldSpec.from_name("R")
    with pytest.raises(ValueError):
        FieldSpec.from_name("Zp:x")


def test_prime_check():
    with pytest.raises(ValueError, match="not prime"):
        FieldSpec(6)
    with pytest.raises(ValueError, match="not prime"):
        FieldSpec(1)
    FieldSpec(2)
    FieldSpec(97)


def test_coerce():
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.coerce("2/6") == Fraction(1, 3)
    assert QQ.coerce(Fraction(-1, 2)) == Fraction(-1, 2)
    assert F5.coerce(7) == 2
    assert F5.coerce("-1") == 4
    assert F5.coerce("1/2") == 3  # 2^{-1} = 3 mod 5


def test_field_arithmetic_mod_p():
    assert F5.add(3, 4) == 2
    assert F5.mul(3, 4) == 2
    assert F5.inv(3) == 2
    assert F5.neg(2) == 3
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)


def test_rref_identity():
    I3 = ExactMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]], QQ)
    R, pivots = rref(I3, QQ)
    assert R.data == I3.data
    assert pivots == [1, 2, 3]


def test_rref_zero_matrix():
    Z = ExactMatrix.from_rows([[0, 0], [0, 0]], QQ)
    R, pivots = rref(Z, QQ)
    assert R.data == Z.data
    assert pivots == []


def test_rref_rank_one():
    M = ExactMatrix.from_rows([[2, 4], [1, 2]], QQ)
    R, pivots = rref(M, QQ)
    assert R.data == [[1, 2], [0, 0]]
    assert pivots == [1]


def test_rref_mod_p():
    M = ExactMatrix.from_rows([[2, 1], [1, 1]], F5)
    R, pivots = rref(M, F5)
    assert pivots == [1, 2]
    assert R.data == [[1, 0], [0, 1]]
    singular = ExactMatrix.from_rows([[2, 1], [1, 3]], F5)  # det = 5 = 0
    assert rank(singular, F5) == 1


def test_kernel_identity_empty():
    I2 = ExactMatrix.from_rows([[1, 0], [0, 1]], QQ)
    assert kernel_basis(I2, QQ) == []


def test_kernel_zero_matrix_standard_basis():
    Z = ExactMatrix.from_rows([[0, 0], [0, 0]], QQ)
    assert kernel_basis(Z, QQ) == [(1, 0), (0, 1)]


def test_kernel_canonical_form():
    M = ExactMatrix.from_rows([[1, 1], [0, 0]], QQ)
    assert kernel_basis(M, QQ) == [(-1, 1)]


def test_kernel_vectors_annihilate():
    M = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]], QQ)
    for v in kernel_basis(M, QQ):
        assert all(x == 0 for x in matvec(M, v, QQ))
    # free-column pattern: 1 at own free column, 0 at others
    basis = kernel_basis(ExactMatrix.from_rows([[1, 1, 1]], QQ), QQ)
    assert basis == [(-1, 1, 0), (-1, 0, 1)]


def test_rank_and_span():
    assert rank(ExactMatrix.from_rows([[1, 2], [2, 4]], QQ), QQ) == 1
    assert in_span([(1, 0), (0, 1)], (5, -3), QQ)
    assert not in_span([(1, 1)], (1, 2), QQ)
    assert in_span([], (0, 0), QQ)
    assert not in_span([], (1, 0), QQ)


def test_rank_tracker_matches_batch_rank():
    vectors = [(1, 2, 3), (2, 4, 6), (0, 1, 1), (1, 3, 4)]
    tracker = RankTracker(QQ, 3)
    added = [tracker.add(v) for v in vectors]
    assert added == [True, False, True, False]
    assert tracker.rank == rank(ExactMatrix.from_rows([list(v) for v in vectors], QQ), QQ)


def test_rank_tracker_mod_p():
    tracker = RankTracker(F5, 2)
    assert tracker.add((2, 4))
    assert not tracker.add((1, 2))   # 3*(2,4) = (1,2) mod 5
    assert tracker.add((0, 1))


def test_ragged_rows_rejected():
    with pytest.raises(ValueError, match="ragged"):
        ExactMatrix.from_rows([[1, 2], [3]], QQ)
