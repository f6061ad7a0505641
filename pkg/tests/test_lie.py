"""Structure-constant Lie algebras: validation, brackets, series, subspaces."""

from fractions import Fraction

import pytest

from hypercenter.agmodel.lie import NilpotentLie
from hypercenter.errors import InputFormatError

HEIS = NilpotentLie(3, [(0, 1, 2, Fraction(1))])
FIL4 = NilpotentLie(4, [(0, 1, 2, Fraction(1)), (0, 2, 3, Fraction(1))])


def test_bracket_table_antisymmetrized():
    assert HEIS.bracket([1, 0, 0], [0, 1, 0]) == [0, 0, 1]
    assert HEIS.bracket([0, 1, 0], [1, 0, 0]) == [0, 0, -1]
    assert HEIS.bracket([0, 0, 1], [1, 0, 0]) == [0, 0, 0]


def test_bracket_bilinear():
    u = [Fraction(2), Fraction(1, 3), Fraction(0)]
    v = [Fraction(0), Fraction(5), Fraction(-1)]
    assert HEIS.bracket(u, v) == [0, 0, Fraction(10)]


def test_explicit_antisymmetric_pair_accepted():
    lie = NilpotentLie(3, [(0, 1, 2, Fraction(1)), (1, 0, 2, Fraction(-1))])
    assert lie.bracket([1, 0, 0], [0, 1, 0]) == [0, 0, 1]


def test_conflicting_pair_rejected():
    with pytest.raises(InputFormatError):
        NilpotentLie(3, [(0, 1, 2, Fraction(1)), (1, 0, 2, Fraction(1))])


def test_self_bracket_rejected():
    with pytest.raises(InputFormatError):
        NilpotentLie(2, [(0, 0, 1, Fraction(1))])


def test_jacobi_violation_rejected():
    # [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = -e2 here
    with pytest.raises(InputFormatError):
        NilpotentLie(3, [(0, 1, 2, Fraction(1)), (1, 2, 1, Fraction(1))])


def test_perfect_algebra_rejected():
    # rotation-style relations satisfy Jacobi but bracket onto everything
    with pytest.raises(InputFormatError):
        NilpotentLie(3, [(0, 1, 2, Fraction(1)), (0, 2, 1, Fraction(1)), (1, 2, 0, Fraction(1))])


def test_non_nilpotent_rejected():
    # sl2-style relations are semisimple, not nilpotent
    with pytest.raises(InputFormatError):
        NilpotentLie(
            3,
            [
                (0, 1, 1, Fraction(2)),
                (0, 2, 2, Fraction(-2)),
                (1, 2, 0, Fraction(1)),
            ],
        )


def test_lower_central_series_heisenberg():
    series = HEIS.lower_central_series()
    assert [len(t) for t in series] == [1, 0]
    assert HEIS.nilpotency_class() == 2


def test_lower_central_series_filiform():
    series = FIL4.lower_central_series()
    assert [len(t) for t in series] == [2, 1, 0]
    assert FIL4.nilpotency_class() == 3


def test_abelian_and_zero():
    ab = NilpotentLie(3, [])
    assert ab.is_abelian() and ab.nilpotency_class() == (1 if ab.dim else 0)
    zero = NilpotentLie(0, [])
    assert zero.nilpotency_class() == 0
    assert zero.full_subspace() == [] and zero.center_space() == []


def test_center_space():
    assert HEIS.center_space() == [[0, 0, 1]]
    assert FIL4.center_space() == [[0, 0, 0, 1]]


def test_ideal_and_subalgebra():
    span_e2 = [[Fraction(0), Fraction(0), Fraction(1)]]
    assert HEIS.is_ideal(span_e2) and HEIS.is_subalgebra(span_e2)
    span_e0 = [[Fraction(1), Fraction(0), Fraction(0)]]
    assert HEIS.is_subalgebra(span_e0) and not HEIS.is_ideal(span_e0)
    plane = [[Fraction(1), Fraction(0), Fraction(0)], [Fraction(0), Fraction(1), Fraction(0)]]
    assert not HEIS.is_subalgebra(plane)


def test_centralizer_space():
    e0 = [[Fraction(1), Fraction(0), Fraction(0)]]
    cz = HEIS.centralizer_space(e0)
    assert cz == [[1, 0, 0], [0, 0, 1]]
    assert HEIS.centralizer_space([]) == HEIS.full_subspace()
