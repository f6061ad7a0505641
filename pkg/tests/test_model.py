"""Model validation, standard subgroups, predicates, ordinal indices."""

from fractions import Fraction

import pytest

from hypercenter.agmodel.lie import NilpotentLie
from hypercenter.agmodel.model import (
    AlgGroupModel,
    OrdinalIndex,
    StdSubgroup,
    is_commutative,
    is_connected,
    is_mult_type_subgroup,
    is_unipotent_subgroup,
)
from hypercenter.errors import InputFormatError
from hypercenter.verify.instances import example1, ga_gm, heisenberg_torus, hxgm, torus
from hypercenter.finitegrp.group import cyclic
from hypercenter.zlattice.fga import FgAbelian, Hom


def _ident3():
    return [[Fraction(1 if i == j else 0) for j in range(3)] for i in range(3)]


def test_char_must_be_zero_or_prime():
    x = FgAbelian(1)
    f = cyclic(1)
    with pytest.raises(InputFormatError):
        AlgGroupModel(4, x, f, [Hom.identity(x)], NilpotentLie(0, []), [], [[]])


def test_positive_char_needs_trivial_lie():
    x = FgAbelian(1)
    f = cyclic(1)
    with pytest.raises(InputFormatError):
        AlgGroupModel(5, x, f, [Hom.identity(x)], NilpotentLie(1, []), [[0]], [[[Fraction(1)]]])


def test_lattice_action_must_be_homomorphism():
    x = FgAbelian(1)
    f = cyclic(2)
    # s -> 2 is injective but s*s = e would need action 4, not 1
    with pytest.raises(InputFormatError):
        AlgGroupModel(0, x, f, [Hom.identity(x), Hom(x, x, [[2]])],
                      NilpotentLie(0, []), [], [[], []])


def test_identity_must_act_trivially():
    x = FgAbelian(1)
    f = cyclic(2)
    with pytest.raises(InputFormatError):
        AlgGroupModel(0, x, f, [Hom(x, x, [[-1]]), Hom.identity(x)],
                      NilpotentLie(0, []), [], [[], []])


def test_weight_grading_enforced():
    x = FgAbelian(1)
    f = cyclic(1)
    lie = NilpotentLie(3, [(0, 1, 2, Fraction(1))])
    # [e0,e1]=e2 forces w2 = w0 + w1
    with pytest.raises(InputFormatError):
        AlgGroupModel(0, x, f, [Hom.identity(x)], lie, [[1], [1], [1]], [_ident3()])
    AlgGroupModel(0, x, f, [Hom.identity(x)], lie, [[1], [1], [2]], [_ident3()])


def test_lie_action_must_permute_weight_spaces():
    x = FgAbelian(1)
    f = cyclic(2)
    lie = NilpotentLie(2, [])
    swap = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    ident2 = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    # f fixes the characters but swaps weight spaces 1 and -1
    with pytest.raises(InputFormatError):
        AlgGroupModel(0, x, f, [Hom.identity(x), Hom.identity(x)],
                      lie, [[1], [-1]], [ident2, swap])
    # compatible when f also inverts the lattice
    AlgGroupModel(0, x, f, [Hom.identity(x), Hom(x, x, [[-1]])],
                  lie, [[1], [-1]], [ident2, swap])


def test_lie_action_must_preserve_bracket():
    x = FgAbelian(0)
    f = cyclic(2)
    lie = NilpotentLie(3, [(0, 1, 2, Fraction(1))])
    neg_e2 = [[Fraction(1), Fraction(0), Fraction(0)],
              [Fraction(0), Fraction(1), Fraction(0)],
              [Fraction(0), Fraction(0), Fraction(-1)]]
    with pytest.raises(InputFormatError):
        AlgGroupModel(0, x, f, [Hom.identity(x), Hom.identity(x)],
                      lie, [[], [], []], [_ident3(), neg_e2])


def test_std_subgroup_ordering_reverses_y():
    m = example1(3)
    mu4 = StdSubgroup(m, [], m.x.subgroup([[4]]), m.f.trivial_subgroup())
    mu2 = StdSubgroup(m, [], m.x.subgroup([[2]]), m.f.trivial_subgroup())
    # deeper sublattice Y cuts out a larger diagonalizable subgroup
    assert mu4.contains(mu2) and not mu2.contains(mu4)
    assert mu4 != mu2


def test_std_subgroup_trivial_and_full():
    m = hxgm()
    triv = m.trivial_subgroup()
    assert triv.is_trivial() and not triv.is_full()
    full = StdSubgroup(m, m.lie.full_subspace(), m.x.trivial_subgroup(), m.f.full_subgroup())
    assert full.is_full() and full.contains(triv)


def test_width_zero_lattice_degenerates():
    m = torus(0)
    # X = 0 means the torus is a point: trivial equals full on the Y leg
    s = StdSubgroup(m, [], m.x.full_subgroup(), m.f.trivial_subgroup())
    assert s.y.is_full() and s.y.is_trivial()


def test_subgroup_wrong_ambient_rejected():
    m = example1(3)
    other = FgAbelian(2)
    with pytest.raises(InputFormatError):
        StdSubgroup(m, [], other.subgroup([[1, 0]]), m.f.trivial_subgroup())


def test_predicates():
    assert is_connected(hxgm()) and is_connected(ga_gm())
    assert not is_connected(example1(3))
    assert not is_commutative(ga_gm())
    assert is_commutative(torus(2))
    assert is_commutative(hxgm()) is False


def test_unipotent_and_mult_type_subgroups():
    m = heisenberg_torus()
    u = StdSubgroup(m, m.lie.full_subspace(), m.x.full_subgroup(), m.f.trivial_subgroup())
    assert is_unipotent_subgroup(u) and not is_mult_type_subgroup(u)
    t = StdSubgroup(m, [], m.x.trivial_subgroup(), m.f.trivial_subgroup())
    assert is_mult_type_subgroup(t) and not is_unipotent_subgroup(t)
    assert is_unipotent_subgroup(m.trivial_subgroup())
    assert is_mult_type_subgroup(m.trivial_subgroup())


def test_ordinal_index_ordering_and_str():
    assert OrdinalIndex(0, 3) < OrdinalIndex(1, 0) < OrdinalIndex(1, 1) < OrdinalIndex(2, 0)
    assert str(OrdinalIndex(0, 7)) == "7"
    assert str(OrdinalIndex(1, 0)) == "omega*1"
    assert str(OrdinalIndex(1, 1)) == "omega*1+1"
    assert str(OrdinalIndex(2, 5)) == "omega*2+5"
    assert OrdinalIndex(1, 0).is_limit() and not OrdinalIndex(1, 2).is_limit()
    assert not OrdinalIndex(0, 0).is_limit()


def test_ordinal_index_rejects_negative():
    with pytest.raises(ValueError):
        OrdinalIndex(-1, 0)
    with pytest.raises(ValueError):
        OrdinalIndex(0, -2)
