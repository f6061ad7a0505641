"""Centers: standard form, split part, and the mixed-center obstruction."""

from fractions import Fraction

import pytest

from hypercenter.agmodel.center import center, center_parts, center_s, mixed_center_obstruction
from hypercenter.agmodel.lie import NilpotentLie
from hypercenter.agmodel.model import AlgGroupModel
from hypercenter.errors import MixedCenterUnsupported
from hypercenter.finitegrp.group import cyclic
from hypercenter.verify.instances import (
    example1,
    filiform_torus,
    ga_gm,
    heisenberg,
    heisenberg_torus,
    hxgm,
    torus,
)
from hypercenter.zlattice.fga import FgAbelian, Hom


def test_example1_center_is_mu2():
    z = center(example1(3))
    assert z.m == [] and z.k.is_trivial()
    assert z.y.basis == [[2]]


def test_heisenberg_torus_center():
    z = center(heisenberg_torus())
    assert [[int(c) for c in r] for r in z.m] == [[0, 0, 1]]
    # weights (1,-1,0) generate the full lattice, so no torus survives
    assert z.y.is_full() and z.k.is_trivial()


def test_central_torus_center():
    z = center(hxgm())
    assert [[int(c) for c in r] for r in z.m] == [[0, 0, 1]]
    assert z.y.is_trivial() and z.k.is_trivial()


def test_ga_gm_centerless():
    assert center(ga_gm()).is_trivial()


def test_torus_is_its_own_center():
    m = torus(2)
    z = center(m)
    assert z.y.is_trivial() and z.k.is_full() and z.m == []


def test_pure_unipotent_center():
    z = center(heisenberg())
    assert [[int(c) for c in r] for r in z.m] == [[0, 0, 1]]


def test_filiform_center_is_top_line():
    z = center(filiform_torus())
    assert [[int(c) for c in r] for r in z.m] == [[0, 0, 0, 1]]
    assert z.y.is_trivial()


def test_mixed_obstruction_detected():
    # f fixes the lattice and scales the single weight-2 line by -1:
    # dressing by a torus point with chi(2) = -1 makes (t, f) central,
    # which the standard format cannot carry
    x = FgAbelian(1)
    f = cyclic(2)
    m = AlgGroupModel(0, x, f, [Hom.identity(x), Hom.identity(x)],
                      NilpotentLie(1, []), [[2]],
                      [[[Fraction(1)]], [[Fraction(-1)]]])
    assert mixed_center_obstruction(m) == [1]
    with pytest.raises(MixedCenterUnsupported):
        center(m)
    # the parts are still computable when the caller opts out
    z = center(m, check_mixed=False)
    assert z.k.is_trivial()


def test_moved_lattice_disqualifies_candidate():
    x = FgAbelian(1)
    f = cyclic(2)
    ident2 = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    swap2 = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    m = AlgGroupModel(0, x, f, [Hom.identity(x), Hom(x, x, [[-1]])],
                      NilpotentLie(2, []), [[1], [-1]], [ident2, swap2])
    assert mixed_center_obstruction(m) == []
    center(m)


def test_inconsistent_dressing_filtered():
    # sign -1 on both the weight-1 and weight-2 lines: chi(1) = -1 forces
    # chi(2) = +1, contradicting the required -1, so no dressing exists
    x = FgAbelian(1)
    f = cyclic(2)
    neg2 = [[Fraction(-1), Fraction(0)], [Fraction(0), Fraction(-1)]]
    ident2 = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    m = AlgGroupModel(0, x, f, [Hom.identity(x), Hom.identity(x)],
                      NilpotentLie(2, []), [[1], [2]], [ident2, neg2])
    assert mixed_center_obstruction(m) == []
    center(m)


def test_center_parts_matches_center():
    m = hxgm()
    assert center_parts(m) == center(m)


def test_center_s_example1():
    cs = center_s(example1(3))
    assert cs.m == [] and cs.k.is_trivial()
    assert cs.y.basis == [[2]]


def test_center_s_strips_unipotent_part():
    m = hxgm()
    cs = center_s(m)
    assert cs.m == [] and cs.y.is_trivial() and cs.k.is_trivial()


def test_center_s_keeps_mu_p_in_char_p():
    # mu_2 stays diagonalizable in characteristic 2
    cs = center_s(example1(2))
    assert cs.y.basis == [[2]] and cs.k.is_trivial() and cs.m == []


def test_center_s_drops_constant_p_part_of_k():
    # a central constant Z/3 is unipotent in characteristic 3 and
    # multiplicative elsewhere
    x = FgAbelian(0, (2,))
    f = cyclic(3)
    acts = [Hom.identity(x)] * 3
    m3 = AlgGroupModel(3, x, f, acts, NilpotentLie(0, []), [], [[], [], []])
    assert center(m3).k.is_full()
    assert center_s(m3).k.is_trivial()
    m0 = AlgGroupModel(0, x, f, acts, NilpotentLie(0, []), [], [[], [], []])
    assert center_s(m0).k.is_full()
