"""Transfinite central series: stages, ordinals, certificates, classes."""

import pytest

from hypercenter.agmodel.model import OrdinalIndex, StdSubgroup
from hypercenter.agmodel.series import (
    TERMINATED,
    hypercenter,
    nilpotency_class,
    nilpotency_class_sub,
    submodel,
    ucs,
    z_omega,
)
from hypercenter.errors import Cancelled, UndeterminedLimit
from hypercenter.verify.instances import (
    dihedral_dual,
    example1,
    filiform_torus,
    ga_gm,
    heisenberg,
    heisenberg_torus,
    hxgm,
    mu_chain,
    torus,
)


def test_example1_finite_stages_and_limit():
    rep = ucs(example1(3))
    assert rep.status == TERMINATED
    for i in range(1, 11):
        st = rep.stage_at(OrdinalIndex(0, i))
        assert st is not None and st.y.basis == [[2 ** i]]
    zom = rep.stage_at(OrdinalIndex(1, 0))
    assert zom.m == [] and zom.y.is_trivial() and zom.k.is_trivial()
    assert rep.lam == OrdinalIndex(1, 1)
    assert rep.stage_at(rep.lam).is_full()
    assert rep.hypercenter.is_full()


def test_example1_certificate():
    rep = ucs(example1(3))
    assert rep.chain_certificates
    cert = rep.chain_certificates[0]
    assert cert.kind == "unit-split"
    assert cert.nonunit_factors == ["(x + 2)^1"]
    assert cert.unit_factors == []
    assert cert.reaches_finitely is False


def test_example1_not_nilpotent():
    assert nilpotency_class(example1(3)) is None


def test_stages_strictly_ascend():
    rep = ucs(example1(3))
    subs = [s.subgroup for s in rep.stages]
    for a, b in zip(subs, subs[1:]):
        assert b.contains(a) and a != b


def test_heisenberg_torus_stops_at_one():
    rep = ucs(heisenberg_torus())
    assert rep.status == TERMINATED and rep.lam == OrdinalIndex(0, 1)
    assert nilpotency_class(heisenberg_torus()) is None


def test_central_torus_class_two():
    rep = ucs(hxgm())
    assert rep.status == TERMINATED and rep.lam == OrdinalIndex(0, 2)
    assert rep.hypercenter.is_full()
    assert nilpotency_class(hxgm()) == 2


def test_heisenberg_class_two():
    assert nilpotency_class(heisenberg()) == 2


def test_filiform_class_three():
    assert nilpotency_class(filiform_torus()) == 3


def test_ga_gm_centerless():
    rep = ucs(ga_gm())
    assert rep.status == TERMINATED and rep.lam == OrdinalIndex(0, 0)
    assert rep.hypercenter.is_trivial()
    assert nilpotency_class(ga_gm()) is None


def test_torus_class_one():
    assert nilpotency_class(torus(3)) == 1
    assert nilpotency_class(torus(0)) == 0


def test_mu_chain_reaches_omega_plus_one():
    for l in (2, 3, 5):
        rep = ucs(mu_chain(l))
        assert rep.status == TERMINATED, rep.message
        assert rep.lam == OrdinalIndex(1, 1)
        zom = rep.stage_at(OrdinalIndex(1, 0))
        assert zom.y.is_trivial() and zom.k.is_trivial()
        assert rep.stage_at(OrdinalIndex(1, 1)).is_full()


def test_mu_chain_certificate_factors():
    rep = ucs(mu_chain(3))
    assert rep.chain_certificates[0].nonunit_factors == ["(x**2 + 3*x + 3)^1"]


def test_dihedral_dual_finite_classes():
    for n in (1, 2, 3, 4):
        rep = ucs(dihedral_dual(n))
        assert rep.status == TERMINATED
        assert rep.lam == OrdinalIndex(0, n)
        assert rep.hypercenter.is_full()
        assert nilpotency_class(dihedral_dual(n)) == n


def test_z_omega_fallback_below_omega():
    # series stops finitely: the limit stage is the stabilized hypercenter
    assert z_omega(hxgm()).is_full()
    assert z_omega(ga_gm()).is_trivial()


def test_hypercenter_returns_terminal():
    s, lam, rep = hypercenter(example1(3))
    assert s.is_full() and lam == OrdinalIndex(1, 1)
    assert rep.status == TERMINATED


def test_undetermined_limit_on_disagreeing_generators():
    from hypercenter.agmodel.lie import NilpotentLie
    from hypercenter.agmodel.model import AlgGroupModel
    from hypercenter.finitegrp.group import direct_product, cyclic
    from hypercenter.zlattice.fga import FgAbelian, Hom

    x = FgAbelian(2)
    f = direct_product(cyclic(2), cyclic(2))
    mats = {0: [[1, 0], [0, 1]], 1: [[-1, 0], [0, 1]],
            2: [[1, 0], [0, -1]], 3: [[-1, 0], [0, -1]]}
    # identify element indices by action through the product table
    acts = [Hom(x, x, mats[i]) for i in range(4)]
    m = AlgGroupModel(0, x, f, acts, NilpotentLie(0, []), [], [[] for _ in range(4)])
    rep = ucs(m)
    assert rep.status == "undetermined-limit"
    with pytest.raises(UndeterminedLimit):
        z_omega(m)


def test_submodel_of_limit_stage_is_torus():
    m = example1(3)
    rep = ucs(m)
    sub = submodel(m, rep.stage_at(OrdinalIndex(1, 0)))
    assert sub.lie.dim == 0 and sub.f.n == 1 and sub.x.width == 1


def test_nilpotency_class_sub():
    m = heisenberg_torus()
    u = StdSubgroup(m, m.lie.full_subspace(), m.x.full_subgroup(), m.f.trivial_subgroup())
    assert nilpotency_class_sub(m, u) == 2
    assert nilpotency_class_sub(m, m.trivial_subgroup()) == 0


def test_cancel_check_aborts():
    calls = {"n": 0}

    def cancel():
        calls["n"] += 1
        return calls["n"] > 3

    with pytest.raises(Cancelled):
        ucs(example1(3), cancel_check=cancel)


def test_stage_records_are_ordinal_sorted():
    rep = ucs(example1(3))
    ords = [s.ordinal for s in rep.stages]
    assert ords == sorted(ords)
