"""Fitting subgroups and the unipotent radical on connected models."""

import pytest

from hypercenter.agmodel.fitting import fitting, rad_u
from hypercenter.agmodel.series import nilpotency_class_sub
from hypercenter.errors import NotConnected
from hypercenter.verify.instances import (
    example1,
    filiform_torus,
    ga_gm,
    heisenberg,
    heisenberg_torus,
    hxgm,
    torus,
)


def test_requires_connected():
    with pytest.raises(NotConnected):
        fitting(example1(3))
    with pytest.raises(NotConnected):
        rad_u(example1(3))


def test_ga_gm_fitting_is_unipotent_radical():
    m = ga_gm()
    f = fitting(m)
    u = rad_u(m)
    assert f == u
    assert len(f.m) == 1 and f.y.is_full() and f.k.is_trivial()
    assert nilpotency_class_sub(m, f) == 1


def test_nilpotent_model_is_its_own_fitting():
    for m in (hxgm(), heisenberg(), filiform_torus(), torus(2)):
        assert fitting(m).is_full()


def test_heisenberg_torus_fitting_is_u_times_central_torus():
    m = heisenberg_torus()
    f = fitting(m)
    # the torus acts with weights (1,-1,0): only U stays nilpotent normal
    assert len(f.m) == 3 and f.y.is_full() and f.k.is_trivial()
    assert rad_u(m) == f
    assert nilpotency_class_sub(m, f) == 2


def test_fitting_contains_radical_and_hypercenter():
    from hypercenter.agmodel.series import ucs

    for m in (ga_gm(), heisenberg_torus(), hxgm(), torus(1)):
        f = fitting(m)
        assert f.contains(rad_u(m))
        rep = ucs(m)
        assert f.contains(rep.hypercenter)


def test_fitting_class_is_finite():
    for m in (ga_gm(), heisenberg_torus(), hxgm(), filiform_torus()):
        assert nilpotency_class_sub(m, fitting(m)) is not None
