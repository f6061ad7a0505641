"""Acceptance gate: one test per shipped claim bundle, at stated budgets.

Run with -v to get one pass/fail line per criterion.  Each body either
reproduces a frozen expected trace exactly or drives a check suite and
requires zero failures and zero skips.
"""

import time

from hypercenter.agmodel.bridge import to_finite
from hypercenter.agmodel.fitting import fitting
from hypercenter.agmodel.model import OrdinalIndex, is_unipotent_subgroup
from hypercenter.agmodel.quotient import quotient
from hypercenter.agmodel.series import (
    nilpotency_class,
    nilpotency_class_sub,
    ucs,
    z_omega,
)
from hypercenter.verify.instances import example1, generate, ga_gm, hxgm, spec
from hypercenter.verify.suites import run_suite


def _clean(results, expect_at_least: int = 1):
    bad = [(r.check, r.instance, r.verdict, r.witness) for r in results if r.verdict != "pass"]
    assert not bad, f"non-passing checks: {bad}"
    assert len(results) >= expect_at_least


def test_criterion_1_example_reproduction():
    ucs(example1(3))  # one-time setup costs paid before timing

    t0 = time.perf_counter()
    m = example1(3)
    rep = ucs(m)
    for i in range(1, 11):
        st = rep.stage_at(OrdinalIndex(0, i))
        assert st.m == [] and st.k.is_trivial()
        assert st.y.basis == [[2 ** i]], f"stage {i}"
    zom = rep.stage_at(OrdinalIndex(1, 0))
    assert zom.y.is_trivial() and zom.m == [] and zom.k.is_trivial()
    cert = rep.chain_certificates[0]
    assert cert.kind == "unit-split" and cert.nonunit_factors
    assert rep.lam == OrdinalIndex(1, 1)
    assert nilpotency_class(m) is None

    q, _ = quotient(m, zom)
    zq = z_omega(q)
    assert zq.k.order() == 2
    assert not is_unipotent_subgroup(zq)

    m2 = example1(2)
    rep2 = ucs(m2)
    q2, _ = quotient(m2, rep2.stage_at(OrdinalIndex(1, 0)))
    assert is_unipotent_subgroup(z_omega(q2))
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"took {elapsed:.3f}s"
    print(f"criterion 1: example reproduction in {elapsed:.3f}s")


def test_criterion_2_main_theorem_suite():
    t0 = time.perf_counter()
    results = run_suite("connected-main", seed=101, count=25)
    elapsed = time.perf_counter() - t0
    _clean(results)
    instances = {r.instance for r in results}
    assert len(instances) >= 25, f"only {len(instances)} connected models"
    for check in ("terminates", "centerless-quotient", "hypercenter-class-finite"):
        assert sum(1 for r in results if r.check == check) >= 25
    assert elapsed < 30.0, f"took {elapsed:.1f}s"
    print(f"criterion 2: {len(instances)} connected models in {elapsed:.1f}s")


def test_criterion_3_fitting_and_oracle_bridge():
    t0 = time.perf_counter()
    results = run_suite("oracle-bridge", seed=7, count=51)
    elapsed = time.perf_counter() - t0
    _clean(results)
    instances = {r.instance for r in results}
    assert len(instances) >= 50, f"only {len(instances)} bridgeable models"
    for i in range(50):
        grp, _ = to_finite(generate(spec("random_bridgeable", seed=7 + i)))
        assert grp.n <= 128, grp.n
    for check in ("bridge-center-agree", "bridge-series-agree",
                  "bridge-hypercenter-agree", "finite-fitting-maximal"):
        assert sum(1 for r in results if r.check == check) >= 50
    assert any(r.check == "bridge-fitting-agree" for r in results)
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    print(f"criterion 3: {len(instances)} bridgeable models in {elapsed:.1f}s")


def test_criterion_4_intersection_characterization():
    results = run_suite("hypercenter-char", seed=3, count=60)
    _clean(results, expect_at_least=60)
    for i in range(10):
        assert generate(spec("random_finite", seed=3 + i, max_order=64)).n <= 64


def test_criterion_5_limit_stage_algebra():
    results = run_suite("limit-stage", seed=0, count=12)
    _clean(results)
    mu_instances = {r.instance for r in results if r.instance.startswith("mu_chain")}
    assert len(mu_instances) >= 10, f"only {len(mu_instances)} mu_chain instances"
    assert any(r.instance.startswith("example1") for r in results)
    for check in ("stage-identity-at-limit", "union-class-one"):
        assert sum(1 for r in results if r.check == check) >= 11
    for check in ("union-class-two", "union-class-three"):
        assert sum(1 for r in results if r.check == check) == 1


def test_criterion_6_ordinal_bound():
    results = run_suite("ordinal-bound", seed=5, count=20)
    _clean(results)
    # named witnesses: a transfinite terminal and a finite terminal >= 2
    assert ucs(example1(3)).lam == OrdinalIndex(1, 1)
    assert ucs(hxgm()).lam == OrdinalIndex(0, 2)
    assert any(r.check == "corpus-witnesses" and r.verdict == "pass" for r in results)


def test_criterion_7_unipotence_corollaries():
    results = run_suite("unipotence", seed=2, count=15)
    _clean(results)
    for check in ("omega-of-stage-quotient-unipotent", "omega-mod-omega-unipotent",
                  "split-center-quotient-unipotent"):
        assert sum(1 for r in results if r.check == check) >= 15
    fails_first = [r for r in results if r.check == "disconnected-first-fails"]
    assert len(fails_first) == 1 and fails_first[0].verdict == "pass"


def test_criterion_8_class_bound():
    results = run_suite("class-bound")
    _clean(results, expect_at_least=2)
    # heisenberg times central torus: class 2 against the degree-3 bound 4
    assert nilpotency_class(hxgm()) == 2 <= 3 * 2 // 2 + 1
    # ax+b model: largest nilpotent pieces against the degree-2 bound 2
    m = ga_gm()
    assert nilpotency_class_sub(m, fitting(m)) == 1 <= 2
    assert nilpotency_class_sub(m, z_omega(m)) == 0
