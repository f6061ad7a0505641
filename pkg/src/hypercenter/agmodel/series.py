"""Ascending central series, continued through limit ordinals.

The series climbs finitely: take the center, record it, quotient it
out, repeat.  When the finite steps keep producing nontrivial centers
the obstruction is always the same after a while: the Lie and finite
increments switch off permanently and only the lattice keeps moving,
following the fixed recurrence

    Y_{t+1} = W + sum_g (action(g) - id)(Y_t)

in the coordinates of the input model, with W spanned by the weights
that survive the stabilized Lie part.  The chain-limit machinery then
certifies the intersection of the tail, which is the lattice part of
the stage at the next limit ordinal.  A jump is only taken once two
extra facts are certified: the lattice chain provably never goes
stationary (otherwise the series is still finite and the climb is
extended instead), and no finite element can start centralizing the
shrinking lattice at an unseen finite step (checked against the stable
span of the chain).  Anything short of certainty is reported as
undetermined, never guessed.

Stages are reported in the input model's coordinates throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..errors import (
    Cancelled,
    ChainNotDescending,
    MixedCenterUnsupported,
    UndeterminedLimit,
)
from ..zlattice.chain import (
    UNDETERMINED,
    ChainLimitResult,
    apply_step,
    chain_limit,
    stable_core,
)
from ..zlattice.fga import Hom, SubgroupOfFgA
from ..zlattice.ratlin import mat_apply, solve, span_contains
from .center import center
from .lie import NilpotentLie
from .model import AlgGroupModel, OrdinalIndex, StdSubgroup
from .quotient import ProjectionData, quotient

TERMINATED = "terminated"
MIXED_CENTER = "mixed-center-unsupported"
UNDETERMINED_LIMIT = "undetermined-limit"

MAX_CLIMB_EXTENSIONS = 8


@dataclass
class StageRecord:
    ordinal: OrdinalIndex
    subgroup: StdSubgroup


@dataclass
class SeriesReport:
    status: str
    stages: list[StageRecord]
    lam: OrdinalIndex | None
    hypercenter: StdSubgroup | None
    chain_certificates: list[ChainLimitResult] = field(default_factory=list)
    message: str = ""

    def stage_at(self, ordinal: OrdinalIndex) -> StdSubgroup | None:
        for s in self.stages:
            if s.ordinal == ordinal:
                return s.subgroup
        return None


def _weights_outside(model: AlgGroupModel, m_rows) -> SubgroupOfFgA:
    """Subgroup of X spanned by weights whose space is not inside M."""
    gens = []
    d = model.lie.dim
    for idxs in model.weight_spaces().values():
        units = []
        for i in idxs:
            row = [Fraction(0)] * d
            row[i] = Fraction(1)
            units.append(row)
        if not span_contains(m_rows, units, d):
            gens.append(model.weights[idxs[0]])
    return model.x.subgroup(gens)


def ucs(
    model: AlgGroupModel,
    max_finite_steps: int = 64,
    max_limit_stages: int = 8,
    chain_depth: int = 32,
    cancel_check: "Callable[[], bool] | None" = None,
) -> SeriesReport:
    stages: list[StageRecord] = []
    certs: list[ChainLimitResult] = []
    cur = model
    stack: list[ProjectionData] = []
    fmap = list(range(model.f.n))

    def pull(s_cur: StdSubgroup) -> StdSubgroup:
        out = s_cur
        for pd in reversed(stack):
            out = pd.pull_std(out)
        return out

    def push_lattice(y_orig: SubgroupOfFgA) -> SubgroupOfFgA:
        y = y_orig
        for pd in stack:
            y = pd.push_y(y)
        return y

    def report(status: str, lam=None, message: str = "") -> SeriesReport:
        hc = None
        if status == TERMINATED:
            hc = stages[-1].subgroup if stages else model.trivial_subgroup()
        return SeriesReport(status, stages, lam, hc, certs, message)

    ident = Hom.identity(model.x)
    deltas = [
        model.action_x[g].sub(ident) for g in model.f.small_generating_set()
    ]

    def attempt_limit(z_next: StdSubgroup, m: int):
        """Decide what to do at the cap: ('extend'|'jump'|'undet', payload)."""
        if z_next.m or not z_next.k.is_trivial():
            # a Lie or finite increment is still pending; climbing on is
            # guaranteed to absorb it (both increment finitely often)
            return "extend", None
        block = [
            s for s in stages if s.ordinal.limit == m and s.ordinal.finite > 0
        ]
        if len(block) < 3:
            return "undet", "step cap too small to expose a stable tail"
        a, b, c = block[-3:]
        if not (a.subgroup.m == b.subgroup.m == c.subgroup.m):
            return "undet", "Lie increments still active at the step cap"
        if not (
            a.subgroup.k.indices == b.subgroup.k.indices == c.subgroup.k.indices
        ):
            return "undet", "finite increments still active at the step cap"
        w = _weights_outside(model, c.subgroup.m)
        if apply_step(w, deltas, a.subgroup.y) != b.subgroup.y or apply_step(
            w, deltas, b.subgroup.y
        ) != c.subgroup.y:
            return "undet", "tail does not follow the stable lattice recurrence"
        try:
            res = chain_limit(c.subgroup.y, w, deltas, max_depth=chain_depth)
        except ChainNotDescending as exc:
            return "undet", str(exc)
        certs.append(res)
        if res.kind == UNDETERMINED:
            return "undet", res.reason or "chain limit undetermined"
        if res.reaches_finitely:
            return "extend", None
        # no finite element may start acting trivially on a deeper lattice:
        # a candidate must be central, trivial on the Lie quotient, and
        # kill the stable span (its displacement sinks into the core)
        satcore = stable_core(w, deltas).saturation()
        rev: dict[int, int] = {}
        for f_orig, g in enumerate(fmap):
            rev.setdefault(g, f_orig)
        for g in cur.f.center().indices:
            if g == cur.f.identity or not cur.lie_action_is_identity(g):
                continue
            if cur.action_x[g].is_identity():
                return "extend", None
            delta = model.action_x[rev[g]].sub(ident)
            if satcore.contains(delta.image(res.deep)):
                return (
                    "undet",
                    f"finite element {cur.f.names[g]} might centralize the "
                    "lattice beyond the step cap",
                )
        return "jump", (res, [list(r) for r in c.subgroup.m], c.subgroup.k)

    m = 0
    while True:
        budget = max_finite_steps
        extensions = 0
        t = 1
        jump_payload = None
        while True:
            if cancel_check is not None and cancel_check():
                raise Cancelled("series computation cancelled between stages")
            try:
                z = center(cur)
            except MixedCenterUnsupported as exc:
                return report(MIXED_CENTER, message=str(exc))
            if z.is_trivial():
                lam = stages[-1].ordinal if stages else OrdinalIndex(0, 0)
                return report(TERMINATED, lam=lam)
            if t > budget:
                verdict, payload = attempt_limit(z, m)
                if verdict == "undet":
                    return report(UNDETERMINED_LIMIT, message=payload)
                if verdict == "jump":
                    jump_payload = payload
                    break
                if extensions >= MAX_CLIMB_EXTENSIONS:
                    return report(
                        UNDETERMINED_LIMIT,
                        message="climb extensions exhausted before stabilization",
                    )
                extensions += 1
                budget += chain_depth
            pulled = pull(z)
            if stages and not pulled.contains(stages[-1].subgroup):
                raise RuntimeError("central series failed to ascend")
            stages.append(StageRecord(OrdinalIndex(m, t), pulled))
            cur, pd = quotient(cur, z)
            stack.append(pd)
            fmap = [int(pd.f_proj[i]) for i in fmap]
            t += 1

        if m + 1 > max_limit_stages:
            return report(
                UNDETERMINED_LIMIT, message="limit-stage budget exhausted"
            )
        res, m_stab, k_stab = jump_payload
        s_lim = StdSubgroup(model, m_stab, res.limit, k_stab)
        if stages and not s_lim.contains(stages[-1].subgroup):
            raise RuntimeError("limit stage failed to ascend")
        stages.append(StageRecord(OrdinalIndex(m + 1, 0), s_lim))
        z_cur = StdSubgroup(
            cur, [], push_lattice(res.limit), cur.f.trivial_subgroup()
        )
        cur, pd = quotient(cur, z_cur)
        stack.append(pd)
        fmap = [int(pd.f_proj[i]) for i in fmap]
        m += 1


def hypercenter(
    model: AlgGroupModel, **kwargs
) -> tuple[StdSubgroup, OrdinalIndex, SeriesReport]:
    rep = ucs(model, **kwargs)
    if rep.status == MIXED_CENTER:
        raise MixedCenterUnsupported(rep.message)
    if rep.status == UNDETERMINED_LIMIT:
        raise UndeterminedLimit(rep.message)
    return rep.hypercenter, rep.lam, rep


def z_omega(model: AlgGroupModel, **kwargs) -> StdSubgroup:
    """The stage at the first limit ordinal (= the hypercenter when the
    series stabilizes earlier)."""
    rep = ucs(model, **kwargs)
    s = rep.stage_at(OrdinalIndex(1, 0))
    if s is not None:
        return s
    if rep.status == TERMINATED and rep.lam < OrdinalIndex(1, 0):
        return rep.hypercenter
    if rep.status == MIXED_CENTER:
        raise MixedCenterUnsupported(rep.message)
    raise UndeterminedLimit(rep.message or "series did not reach the limit stage")


def nilpotency_class(model: AlgGroupModel, **kwargs) -> int | None:
    """Length of the ascending series when it exhausts the group in
    finitely many steps, None otherwise."""
    rep = ucs(model, **kwargs)
    if rep.status == MIXED_CENTER:
        raise MixedCenterUnsupported(rep.message)
    if rep.status == UNDETERMINED_LIMIT:
        raise UndeterminedLimit(rep.message)
    if rep.lam.limit == 0 and rep.hypercenter.is_full():
        return rep.lam.finite
    return None


def submodel(model: AlgGroupModel, s: StdSubgroup) -> AlgGroupModel:
    """A standard subgroup as a model in its own right."""
    s.validate()
    d = model.lie.dim
    xsub, proj_hom, section = s.y.quotient()

    basis = [list(r) for r in s.m]
    entries = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            w = model.lie.bracket(basis[i], basis[j])
            coeffs = solve(basis, w) if basis else []
            if coeffs is None:
                raise RuntimeError("bracket left the subalgebra")
            for k, cf in enumerate(coeffs):
                if cf:
                    entries.append((i, j, k, cf))
    lie_sub = NilpotentLie(len(basis), entries)

    weights_sub = []
    for row in basis:
        pivot = next(i for i, v in enumerate(row) if v)
        weights_sub.append(proj_hom.apply(model.weights[pivot]))

    kgrp, old_idx = s.k.as_group()
    action_sub = []
    faction_sub = []
    for knew in range(kgrp.n):
        old = old_idx[knew]
        cols = []
        for j in range(xsub.width):
            lift = [section[r][j] for r in range(model.x.width)]
            cols.append(proj_hom.apply(model.action_x[old].apply(lift)))
        action_sub.append(
            Hom(
                xsub,
                xsub,
                [[cols[j][r] for j in range(xsub.width)] for r in range(xsub.width)],
            )
        )
        fcols = []
        for row in basis:
            img = mat_apply(model.faction[old], row)
            cf = solve(basis, img)
            if cf is None:
                raise RuntimeError("finite action left the subalgebra")
            fcols.append(cf)
        faction_sub.append(
            [
                [fcols[a][b] for a in range(len(basis))]
                for b in range(len(basis))
            ]
        )
    return AlgGroupModel(
        model.char, xsub, kgrp, action_sub, lie_sub, weights_sub, faction_sub
    )


def nilpotency_class_sub(
    model: AlgGroupModel, s: StdSubgroup, **kwargs
) -> int | None:
    return nilpotency_class(submodel(model, s), **kwargs)
