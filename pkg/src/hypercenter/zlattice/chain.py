"""Limits of descending subgroup chains driven by a step operator.

The chains handled here have the shape

    Y_0 = start,   Y_{i+1} = T(Y_i) = W + sum_j M_j(Y_i)

with W a fixed subgroup and M_j endomorphisms of the ambient group.
``chain_limit`` computes the intersection of all Y_i.  Two mechanisms
are used: plain iteration when the chain reaches a fixed point, and a
unit-factor split otherwise.  For the split, the ambient group is cut
down by the saturated T-stable core W_inf, the step descends to a free
quotient where a single integer matrix governs it, and the limit's
free directions are exactly the generalized eigenspaces whose
characteristic factors have unit constant term (such factors have all
roots of norm one in their number rings, so they never lose index;
every other factor keeps multiplying the index up and dies in the
intersection).  The candidate found this way is pulled back, iterated,
and accepted only once T fixes it, which makes the returned limit
sound by construction: T(S) = S and S <= start force S <= Y_i for all i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import Matrix, Poly, Symbol, factor_list

from ..errors import ChainNotDescending
from .fga import FgAbelian, Hom, SubgroupOfFgA
from .intmat import (
    IntMat,
    hermite_row_basis,
    identity_matrix,
    kernel_basis,
    lattice_saturation,
    lattice_sum,
    mat_mul,
    mat_transpose,
    mat_vec,
    solve_int,
)

FIXED_POINT = "fixed-point"
UNIT_SPLIT = "unit-split"
UNDETERMINED = "undetermined"


@dataclass
class ChainLimitResult:
    """Outcome of a chain-limit computation.

    ``limit`` is the intersection subgroup when kind is fixed-point or
    unit-split, None otherwise.  ``depth`` counts step applications:
    for a fixed point it is the first i with T(Y_i) = Y_i.
    """

    kind: str
    limit: SubgroupOfFgA | None
    depth: int
    unit_factors: list[str] = field(default_factory=list)
    nonunit_factors: list[str] = field(default_factory=list)
    reason: str | None = None
    # deepest iterate the analysis saw; its projection spans the stable part
    deep: SubgroupOfFgA | None = None
    # True when the chain provably reaches the limit at a finite index
    # (the limit keeps full rank in the free quotient), False when it
    # provably never does, None when undetermined
    reaches_finitely: bool | None = None


def apply_step(w: SubgroupOfFgA, endos: list[Hom], y: SubgroupOfFgA) -> SubgroupOfFgA:
    """One application of T: W + sum of the endomorphism images."""
    out = w
    for m in endos:
        out = out.sum_with(m.image(y))
    return out


def stable_core(w: SubgroupOfFgA, endos: list[Hom], cap: int = 512) -> SubgroupOfFgA:
    """Smallest T-stable subgroup above W: ascending closure under the M_j."""
    cur = w
    for _ in range(cap):
        nxt = apply_step(w, endos, cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise RuntimeError("stable core failed to close")


def _poly_at_matrix(coeffs: list[int], a: IntMat) -> IntMat:
    """Evaluate an integer polynomial (descending coeffs) at a square matrix."""
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for c in coeffs:
        out = mat_mul(out, a)
        for i in range(n):
            out[i][i] += c
    return out


def _mat_power(a: IntMat, e: int) -> IntMat:
    out = identity_matrix(len(a))
    base = [row[:] for row in a]
    while e:
        if e & 1:
            out = mat_mul(out, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return out


def chain_limit(
    start: SubgroupOfFgA,
    w: SubgroupOfFgA,
    endos: list[Hom],
    max_depth: int = 32,
) -> ChainLimitResult:
    """Intersection of the chain Y_0 = start, Y_{i+1} = W + sum M_j(Y_i).

    Requires T(start) <= start; raises ChainNotDescending otherwise.
    Returns a fixed-point certificate when iteration stabilizes, a
    unit-split certificate when the split analysis produces a verified
    fixed point, and an undetermined result otherwise.
    """
    ambient = start.ambient
    if w.ambient != ambient:
        raise ValueError("W lives in a different group")
    for m in endos:
        if m.src != ambient or m.dst != ambient:
            raise ValueError("step endomorphism has the wrong type")

    first = apply_step(w, endos, start)
    if not start.contains(first):
        raise ChainNotDescending("step operator does not descend from the start")

    # plain iteration
    cur = start
    for depth in range(max_depth + 1):
        nxt = apply_step(w, endos, cur)
        if nxt == cur:
            return ChainLimitResult(
                FIXED_POINT, cur, depth, deep=cur, reaches_finitely=True
            )
        cur = nxt
    deep = cur

    # unit-factor split on the free quotient by the saturated stable core
    core = stable_core(w, endos, cap=max(512, 4 * max_depth))
    sat_core = core.saturation()
    quot, proj, _section = sat_core.quotient()
    if quot.invariants:
        raise RuntimeError("quotient by a saturated subgroup must be free")

    down = [SubgroupOfFgA(quot, [proj.apply(b) for b in y.basis]) for y in (deep, apply_step(w, endos, deep))]
    bar_deep, bar_next = down
    if len(bar_next.basis) != len(bar_deep.basis):
        return ChainLimitResult(
            UNDETERMINED, None, max_depth, reason="rank still dropping at the depth cap"
        )

    basis = bar_deep.basis
    m = len(basis)
    if m == 0:
        cand = proj.preimage(quot.trivial_subgroup()).intersect(deep)
        return _finish(w, endos, cand, max_depth, [], [], deep, proj, quot, m)

    # matrix of the common descended endomorphism in the deep basis:
    # push a lift of each basis vector through M_j, project, re-express
    bt = mat_transpose(basis)
    all_cols: list[list[list[int]]] = []
    for mj in endos:
        this = []
        for b in basis:
            x = _lift(proj, b, ambient)
            img = proj.apply(mj.apply(x))
            c = solve_int(bt, img)
            if c is None:
                return ChainLimitResult(
                    UNDETERMINED, None, max_depth, reason="descended step left the stable span"
                )
            this.append(c)
        all_cols.append(this)
    for other in all_cols[1:]:
        if other != all_cols[0]:
            return ChainLimitResult(
                UNDETERMINED,
                None,
                max_depth,
                reason="distinct endomorphisms on the stable span",
            )
    a_mat = mat_transpose(all_cols[0])

    x = Symbol("x")
    charpoly = Poly(Matrix(a_mat).charpoly(x).as_expr(), x)
    _, factors = factor_list(charpoly)
    unit_factors: list[str] = []
    nonunit_factors: list[str] = []
    vu_rows: list[list[int]] = []
    for fac, exp in factors:
        fac = Poly(fac, x)
        const = int(fac.eval(0))
        if abs(const) == 1:
            unit_factors.append(f"({fac.as_expr()})^{int(exp)}")
            coeffs = [int(c) for c in fac.all_coeffs()]
            ker = kernel_basis(_mat_power(_poly_at_matrix(coeffs, a_mat), int(exp)), m)
            vu_rows = lattice_sum(vu_rows, ker, m)
        else:
            nonunit_factors.append(f"({fac.as_expr()})^{int(exp)}")
    s_bar_coords = lattice_saturation(vu_rows, m) if vu_rows else []

    # back to ambient coordinates: coords . basis, then preimage and settle
    s_bar_rows = [mat_vec(bt, c) for c in s_bar_coords]
    s_bar = SubgroupOfFgA(quot, s_bar_rows)
    cand = proj.preimage(s_bar).intersect(deep)
    return _finish(
        w, endos, cand, max_depth, unit_factors, nonunit_factors, deep, proj, quot, m
    )


def _finish(w, endos, cand, max_depth, unit_factors, nonunit_factors, deep, proj, quot, m):
    res = _settle(w, endos, cand, max_depth, unit_factors, nonunit_factors)
    res.deep = deep
    if res.kind == UNIT_SPLIT:
        down = SubgroupOfFgA(quot, [proj.apply(b) for b in res.limit.basis])
        # full rank kept in the free quotient means the deep part goes
        # stale downstairs, so the chain becomes stationary upstairs too
        res.reaches_finitely = len(down.basis) == m
    return res


def _lift(proj: Hom, b: list[int], ambient: FgAbelian) -> list[int]:
    """Some preimage of b under the projection (exists: proj is onto)."""
    sol = solve_int(proj.mat, list(b))
    if sol is None:
        raise RuntimeError("projection is not surjective")
    return ambient.reduce(sol)


def _settle(
    w: SubgroupOfFgA,
    endos: list[Hom],
    cand: SubgroupOfFgA,
    max_depth: int,
    unit_factors: list[str],
    nonunit_factors: list[str],
) -> ChainLimitResult:
    """Iterate T from the candidate until it is fixed, then certify."""
    cur = cand
    for extra in range(max_depth + 1):
        nxt = apply_step(w, endos, cur)
        if nxt == cur:
            return ChainLimitResult(
                UNIT_SPLIT, cur, max_depth + extra, unit_factors, nonunit_factors
            )
        if not cur.contains(nxt):
            break
        cur = nxt
    return ChainLimitResult(
        UNDETERMINED,
        None,
        2 * max_depth,
        unit_factors,
        nonunit_factors,
        reason="candidate limit did not settle to a fixed point",
    )
