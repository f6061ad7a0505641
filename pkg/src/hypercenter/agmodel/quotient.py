"""Quotients by normal standard subgroups.

Quotienting (M, Y, K) out of a model keeps the shape: the Lie part
becomes L/M on the basis vectors surviving outside M, the character
group becomes Y itself (characters of the image torus are the ones
that vanish on D(X/Y)), and the finite part becomes F/K.  The
preconditions below are exactly what normality plus shape-preservation
demand; anything else raises PreconditionViolated.

The returned ProjectionData converts standard subgroups of the
quotient back to the source model, which is how central series stages
are reported in one coordinate system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionViolated
from ..zlattice.fga import Hom, SubgroupOfFgA
from ..zlattice.intmat import IntMat
from ..zlattice.ratlin import RatMat, solve, span_contains, span_eq
from .lie import NilpotentLie
from .model import AlgGroupModel, StdSubgroup, _is_homogeneous


def _check_normal(model: AlgGroupModel, s: StdSubgroup) -> None:
    d = model.lie.dim
    if not model.lie.is_ideal(s.m):
        raise PreconditionViolated("M must be an ideal of the Lie part")
    if not _is_homogeneous(model, s.m):
        raise PreconditionViolated("M must be a sum of weight components")
    for fi in range(model.f.n):
        img = [
            [
                sum(model.faction[fi][r][c] * v[c] for c in range(d))
                for r in range(d)
            ]
            for v in s.m
        ]
        if not span_eq(img, s.m, d):
            raise PreconditionViolated("M must be stable under the finite action")
        if model.action_x[fi].image(s.y) != s.y:
            raise PreconditionViolated("Y must be stable under the finite action")
    spaces = model.weight_spaces()
    for idxs in spaces.values():
        units: RatMat = []
        for i in idxs:
            row = [Fraction(0)] * d
            row[i] = Fraction(1)
            units.append(row)
        if not span_contains(s.m, units, d):
            if not s.y.contains_element(model.weights[idxs[0]]):
                raise PreconditionViolated(
                    "weights surviving the Lie quotient must lie in Y"
                )
    if not s.k.is_normal():
        raise PreconditionViolated("K must be normal in the finite part")
    kept = _kept_indices(model, s.m)
    for k in s.k.indices:
        for row in s.y.basis:
            if not model.x.eq(model.action_x[k].apply(row), model.x.reduce(row)):
                raise PreconditionViolated("K must act trivially on Y")
        # trivial induced action on L/M: columns at kept indices shift by M
        for i in kept:
            col = [model.faction[k][r][i] for r in range(d)]
            col[i] -= 1
            if any(col) and not span_contains(s.m, [col], d):
                raise PreconditionViolated(
                    "K must act trivially on the Lie quotient"
                )


def _kept_indices(model: AlgGroupModel, m_rows: RatMat) -> list[int]:
    pivots = set()
    for row in m_rows:
        for c, v in enumerate(row):
            if v:
                pivots.add(c)
                break
    return [i for i in range(model.lie.dim) if i not in pivots]


@dataclass
class ProjectionData:
    src: AlgGroupModel
    dst: AlgGroupModel
    quotiented: StdSubgroup
    kept: list[int]
    y_incl: Hom
    y_cproj: IntMat
    f_proj: object
    f_reps: object

    def _embed_lie(self, v) -> list[Fraction]:
        out = [Fraction(0)] * self.src.lie.dim
        for a, i in enumerate(self.kept):
            out[i] = Fraction(v[a])
        return out

    def pull_y(self, y_dst: SubgroupOfFgA) -> SubgroupOfFgA:
        gens = [self.y_incl.apply(row) for row in y_dst.basis]
        return self.src.x.subgroup(gens)

    def push_y(self, y_src: SubgroupOfFgA) -> SubgroupOfFgA:
        """Rewrite a subgroup of the source lattice contained in the
        quotiented Y in quotient coordinates."""
        gens = [
            self.quotiented.y.member_coords(row, self.y_cproj)
            for row in y_src.basis
        ]
        return self.dst.x.subgroup(gens)

    def pull_std(self, s_dst: StdSubgroup) -> StdSubgroup:
        m_rows = [list(r) for r in self.quotiented.m]
        m_rows += [self._embed_lie(v) for v in s_dst.m]
        return StdSubgroup(
            self.src,
            m_rows,
            self.pull_y(s_dst.y),
            self.src.f.preimage(self.f_proj, s_dst.k),
        )


def quotient(
    model: AlgGroupModel, s: StdSubgroup
) -> tuple[AlgGroupModel, ProjectionData]:
    if s.model is not model:
        raise PreconditionViolated("subgroup belongs to a different model")
    _check_normal(model, s)

    d = model.lie.dim
    kept = _kept_indices(model, s.m)
    dq = len(kept)
    solve_rows = [list(r) for r in s.m] + [
        [Fraction(1) if c == i else Fraction(0) for c in range(d)] for i in kept
    ]

    def reduce_vec(v) -> list[Fraction]:
        if dq == 0:
            return []
        coeffs = solve(solve_rows, list(v))
        return [coeffs[len(s.m) + a] for a in range(dq)]

    entries = []
    for a in range(dq):
        for b in range(a + 1, dq):
            w = reduce_vec(model.lie.table[kept[a]][kept[b]])
            for c, coeff in enumerate(w):
                if coeff:
                    entries.append((a, b, c, coeff))
    lie_q = NilpotentLie(dq, entries)

    xq, incl, cproj = s.y.as_group()

    f_quot, f_proj, f_reps = model.f.quotient(s.k)

    incl_cols = [
        [incl.mat[r][j] for r in range(model.x.width)] for j in range(xq.width)
    ]
    action_q = []
    for q in range(f_quot.n):
        rep = f_reps[q]
        cols = [
            s.y.member_coords(model.action_x[rep].apply(col), cproj)
            for col in incl_cols
        ]
        mat = [[cols[j][r] for j in range(xq.width)] for r in range(xq.width)]
        action_q.append(Hom(xq, xq, mat))

    weights_q = [
        s.y.member_coords(model.weights[i], cproj) for i in kept
    ]

    faction_q = []
    for q in range(f_quot.n):
        rep = f_reps[q]
        cols = []
        for i in kept:
            col = [model.faction[rep][r][i] for r in range(d)]
            cols.append(reduce_vec(col))
        faction_q.append(
            [[cols[a][b] for a in range(dq)] for b in range(dq)]
        )

    dst = AlgGroupModel(
        model.char, xq, f_quot, action_q, lie_q, weights_q, faction_q
    )
    data = ProjectionData(
        src=model,
        dst=dst,
        quotiented=s,
        kept=kept,
        y_incl=incl,
        y_cproj=cproj,
        f_proj=f_proj,
        f_reps=f_reps,
    )
    return dst, data
