"""Center of a model, in standard-subgroup form.

The center meets the three layers separately.  The Lie part collects
weight-zero vectors killed by the bracket and fixed by the finite
action.  The lattice part Y grows by every image of (action - id) and
by all weights, so D(X/Y) is exactly the subtorus acting trivially and
fixed by F.  The finite part keeps central elements acting trivially
on both the lattice and the Lie part.

A central element can also sit over a nontrivial finite coset, as a
finite element dressed with a compensating torus point.  Such elements
are not expressible as a standard subgroup, so `center` detects them
and raises instead of returning a wrong answer.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import MixedCenterUnsupported
from ..zlattice.fga import Hom, SubgroupOfFgA
from ..zlattice.intmat import kernel_basis
from ..zlattice.ratlin import RatMat, nullspace, span_intersection
from .model import AlgGroupModel, StdSubgroup


def _lie_center_space(model: AlgGroupModel) -> RatMat:
    d = model.lie.dim
    if d == 0:
        return []
    cur = model.lie.center_space()
    zero_rows: RatMat = []
    for i in range(d):
        if model.x.is_zero(model.weights[i]):
            row = [Fraction(0)] * d
            row[i] = Fraction(1)
            zero_rows.append(row)
    cur = span_intersection(cur, zero_rows, d)
    for fi in range(model.f.n):
        if fi == model.f.identity:
            continue
        m = model.faction[fi]
        delta = [
            [m[r][c] - (Fraction(1) if r == c else Fraction(0)) for c in range(d)]
            for r in range(d)
        ]
        cur = span_intersection(cur, nullspace(delta, d), d)
    return cur


def _moved_characters(model: AlgGroupModel) -> SubgroupOfFgA:
    """Sum of im(action(f) - id) over nontrivial f."""
    y = model.x.trivial_subgroup()
    ident = Hom.identity(model.x)
    full = model.x.full_subgroup()
    for fi in range(model.f.n):
        if fi == model.f.identity:
            continue
        y = y.sum_with(model.action_x[fi].sub(ident).image(full))
    return y


def _center_y(model: AlgGroupModel) -> SubgroupOfFgA:
    y = _moved_characters(model)
    if model.weights:
        y = y.sum_with(model.x.subgroup(model.weights))
    return y


def _center_k(model: AlgGroupModel):
    keep = [
        i
        for i in model.f.center().indices
        if model.action_x[i].is_identity() and model.lie_action_is_identity(i)
    ]
    return model.f.subgroup(keep)


def center_parts(model: AlgGroupModel) -> StdSubgroup:
    """The standard part of the center, without the mixed-coset check."""
    return StdSubgroup(
        model, _lie_center_space(model), _center_y(model), _center_k(model)
    )


def _block_scalar(model: AlgGroupModel, fi: int, idxs: list[int]):
    """Return c if faction(fi) acts on the span of idxs as c*id, else None."""
    m = model.faction[fi]
    c = m[idxs[0]][idxs[0]]
    for k in idxs:
        for i in idxs:
            want = c if k == i else Fraction(0)
            if m[k][i] != want:
                return None
    return c


def mixed_center_obstruction(model: AlgGroupModel) -> list[int]:
    """Finite elements outside K_Z that a torus point can centralize.

    Such an element g fixes the lattice, sits in the center of F, and
    scales each nonzero weight space by +-1.  A dressing torus point t
    must hit the inverse scalar on each weight and be fixed by F, so it
    exists iff the prescribed signs are consistent with every relation
    the weights and moved characters satisfy in X.
    """
    if model.lie.dim == 0:
        return []
    kz = set(_center_k(model).indices)
    spaces = model.weight_spaces()
    moved = _moved_characters(model)
    out = []
    for fi in model.f.center().indices:
        if fi in kz or not model.action_x[fi].is_identity():
            continue
        sign_gens = []
        ok = True
        for idxs in spaces.values():
            c = _block_scalar(model, fi, idxs)
            if c == 1:
                t = 0
            elif c == -1:
                t = 1
            else:
                ok = False
                break
            sign_gens.append((model.weights[idxs[0]], t))
        if not ok:
            continue
        gens = [g for g, _ in sign_gens] + list(moved.basis)
        signs = [t for _, t in sign_gens] + [0] * len(moved.basis)
        # relations among the generators inside X
        width = model.x.width
        rel_rows = model.x.relation_rows()
        stacked = [
            [g[w] for g in gens] + [r[w] for r in rel_rows] for w in range(width)
        ]
        consistent = True
        for v in kernel_basis(stacked, len(gens) + len(rel_rows)):
            if sum(v[i] * signs[i] for i in range(len(gens))) % 2 != 0:
                consistent = False
                break
        if consistent:
            out.append(fi)
    return out


def center(model: AlgGroupModel, check_mixed: bool = True) -> StdSubgroup:
    if check_mixed:
        bad = mixed_center_obstruction(model)
        if bad:
            names = [model.f.names[i] for i in bad]
            raise MixedCenterUnsupported(
                "center has components over finite elements "
                + ", ".join(names)
                + " dressed with torus points; not a standard subgroup",
                witness=bad,
            )
    return center_parts(model)


def _pprime_part(model: AlgGroupModel, k) -> list[int]:
    p = model.char
    if p == 0:
        return list(k.indices)
    return [i for i in k.indices if model.f.element_order(i) % p != 0]


def center_s(model: AlgGroupModel) -> StdSubgroup:
    """The semisimple slice of the center: no Lie part, the full moved
    quotient on the torus, and the part of K_Z of order prime to the
    characteristic."""
    kz = _center_k(model)
    return StdSubgroup(
        model,
        [],
        _center_y(model),
        model.f.subgroup(_pprime_part(model, kz)),
    )
