"""Oracle bridge: models with finite X and no unipotent part are finite groups.

Over an algebraically closed field whose characteristic does not divide
|X|, the diagonalizable group D(X) is the constant group X* = Hom(X, Q/Z),
so the whole model is the abstract group X* x| F.  That group is small
enough for brute force, which makes it an independent oracle for center,
series, and Fitting computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

import numpy as np

from ..errors import PreconditionViolated
from ..finitegrp.group import FiniteGroup, SubgroupOfFinite, abelian, semidirect_product
from .model import AlgGroupModel, StdSubgroup


def _pairing_integral(phi, x, invariants) -> bool:
    # <phi, x> = sum phi_i x_i / d_i in Q/Z, tested via a common denominator
    lcm = 1
    for d in invariants:
        lcm = lcm * d // np.gcd(lcm, d)
    acc = 0
    for p, v, d in zip(phi, x, invariants):
        acc += p * v * (lcm // d)
    return acc % lcm == 0


@dataclass
class FiniteBridge:
    """Dictionary between standard subgroups and subgroups of the dual group."""

    model: AlgGroupModel
    group: FiniteGroup
    invariants: tuple[int, ...]
    _tuples: list[tuple[int, ...]] = field(repr=False)

    def _annihilator_indices(self, y) -> list[int]:
        rows = [list(r) for r in y.basis]
        return [
            i
            for i, phi in enumerate(self._tuples)
            if all(_pairing_integral(phi, r, self.invariants) for r in rows)
        ]

    def std_to_finite(self, s: StdSubgroup) -> SubgroupOfFinite:
        if s.m:
            raise PreconditionViolated("bridged subgroups cannot have a unipotent part")
        fn = self.model.f.n
        idxs = [a * fn + k for a in self._annihilator_indices(s.y) for k in s.k.indices]
        sub = self.group.generated(idxs)
        if sub.order() != len(idxs):
            raise PreconditionViolated("subgroup image is not closed; Y or K not stable")
        return sub

    def finite_to_std(self, sub: SubgroupOfFinite) -> StdSubgroup:
        fn = self.model.f.n
        ident = self.model.f.identity
        k_set = sorted({i % fn for i in sub.indices})
        a_part = [i // fn for i in sub.indices if i % fn == ident]
        if len(sub.indices) != len(a_part) * len(k_set):
            raise PreconditionViolated("subgroup is not in standard product form")
        k = self.model.f.generated(k_set)
        if sorted(k.indices) != k_set:
            raise PreconditionViolated("F-part of the subgroup is not a subgroup")
        phis = [self._tuples[a] for a in a_part]
        rows = [
            list(x)
            for x in itertools.product(*[range(d) for d in self.invariants])
            if all(_pairing_integral(phi, x, self.invariants) for phi in phis)
        ]
        res = StdSubgroup(self.model, [], self.model.x.subgroup(rows), k)
        back = self.std_to_finite(res)
        if sorted(back.indices) != sorted(sub.indices):
            raise PreconditionViolated("subgroup is not in standard product form")
        return res


def to_finite(model: AlgGroupModel) -> tuple[FiniteGroup, FiniteBridge]:
    """Realize a model with finite X and L = 0 as the group X* x| F."""
    if model.lie.dim != 0:
        raise PreconditionViolated("finite realization requires a trivial unipotent part")
    if model.x.rank != 0:
        raise PreconditionViolated("finite realization requires finite X")
    invs = model.x.invariants
    xsize = prod(invs) if invs else 1
    if model.char != 0:
        if xsize % model.char == 0 or model.f.n % model.char == 0:
            raise PreconditionViolated(
                "characteristic must not divide the order of X or F"
            )

    tuples = list(itertools.product(*[range(d) for d in invs]))
    index_of = {t: i for i, t in enumerate(tuples)}
    a_grp = abelian(list(invs))

    # dual action: (k . phi)(x) = phi(A_{k^-1} x), written out per coordinate
    act = np.zeros((model.f.n, xsize), dtype=np.int32)
    for k in range(model.f.n):
        ainv = model.action_x[model.f.inverse(k)].mat
        for idx, phi in enumerate(tuples):
            psi = []
            for j, dj in enumerate(invs):
                total = Fraction(0)
                for i, di in enumerate(invs):
                    total += Fraction(dj, di) * ainv[i][j] * phi[i]
                if total.denominator != 1:
                    raise PreconditionViolated("dual action left the character lattice")
                psi.append(total.numerator % dj)
            act[k][idx] = index_of[tuple(psi)]

    grp = semidirect_product(a_grp, model.f, act)
    return grp, FiniteBridge(model, grp, invs, tuples)
