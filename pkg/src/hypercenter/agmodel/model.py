"""Algebraic group models and their standard subgroups.

A model is (U x| D(X)) x| F in dual form: a finitely generated abelian
character group X for the diagonalizable part, a finite group F acting
on X, and a nilpotent rational Lie algebra standing for the unipotent
part, graded by X-weights and acted on by F compatibly.  In positive
characteristic the Lie part must be zero.

A standard subgroup is a triple (M, Y, K): a subspace M of the Lie
part, a subgroup Y of X cutting out the diagonalizable piece D(X/Y)
(larger Y means smaller subgroup), and a subgroup K of F.  Containment
is componentwise with the Y-order reversed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputFormatError
from ..finitegrp.group import FiniteGroup, SubgroupOfFinite
from ..zlattice.fga import FgAbelian, Hom, SubgroupOfFgA
from ..zlattice.intmat import IntVec
from ..zlattice.ratlin import (
    RatMat,
    identity_rat,
    mat_apply,
    mat_eq_rat,
    mat_product,
    rank,
    rref,
    span_contains,
    span_eq,
)
from .lie import NilpotentLie


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class AlgGroupModel:
    def __init__(
        self,
        char: int,
        x_group: FgAbelian,
        f_group: FiniteGroup,
        action_x: list[Hom],
        lie: NilpotentLie,
        weights: list[IntVec],
        faction: list[RatMat],
    ):
        if char != 0 and not _is_prime(char):
            raise InputFormatError("characteristic must be 0 or a prime")
        if char != 0 and lie.dim != 0:
            raise InputFormatError(
                "positive characteristic requires a trivial unipotent part"
            )
        self.char = char
        self.x = x_group
        self.f = f_group
        self.lie = lie

        if len(action_x) != f_group.n:
            raise InputFormatError("need one lattice action per finite element")
        for h in action_x:
            if h.src != x_group or h.dst != x_group:
                raise InputFormatError("lattice action has the wrong type")
        if not action_x[f_group.identity].is_identity():
            raise InputFormatError("identity must act trivially on the lattice")
        for a in range(f_group.n):
            for b in range(f_group.n):
                c = f_group.table[a, b]
                if not action_x[c].eq(action_x[a].compose(action_x[b])):
                    raise InputFormatError("lattice action is not a homomorphism")
        self.action_x = action_x

        if len(weights) != lie.dim:
            raise InputFormatError("need one weight per Lie basis vector")
        self.weights = [x_group.reduce(list(w)) for w in weights]
        for i in range(lie.dim):
            for j in range(lie.dim):
                target = x_group.add(self.weights[i], self.weights[j])
                for k, c in enumerate(lie.table[i][j]):
                    if c and not x_group.eq(self.weights[k], target):
                        raise InputFormatError(
                            f"bracket [e{i},e{j}] breaks the weight grading at e{k}"
                        )

        if len(faction) != f_group.n:
            raise InputFormatError("need one Lie action per finite element")
        d = lie.dim
        for m in faction:
            if len(m) != d or any(len(r) != d for r in m):
                raise InputFormatError("Lie action matrix has the wrong shape")
            if d and rank(m, d) != d:
                raise InputFormatError("Lie action matrix is singular")
        self.faction = [[[Fraction(x) for x in r] for r in m] for m in faction]
        if d:
            if not mat_eq_rat(self.faction[f_group.identity], identity_rat(d)):
                raise InputFormatError("identity must act trivially on the Lie part")
            for a in range(f_group.n):
                for b in range(f_group.n):
                    c = f_group.table[a, b]
                    if not mat_eq_rat(
                        self.faction[c], mat_product(self.faction[a], self.faction[b])
                    ):
                        raise InputFormatError("Lie action is not a homomorphism")
            for fidx in range(f_group.n):
                m = self.faction[fidx]
                # bracket automorphism
                for i in range(d):
                    for j in range(i + 1, d):
                        lhs = mat_apply(m, lie.table[i][j])
                        rhs = lie.bracket(
                            [m[r][i] for r in range(d)], [m[r][j] for r in range(d)]
                        )
                        if lhs != rhs:
                            raise InputFormatError(
                                "Lie action does not preserve the bracket"
                            )
                # weight compatibility: column i supported on f(weight_i) spaces
                for i in range(d):
                    target = self.action_x[fidx].apply(self.weights[i])
                    for k in range(d):
                        if m[k][i] and not x_group.eq(self.weights[k], target):
                            raise InputFormatError(
                                "Lie action does not permute the weight spaces"
                            )

    def __repr__(self) -> str:
        return (
            f"AlgGroupModel(char={self.char}, X={self.x!r}, |F|={self.f.n}, "
            f"dim L={self.lie.dim})"
        )

    def lie_action_is_identity(self, fi: int) -> bool:
        d = self.lie.dim
        m = self.faction[fi]
        return all(
            m[r][c] == (1 if r == c else 0) for r in range(d) for c in range(d)
        )

    # -- weight bookkeeping -------------------------------------------------

    def weight_key(self, i: int) -> tuple[int, ...]:
        return self.x.element_key(self.weights[i])

    def weight_spaces(self) -> dict[tuple[int, ...], list[int]]:
        out: dict[tuple[int, ...], list[int]] = {}
        for i in range(self.lie.dim):
            out.setdefault(self.weight_key(i), []).append(i)
        return out

    def support_weights(self) -> list[IntVec]:
        """One representative per weight with a nonzero space."""
        seen = {}
        for i in range(self.lie.dim):
            seen.setdefault(self.weight_key(i), self.weights[i])
        return list(seen.values())

    # -- standard subgroups ---------------------------------------------------

    def trivial_subgroup(self) -> "StdSubgroup":
        return StdSubgroup(self, [], self.x.full_subgroup(), self.f.trivial_subgroup())

    def full_subgroup(self) -> "StdSubgroup":
        return StdSubgroup(
            self, self.lie.full_subspace(), self.x.trivial_subgroup(), self.f.full_subgroup()
        )

    def canonical_form(self) -> tuple:
        """Structural fingerprint; equal for structurally identical models."""
        return (
            self.char,
            self.x.rank,
            self.x.invariants,
            tuple(tuple(tuple(r) for r in h.mat) for h in self.action_x),
            tuple(tuple(int(v) for v in row) for row in self.f.table),
            tuple(
                tuple(tuple(c for c in v) for v in row) for row in self.lie.table
            ),
            tuple(tuple(w) for w in self.weights),
            tuple(tuple(tuple(c for c in r) for r in m) for m in self.faction),
        )


class StdSubgroup:
    """(M, Y, K): Lie subspace, lattice subgroup, finite subgroup."""

    def __init__(
        self,
        model: AlgGroupModel,
        m_rows: RatMat,
        y: SubgroupOfFgA,
        k: SubgroupOfFinite,
    ):
        if y.ambient != model.x:
            raise InputFormatError("Y lives in the wrong lattice")
        if k.group is not model.f:
            raise InputFormatError("K lives in the wrong finite group")
        self.model = model
        self.m = rref(m_rows, model.lie.dim)
        self.y = y
        self.k = k

    def __repr__(self) -> str:
        return (
            f"StdSubgroup(dim M={len(self.m)}, Y index={self.y.index_in_ambient()}, "
            f"|K|={self.k.order()})"
        )

    def key(self) -> tuple:
        return (
            tuple(tuple(v) for v in self.m),
            self.y.key(),
            self.k.indices,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StdSubgroup)
            and self.model is other.model
            and self.key() == other.key()
        )

    def __hash__(self) -> int:
        return hash((id(self.model), self.key()))

    def is_trivial(self) -> bool:
        return not self.m and self.y.is_full() and self.k.is_trivial()

    def is_full(self) -> bool:
        return (
            len(self.m) == self.model.lie.dim
            and self.y.is_trivial()
            and self.k.is_full()
        )

    def contains(self, other: "StdSubgroup") -> bool:
        """Subgroup order: bigger M, smaller Y, bigger K."""
        return (
            span_contains(self.m, other.m, self.model.lie.dim)
            and other.y.contains(self.y)
            and self.k.contains(other.k)
        )

    def validate(self) -> None:
        """Check the triple really cuts out a subgroup."""
        model = self.model
        if not model.lie.is_subalgebra(self.m):
            raise InputFormatError("M is not a Lie subalgebra")
        if not _is_homogeneous(model, self.m):
            raise InputFormatError("M is not spanned by weight vectors")
        for kk in self.k.indices:
            img = [mat_apply(model.faction[kk], v) for v in self.m]
            if not span_eq(img, self.m, model.lie.dim):
                raise InputFormatError("M is not K-stable")
            if model.action_x[kk].image(self.y) != self.y:
                raise InputFormatError("Y is not K-stable")


def _is_homogeneous(model: AlgGroupModel, rows: RatMat) -> bool:
    """M decomposes as the sum of its weight components."""
    if not rows:
        return True
    spaces = model.weight_spaces()
    pieces: RatMat = []
    for idxs in spaces.values():
        for v in rows:
            proj = [Fraction(0)] * model.lie.dim
            for i in idxs:
                proj[i] = v[i]
            if any(proj) and not span_contains(rows, [proj], model.lie.dim):
                return False
            pieces.append(proj)
    return span_eq(pieces, rows, model.lie.dim)


@dataclass(frozen=True, order=True)
class OrdinalIndex:
    """omega * limit + finite, ordered lexicographically."""

    limit: int
    finite: int

    def __post_init__(self):
        if self.limit < 0 or self.finite < 0:
            raise ValueError("ordinal parts must be nonnegative")

    def __str__(self) -> str:
        if self.limit == 0:
            return str(self.finite)
        s = f"omega*{self.limit}"
        if self.finite:
            s += f"+{self.finite}"
        return s

    def is_limit(self) -> bool:
        return self.limit > 0 and self.finite == 0

    def successor(self) -> "OrdinalIndex":
        return OrdinalIndex(self.limit, self.finite + 1)


# -- model-level predicates ---------------------------------------------------


def is_connected(model: AlgGroupModel) -> bool:
    if model.f.n != 1:
        return False
    if model.char == 0:
        return model.x.invariants == ()
    p = model.char
    for d in model.x.invariants:
        while d % p == 0:
            d //= p
        if d != 1:
            return False
    return True


def is_commutative(model: AlgGroupModel) -> bool:
    if not model.lie.is_abelian() or not model.f.is_abelian():
        return False
    if any(not h.is_identity() for h in model.action_x):
        return False
    d = model.lie.dim
    if d and any(
        not mat_eq_rat(m, identity_rat(d)) for m in model.faction
    ):
        return False
    return all(model.x.is_zero(w) for w in model.weights)


def is_unipotent_subgroup(S: StdSubgroup) -> bool:
    """U_M x| D(X/Y) x| K is unipotent iff the diagonalizable part dies
    and K contributes no semisimple elements."""
    if not S.y.is_full():
        return False
    if S.model.char == 0:
        return S.k.is_trivial()
    return S.k.is_p_group(S.model.char)


def is_mult_type_subgroup(S: StdSubgroup) -> bool:
    if S.m:
        return False
    kg, _ = S.k.as_group()
    if not kg.is_abelian():
        return False
    if S.model.char != 0 and S.k.order() % S.model.char == 0:
        return False
    return True
