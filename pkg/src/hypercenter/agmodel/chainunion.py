"""Union of an ascending chain of standard subgroups.

An ascending chain of standard subgroups has eventually constant M and K
parts (both live in fixed finite-dimensional/finite containers), so its
union is determined by the limit of the Y parts, which is a descending
lattice chain of exactly the kind zlattice.chain computes.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ChainNotDescending, NotAscending, UndeterminedLimit
from ..zlattice.chain import UNDETERMINED, apply_step, chain_limit
from ..zlattice.fga import Hom, SubgroupOfFgA
from .model import AlgGroupModel, StdSubgroup


@dataclass(frozen=True)
class SelfSimilarChain:
    """Chain S_0 <= S_1 <= ... with Y_{t+1} = W + sum M_j(Y_t).

    ``start`` is S_0; its M and K parts are the constant values along
    the chain.  ``w`` and ``endos`` describe the Y-part step.
    """

    start: StdSubgroup
    w: SubgroupOfFgA
    endos: list[Hom]


def chain_union_subgroups(
    model: AlgGroupModel,
    chain: "SelfSimilarChain | list[StdSubgroup]",
    max_depth: int = 32,
    prefix: int = 4,
) -> StdSubgroup:
    """Smallest standard subgroup containing every term of the chain.

    Explicit finite chains are checked pairwise and yield their last
    term.  Self-similar chains yield the chain-limit of the Y parts;
    an uncertified limit raises UndeterminedLimit.
    """
    if isinstance(chain, SelfSimilarChain):
        return _union_self_similar(model, chain, max_depth, prefix)
    terms = list(chain)
    if not terms:
        raise NotAscending("empty chain")
    for a, b in zip(terms, terms[1:]):
        if not b.contains(a):
            raise NotAscending("chain terms are not ascending")
    return terms[-1]


def _union_self_similar(
    model: AlgGroupModel, chain: SelfSimilarChain, max_depth: int, prefix: int
) -> StdSubgroup:
    if chain.start.model is not model:
        raise NotAscending("chain starts in a different model")
    y = chain.start.y
    for _ in range(prefix):
        nxt = apply_step(chain.w, chain.endos, y)
        if not y.contains(nxt):
            raise NotAscending("Y step is not descending, chain is not ascending")
        y = nxt
    try:
        res = chain_limit(chain.start.y, chain.w, chain.endos, max_depth)
    except ChainNotDescending as e:
        raise NotAscending(str(e)) from e
    if res.kind == UNDETERMINED or res.limit is None:
        raise UndeterminedLimit("chain limit could not be certified")
    return StdSubgroup(model, chain.start.m, res.limit, chain.start.k)
