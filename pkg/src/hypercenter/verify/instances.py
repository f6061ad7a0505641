"""Named fixture models and seeded random instance families.

Every constructor returns a fully validated object: algebraic models go
through the AlgGroupModel invariant checks, finite groups through the
Cayley table checks.  Random families draw from small palettes so that
each generated instance is valid by construction; the seed determines
the instance completely.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from hypercenter.agmodel.lie import NilpotentLie
from hypercenter.agmodel.model import AlgGroupModel
from hypercenter.errors import InputFormatError
from hypercenter.finitegrp.group import (
    FiniteGroup,
    abelian,
    cyclic,
    dihedral,
    direct_product,
    quaternion8,
    semidirect_product,
    symmetric,
)
from hypercenter.zlattice.fga import FgAbelian, Hom

import numpy as np


def _identity_mats(dim: int, n: int) -> list:
    return [[[1 if r == c else 0 for c in range(dim)] for r in range(dim)] for _ in range(n)]


def _cyclic_acts(x: FgAbelian, gen_mat, order: int) -> list[Hom]:
    """Actions of cyclic(order), element i acting by the i-th power."""
    g = Hom(x, x, gen_mat)
    acts = [Hom.identity(x)]
    cur = Hom.identity(x)
    for _ in range(order - 1):
        cur = g.compose(cur)
        acts.append(cur)
    return acts


def _no_lie(model_char: int, x: FgAbelian, f: FiniteGroup, acts: list[Hom]) -> AlgGroupModel:
    return AlgGroupModel(model_char, x, f, acts, NilpotentLie(0, []), [], [[] for _ in range(f.n)])


# -- named fixtures ---------------------------------------------------------


def example1(p: int = 3) -> AlgGroupModel:
    """Rank-1 torus with a two-element component group acting by inversion."""
    x = FgAbelian(1)
    f = cyclic(2)
    return _no_lie(p, x, f, [Hom.identity(x), Hom(x, x, [[-1]])])


def mu_chain(l: int, p: int = 0) -> AlgGroupModel:
    """Torus of rank l-1 with a cyclic(l) rotation whose fixed lattice is 0.

    The generator acts by the companion matrix of the degree-(l-1)
    cyclotomic polynomial, so the finite central stages form an
    index-l^i tower; l must be prime.
    """
    if l not in (2, 3, 5, 7, 11, 13):
        raise InputFormatError("mu_chain needs a prime l at most 13")
    r = l - 1
    x = FgAbelian(r)
    gen = [[0] * r for _ in range(r)]
    for i in range(1, r):
        gen[i][i - 1] = 1
    for i in range(r):
        gen[i][r - 1] = -1
    return _no_lie(p, x, cyclic(l), _cyclic_acts(x, gen, l))


def dihedral_dual(n: int, p: int = 0) -> AlgGroupModel:
    """Cyclic 2^n-torsion diagonalizable part inverted by a two-element group."""
    if not 1 <= n <= 6:
        raise InputFormatError("dihedral_dual needs 1 <= n <= 6")
    x = FgAbelian(0, (2**n,))
    f = cyclic(2)
    return _no_lie(p, x, f, [Hom.identity(x), Hom(x, x, [[-1]])])


def heisenberg_torus(weights: tuple[int, int, int] = (1, -1, 0)) -> AlgGroupModel:
    """Rank-1 torus acting on a Heisenberg Lie algebra by the given weights."""
    w1, w2, w3 = weights
    if w3 != w1 + w2:
        raise InputFormatError("bracket weight must be the sum of the factors")
    x = FgAbelian(1)
    f = cyclic(1)
    lie = NilpotentLie(3, [(0, 1, 2, Fraction(1))])
    return AlgGroupModel(
        0, x, f, [Hom.identity(x)], lie, [[w1], [w2], [w3]], _identity_mats(3, 1)
    )


def hxgm() -> AlgGroupModel:
    """Heisenberg group times a central rank-1 torus."""
    return heisenberg_torus((0, 0, 0))


def ga_gm() -> AlgGroupModel:
    """One-dimensional unipotent part scaled by a rank-1 torus with weight 1."""
    x = FgAbelian(1)
    f = cyclic(1)
    return AlgGroupModel(
        0, x, f, [Hom.identity(x)], NilpotentLie(1, []), [[1]], _identity_mats(1, 1)
    )


def heisenberg() -> AlgGroupModel:
    """Plain Heisenberg group: no torus, no component group."""
    x = FgAbelian(0)
    f = cyclic(1)
    lie = NilpotentLie(3, [(0, 1, 2, Fraction(1))])
    return AlgGroupModel(0, x, f, [Hom.identity(x)], lie, [[], [], []], _identity_mats(3, 1))


def filiform_torus() -> AlgGroupModel:
    """Class-3 filiform algebra of dimension 4 with a central rank-1 torus."""
    x = FgAbelian(1)
    f = cyclic(1)
    lie = NilpotentLie(4, [(0, 1, 2, Fraction(1)), (0, 2, 3, Fraction(1))])
    return AlgGroupModel(
        0, x, f, [Hom.identity(x)], lie, [[0], [0], [0], [0]], _identity_mats(4, 1)
    )


def torus(rank: int, p: int = 0) -> AlgGroupModel:
    """Split torus of the given rank; rank 0 is the trivial group."""
    if not 0 <= rank <= 4:
        raise InputFormatError("torus needs 0 <= rank <= 4")
    x = FgAbelian(rank)
    f = cyclic(1)
    return _no_lie(p, x, f, [Hom.identity(x)])


# -- random palettes --------------------------------------------------------

# (modulus, unit, multiplicative order of the unit)
_UNIT_TABLE = [(5, 2, 4), (7, 2, 3), (7, 3, 6), (8, 3, 2), (9, 2, 6), (16, 3, 4)]

_BRIDGE_CHAINS = [
    (2,), (3,), (4,), (5,), (7,), (8,), (9,), (16,),
    (2, 2), (2, 4), (2, 6), (3, 3), (4, 4), (2, 2, 2), (6,), (12,),
]


def _identity_hom_list(x: FgAbelian, n: int) -> list[Hom]:
    return [Hom.identity(x) for _ in range(n)]


def _neg_identity(width: int):
    return [[-1 if r == c else 0 for c in range(width)] for r in range(width)]


def _pick_f_action(rng: random.Random, x: FgAbelian):
    """A finite group together with a valid action on x, drawn from a palette."""
    width = x.rank + len(x.invariants)
    options = ["trivial", "inversion", "nonabelian-trivial"]
    if x.rank >= 2:
        options += ["swap", "rot3", "rot4"]
    if len(x.invariants) == 1 and x.rank == 0:
        for d, u, k in _UNIT_TABLE:
            if d == x.invariants[0]:
                options.append("unit")
                break
    if (
        len(x.invariants) >= 2
        and x.rank == 0
        and x.invariants[0] == x.invariants[1]
    ):
        options.append("swap-torsion")
    kind = rng.choice(options)

    if kind == "trivial":
        f = cyclic(1)
        return f, _identity_hom_list(x, 1)
    if kind == "inversion":
        f = cyclic(2)
        return f, [Hom.identity(x), Hom(x, x, _neg_identity(width))]
    if kind == "nonabelian-trivial":
        f = rng.choice([symmetric(3), dihedral(4), quaternion8()])
        return f, _identity_hom_list(x, f.n)
    if kind in ("swap", "swap-torsion"):
        mat = [[1 if r == c else 0 for c in range(width)] for r in range(width)]
        a, b = (0, 1)
        mat[a][a] = mat[b][b] = 0
        mat[a][b] = mat[b][a] = 1
        return cyclic(2), [Hom.identity(x), Hom(x, x, mat)]
    if kind in ("rot3", "rot4"):
        block = [[0, -1], [1, -1]] if kind == "rot3" else [[0, -1], [1, 0]]
        order = 3 if kind == "rot3" else 4
        mat = [[1 if r == c else 0 for c in range(width)] for r in range(width)]
        for r in range(2):
            for c in range(2):
                mat[r][c] = block[r][c]
        return cyclic(order), _cyclic_acts(x, mat, order)
    # unit action on a single torsion coordinate
    d, u, k = next(t for t in _UNIT_TABLE if t[0] == x.invariants[0])
    return cyclic(k), _cyclic_acts(x, [[u]], k)


def _fixed_weight(rng: random.Random, x: FgAbelian, acts: list[Hom]) -> list[int]:
    """A small lattice element fixed by every action in the list."""
    width = x.rank + len(x.invariants)
    for _ in range(20):
        v = [rng.randrange(-2, 3) for _ in range(width)]
        if all(h.src.eq(h.apply(v), x.reduce(v)) for h in acts):
            return v
    return [0] * width


def _pick_lie(rng: random.Random, x: FgAbelian, acts: list[Hom]):
    """A graded nilpotent Lie part whose weights are fixed by the actions."""
    kind = rng.choice(["none", "none", "abelian", "abelian", "heis", "fil4"])
    if kind == "none":
        return NilpotentLie(0, []), []
    if kind == "abelian":
        k = rng.randrange(1, 4)
        return NilpotentLie(k, []), [_fixed_weight(rng, x, acts) for _ in range(k)]
    if kind == "heis":
        w1 = _fixed_weight(rng, x, acts)
        w2 = _fixed_weight(rng, x, acts)
        w3 = x.reduce([a + b for a, b in zip(w1, w2)])
        lie = NilpotentLie(3, [(0, 1, 2, Fraction(1))])
        return lie, [w1, w2, list(w3)]
    w0 = _fixed_weight(rng, x, acts)
    w1 = _fixed_weight(rng, x, acts)
    w2 = x.reduce([a + b for a, b in zip(w0, w1)])
    w3 = x.reduce([a + b for a, b in zip(w0, w2)])
    lie = NilpotentLie(4, [(0, 1, 2, Fraction(1)), (0, 2, 3, Fraction(1))])
    return lie, [w0, w1, list(w2), list(w3)]


def random_model(seed: int) -> AlgGroupModel:
    """General seeded model: rank at most 3, dim L at most 4, |F| at most 16."""
    rng = random.Random(f"model:{seed}")
    if rng.random() < 0.25:
        p = rng.choice([2, 3, 5])
        rank = rng.randrange(0, 3)
        tors = rng.choice([(), (2,), (3,), (4,), (2, 2), (p,), (p, p)])
        x = FgAbelian(rank, tors)
        f, acts = _pick_f_action(rng, x)
        return _no_lie(p, x, f, acts)
    rank = rng.randrange(0, 4)
    tors = rng.choice([(), (), (2,), (3,), (2, 4)])
    x = FgAbelian(rank, tors)
    f, acts = _pick_f_action(rng, x)
    lie, weights = _pick_lie(rng, x, acts)
    return AlgGroupModel(0, x, f, acts, lie, weights, _identity_mats(lie.dim, f.n))


def random_connected(seed: int) -> AlgGroupModel:
    """Seeded connected model: trivial component group, connected torsion."""
    rng = random.Random(f"connected:{seed}")
    f = cyclic(1)
    if rng.random() < 0.3:
        p = rng.choice([2, 3, 5])
        rank = rng.randrange(0, 4)
        tors = rng.choice([(), (p,), (p, p), (p, p * p), (p * p,)])
        x = FgAbelian(rank, tors)
        return _no_lie(p, x, f, [Hom.identity(x)])
    x = FgAbelian(rng.randrange(0, 4))
    acts = [Hom.identity(x)]
    lie, weights = _pick_weighted_lie(rng, x)
    return AlgGroupModel(0, x, f, [Hom.identity(x)], lie, weights, _identity_mats(lie.dim, 1))


def _pick_weighted_lie(rng: random.Random, x: FgAbelian):
    """Lie palette for trivial component groups: weights are unconstrained."""
    kind = rng.choice(["none", "abelian", "abelian", "heis", "heis", "fil4"])
    width = x.rank

    def w():
        return [rng.randrange(-2, 3) for _ in range(width)]

    if kind == "none":
        return NilpotentLie(0, []), []
    if kind == "abelian":
        k = rng.randrange(1, 4)
        return NilpotentLie(k, []), [w() for _ in range(k)]
    if kind == "heis":
        w1, w2 = w(), w()
        w3 = [a + b for a, b in zip(w1, w2)]
        return NilpotentLie(3, [(0, 1, 2, Fraction(1))]), [w1, w2, w3]
    w0, w1 = w(), w()
    w2 = [a + b for a, b in zip(w0, w1)]
    w3 = [a + b for a, b in zip(w0, w2)]
    lie = NilpotentLie(4, [(0, 1, 2, Fraction(1)), (0, 2, 3, Fraction(1))])
    return lie, [w0, w1, w2, w3]


def random_bridgeable(seed: int) -> AlgGroupModel:
    """Seeded model with finite diagonalizable part, total order at most 128."""
    rng = random.Random(f"bridge:{seed}")
    chain = rng.choice(_BRIDGE_CHAINS)
    x = FgAbelian(0, chain)
    xsize = 1
    for d in chain:
        xsize *= d

    options = ["trivial", "inversion"]
    if len(chain) >= 2 and chain[0] == chain[1]:
        options.append("swap-torsion")
    if len(chain) == 1 and any(t[0] == chain[0] for t in _UNIT_TABLE):
        options.append("unit")
    if xsize * 8 <= 128:
        options.append("nonabelian-trivial")
    kind = rng.choice(options)

    if kind == "trivial":
        f, acts = cyclic(1), None
    elif kind == "inversion":
        f, acts = cyclic(2), [Hom.identity(x), Hom(x, x, _neg_identity(len(chain)))]
    elif kind == "swap-torsion":
        mat = [[1 if r == c else 0 for c in range(len(chain))] for r in range(len(chain))]
        mat[0][0] = mat[1][1] = 0
        mat[0][1] = mat[1][0] = 1
        f, acts = cyclic(2), [Hom.identity(x), Hom(x, x, mat)]
    elif kind == "unit":
        d, u, k = next(t for t in _UNIT_TABLE if t[0] == chain[0])
        f, acts = cyclic(k), _cyclic_acts(x, [[u]], k)
    else:
        f = rng.choice([symmetric(3), dihedral(4), quaternion8()])
        acts = _identity_hom_list(x, f.n)
    if acts is None:
        acts = _identity_hom_list(x, 1)

    p = rng.choice([0, 0, 0, 5, 7, 11, 13])
    while p and (xsize % p == 0 or f.n % p == 0):
        p = rng.choice([5, 7, 11, 13, 0])
    return _no_lie(p, x, f, acts)


_SD_TABLE = [(5, 4, 2), (7, 3, 2), (9, 3, 4), (8, 2, 3), (13, 3, 3)]


def _sd_cyclic(n: int, k: int, u: int) -> FiniteGroup:
    """Cyclic(n) twisted by cyclic(k) acting through the unit u."""
    act = np.zeros((k, n), dtype=np.int64)
    for j in range(k):
        m = pow(u, j, n)
        for a in range(n):
            act[j, a] = (a * m) % n
    return semidirect_product(cyclic(n), cyclic(k), act)


def random_finite(seed: int, max_order: int = 64) -> FiniteGroup:
    """Seeded finite group of order at most max_order."""
    rng = random.Random(f"finite:{seed}:{max_order}")
    for _ in range(50):
        kind = rng.choice(
            ["cyclic", "abelian", "dihedral", "quaternion", "symmetric", "sd", "product"]
        )
        if kind == "cyclic":
            g = cyclic(rng.randrange(1, 21))
        elif kind == "abelian":
            g = abelian(list(rng.choice([(2, 2), (2, 4), (3, 3), (2, 2, 2), (4, 4), (6,), (2, 6)])))
        elif kind == "dihedral":
            g = dihedral(rng.randrange(3, 13))
        elif kind == "quaternion":
            g = quaternion8()
        elif kind == "symmetric":
            g = symmetric(rng.choice([3, 3, 4]))
        elif kind == "sd":
            n, k, u = rng.choice(_SD_TABLE)
            g = _sd_cyclic(n, k, u)
        else:
            a = cyclic(rng.randrange(2, 7))
            b = rng.choice([cyclic(2), cyclic(3), symmetric(3), quaternion8(), dihedral(4)])
            g = direct_product(a, b)
        if g.n <= max_order:
            return g
    return cyclic(rng.randrange(1, max_order + 1))


# -- spec plumbing ----------------------------------------------------------


@dataclass(frozen=True)
class InstanceSpec:
    """A reproducible instance description: family name plus parameters."""

    family: str
    params: tuple = ()

    def instance_id(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"


def spec(family: str, **params) -> InstanceSpec:
    return InstanceSpec(family, tuple(sorted(params.items())))


_FAMILIES = {
    "example1": example1,
    "mu_chain": mu_chain,
    "dihedral_dual": dihedral_dual,
    "heisenberg_torus": heisenberg_torus,
    "hxgm": hxgm,
    "ga_gm": ga_gm,
    "heisenberg": heisenberg,
    "filiform_torus": filiform_torus,
    "torus": torus,
    "random_model": random_model,
    "random_connected": random_connected,
    "random_bridgeable": random_bridgeable,
    "random_finite": random_finite,
}


def generate(s: InstanceSpec):
    """Build the instance a spec describes; unknown families are rejected."""
    if s.family not in _FAMILIES:
        raise InputFormatError(f"unknown instance family {s.family!r}")
    return _FAMILIES[s.family](**dict(s.params))
