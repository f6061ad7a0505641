"""Finite groups as explicit Cayley tables.

Elements are integer indices into an n x n multiplication table.
Subgroups are sorted index tuples.  The quotient construction labels
cosets by their least member and relabels them 0..m-1, so repeated
quotients stay deterministic.

Tables are capped at 2048 elements; full associativity validation runs
only up to 512 (it is cubic) - larger tables must come from trusted
constructors with validate=False.
"""

from __future__ import annotations

import numpy as np

from ..errors import InputFormatError, PreconditionViolated
from .backend import kernels

MAX_ORDER = 2048
MAX_VALIDATE_ASSOC = 512


class FiniteGroup:
    def __init__(self, table, names: list[str] | None = None, validate: bool = True):
        t = np.asarray(table, dtype=np.int32)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise InputFormatError("multiplication table must be square")
        n = t.shape[0]
        if n == 0:
            raise InputFormatError("group cannot be empty")
        if n > MAX_ORDER:
            raise InputFormatError(f"group order {n} exceeds the cap {MAX_ORDER}")
        if t.min() < 0 or t.max() >= n:
            raise InputFormatError("table entries out of range")
        self.table = t
        self.n = n
        if names is None:
            names = [f"a{i}" for i in range(n)]
        if len(names) != n or len(set(names)) != n:
            raise InputFormatError("element names must be distinct, one per element")
        self.names = list(names)

        if validate:
            expect = np.arange(n, dtype=np.int32)
            if not all(np.array_equal(np.sort(t[i]), expect) for i in range(n)):
                raise InputFormatError("table rows are not permutations")
            if not all(np.array_equal(np.sort(t[:, i]), expect) for i in range(n)):
                raise InputFormatError("table columns are not permutations")

        # identity: the unique e with e*x = x*e = x
        ident = -1
        for i in range(n):
            if np.array_equal(t[i], np.arange(n)) and np.array_equal(t[:, i], np.arange(n)):
                ident = i
                break
        if ident < 0:
            raise InputFormatError("table has no identity element")
        self.identity = ident

        inv = np.full(n, -1, dtype=np.int32)
        rows, cols = np.nonzero(t == ident)
        inv[rows] = cols
        if (inv < 0).any():
            raise InputFormatError("some element has no inverse")
        self.inv = inv

        if validate and n <= MAX_VALIDATE_ASSOC:
            if not kernels.check_associativity(t):
                raise InputFormatError("table is not associative")

    # -- basics ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.n})"

    def mult(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conjugate(self, g: int, x: int) -> int:
        return int(self.table[self.table[g, x], self.inv[g]])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mult(x, a)
            k += 1
        return k

    def exponent(self) -> int:
        out = 1
        for a in range(self.n):
            o = self.element_order(a)
            g = np.gcd(out, o)
            out = out // g * o
        return out

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def structure_key(self) -> tuple:
        """Isomorphism-sensitive fingerprint (not complete, but canonical
        for equal tables): order plus the sorted multiset of element orders."""
        return (self.n, tuple(sorted(self.element_order(a) for a in range(self.n))))

    # -- subgroups --------------------------------------------------------

    def subgroup(self, indices) -> "SubgroupOfFinite":
        return SubgroupOfFinite(self, indices)

    def trivial_subgroup(self) -> "SubgroupOfFinite":
        return SubgroupOfFinite(self, [self.identity])

    def full_subgroup(self) -> "SubgroupOfFinite":
        return SubgroupOfFinite(self, range(self.n))

    def generated(self, gens) -> "SubgroupOfFinite":
        seed = np.zeros(self.n, dtype=bool)
        seed[self.identity] = True
        for g in gens:
            seed[g] = True
        mask = kernels.closure_mask(self.table, seed)
        return SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)

    def small_generating_set(self) -> list[int]:
        """Greedy generating set; empty for the trivial group."""
        gens: list[int] = []
        have = self.trivial_subgroup()
        for x in range(self.n):
            if not have.contains_element(x):
                gens.append(x)
                have = self.generated(gens)
                if have.is_full():
                    break
        return gens

    def normal_closure(self, gens) -> "SubgroupOfFinite":
        seed = np.zeros(self.n, dtype=bool)
        seed[self.identity] = True
        for g in gens:
            seed[g] = True
        mask = kernels.conjugate_closure_mask(self.table, self.inv, seed)
        return SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)

    def center(self) -> "SubgroupOfFinite":
        mask = kernels.center_mask(self.table)
        return SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)

    def centralizer(self, sub: "SubgroupOfFinite") -> "SubgroupOfFinite":
        mask = kernels.centralizer_mask(self.table, sub.mask)
        return SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)

    def conjugacy_classes(self) -> list[np.ndarray]:
        seen = np.zeros(self.n, dtype=bool)
        out = []
        for x in range(self.n):
            if seen[x]:
                continue
            cls = np.unique(self.table[self.table[:, x], self.inv])
            seen[cls] = True
            out.append(cls)
        return out

    # -- quotients ----------------------------------------------------------

    def quotient(self, sub: "SubgroupOfFinite") -> tuple["FiniteGroup", np.ndarray, list[int]]:
        """Quotient by a normal subgroup.

        Returns (Q, proj, reps): proj maps each element to its coset
        index, reps picks the least element of each coset.
        """
        if sub.group is not self:
            raise PreconditionViolated("subgroup belongs to a different group")
        if not sub.is_normal():
            raise PreconditionViolated("quotient requires a normal subgroup")
        labels = kernels.coset_min_labels(self.table, sub.mask)
        reps = np.unique(labels)
        relabel = np.full(self.n, -1, dtype=np.int32)
        relabel[reps] = np.arange(reps.size, dtype=np.int32)
        proj = relabel[labels]
        qtable = proj[self.table[np.ix_(reps, reps)]]
        qnames = [self.names[int(r)] for r in reps]
        q = FiniteGroup(qtable, names=qnames, validate=False)
        return q, proj, [int(r) for r in reps]

    def preimage(self, proj: np.ndarray, qsub: "SubgroupOfFinite") -> "SubgroupOfFinite":
        mask = qsub.mask[proj]
        return SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)

    # -- series ---------------------------------------------------------------

    def upper_central_series(self) -> list["SubgroupOfFinite"]:
        """Ascending centers [Z_1, Z_2, ...] until stable."""
        out = []
        current = self.trivial_subgroup()
        while True:
            q, proj, _ = self.quotient(current)
            zq = q.center()
            nxt = self.preimage(proj, zq)
            if nxt == current:
                return out
            out.append(nxt)
            current = nxt

    def hypercenter(self) -> "SubgroupOfFinite":
        series = self.upper_central_series()
        return series[-1] if series else self.trivial_subgroup()

    def is_nilpotent(self) -> bool:
        return self.hypercenter().is_full()

    def nilpotency_class(self) -> int | None:
        series = self.upper_central_series()
        if series and series[-1].is_full():
            return len(series)
        if not series and self.n == 1:
            return 0
        return None

    def lower_central_series(self) -> list["SubgroupOfFinite"]:
        """Descending [G, G], [G, [G,G]], ... until stable (G excluded)."""
        out = []
        full = self.full_subgroup()
        current = full
        while True:
            comm = kernels.commutator_set_mask(self.table, self.inv, full.mask, current.mask)
            comm[self.identity] = True
            nxt_mask = kernels.conjugate_closure_mask(self.table, self.inv, comm)
            nxt = SubgroupOfFinite(self, np.flatnonzero(nxt_mask), _closed=True)
            if nxt == current:
                return out
            out.append(nxt)
            current = nxt

    # -- normal structure -------------------------------------------------------

    def normal_subgroups(self) -> list["SubgroupOfFinite"]:
        """All normal subgroups, found by joining conjugacy classes."""
        classes = self.conjugacy_classes()
        triv = self.trivial_subgroup()
        found: dict[tuple, SubgroupOfFinite] = {triv.indices: triv}
        frontier = [triv]
        while frontier:
            base = frontier.pop()
            for cls in classes:
                if base.mask[cls[0]]:
                    continue
                seed = base.mask.copy()
                seed[cls] = True
                mask = kernels.conjugate_closure_mask(self.table, self.inv, seed)
                sub = SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)
                if sub.indices not in found:
                    found[sub.indices] = sub
                    frontier.append(sub)
        return sorted(found.values(), key=lambda s: (s.order(), s.indices))

    def fitting_subgroup(self) -> "SubgroupOfFinite":
        """Join of all nilpotent normal subgroups."""
        members = np.zeros(self.n, dtype=bool)
        members[self.identity] = True
        for sub in self.normal_subgroups():
            if sub.as_group()[0].is_nilpotent():
                members |= sub.mask
        mask = kernels.closure_mask(self.table, members)
        out = SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)
        if not out.as_group()[0].is_nilpotent():
            raise PreconditionViolated("join of nilpotent normals failed to be nilpotent")
        return out

    def hypercenter_by_intersection(self) -> "SubgroupOfFinite":
        """Intersection of all normal N with Z(G/N) trivial."""
        mask = np.ones(self.n, dtype=bool)
        for sub in self.normal_subgroups():
            q, _, _ = self.quotient(sub)
            if q.center().order() == 1:
                mask &= sub.mask
        return SubgroupOfFinite(self, np.flatnonzero(mask), _closed=True)


class SubgroupOfFinite:
    def __init__(self, group: FiniteGroup, indices, _closed: bool = False):
        self.group = group
        idx = sorted(int(i) for i in set(int(j) for j in np.asarray(list(indices), dtype=np.int64).ravel()))
        if not idx:
            idx = [group.identity]
        for i in idx:
            if not 0 <= i < group.n:
                raise InputFormatError("subgroup index out of range")
        self.indices = tuple(idx)
        mask = np.zeros(group.n, dtype=bool)
        mask[list(idx)] = True
        self.mask = mask
        if not _closed:
            if not mask[group.identity]:
                raise InputFormatError("subgroup must contain the identity")
            closed = kernels.closure_mask(group.table, mask)
            if not np.array_equal(closed, mask):
                raise InputFormatError("subset is not closed under multiplication")

    def __repr__(self) -> str:
        return f"SubgroupOfFinite(order={len(self.indices)} of {self.group.n})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupOfFinite)
            and self.group is other.group
            and self.indices == other.indices
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.indices))

    def order(self) -> int:
        return len(self.indices)

    def is_full(self) -> bool:
        return len(self.indices) == self.group.n

    def is_trivial(self) -> bool:
        return self.indices == (self.group.identity,)

    def contains(self, other: "SubgroupOfFinite") -> bool:
        return bool(self.mask[list(other.indices)].all())

    def contains_element(self, x: int) -> bool:
        return bool(self.mask[x])

    def is_normal(self) -> bool:
        g = self.group
        for x in self.indices:
            conj = np.unique(g.table[g.table[:, x], g.inv])
            if not self.mask[conj].all():
                return False
        return True

    def intersect(self, other: "SubgroupOfFinite") -> "SubgroupOfFinite":
        return SubgroupOfFinite(self.group, np.flatnonzero(self.mask & other.mask), _closed=True)

    def join(self, other: "SubgroupOfFinite") -> "SubgroupOfFinite":
        mask = kernels.closure_mask(self.group.table, self.mask | other.mask)
        return SubgroupOfFinite(self.group, np.flatnonzero(mask), _closed=True)

    def as_group(self) -> tuple[FiniteGroup, np.ndarray]:
        """The subgroup as a group of its own; also returns the index map
        new -> old (the inverse map is a dict lookup on indices)."""
        old = np.array(self.indices, dtype=np.int32)
        back = np.full(self.group.n, -1, dtype=np.int32)
        back[old] = np.arange(old.size, dtype=np.int32)
        table = back[self.group.table[np.ix_(old, old)]]
        names = [self.group.names[int(i)] for i in old]
        return FiniteGroup(table, names=names, validate=False), old

    def is_p_group(self, p: int) -> bool:
        n = self.order()
        while n % p == 0:
            n //= p
        return n == 1


# -- constructors ----------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InputFormatError("cyclic group needs n >= 1")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    names = [f"r{i}" if i else "e" for i in range(n)]
    return FiniteGroup(table, names=names, validate=False)


def abelian(invariants: list[int]) -> FiniteGroup:
    """Direct product of cyclic groups, row-major element indexing."""
    g = cyclic(1)
    for d in invariants:
        g = direct_product(g, cyclic(d))
    return g


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    na, nb = a.n, b.n
    ia = np.arange(na * nb) // nb
    ib = np.arange(na * nb) % nb
    table = a.table[np.ix_(ia, ia)] * nb + b.table[np.ix_(ib, ib)]
    names = [f"{a.names[x]}.{b.names[y]}" if na > 1 and nb > 1 else
             (b.names[y] if na == 1 else a.names[x])
             for x, y in zip(ia, ib)]
    return FiniteGroup(table, names=names, validate=False)


def semidirect_product(a: FiniteGroup, h: FiniteGroup, act: np.ndarray) -> FiniteGroup:
    """A x| H with H acting on A.

    act[k] is the permutation of A's elements given by the action of
    H's k-th element; pairs (x, k) are indexed x * |H| + k and multiply
    by (x1, k1)(x2, k2) = (x1 * act[k1][x2], k1 k2).
    """
    act = np.asarray(act, dtype=np.int32)
    if act.shape != (h.n, a.n):
        raise InputFormatError("action array has the wrong shape")
    for k in range(h.n):
        perm = act[k]
        if not np.array_equal(np.sort(perm), np.arange(a.n)):
            raise InputFormatError("action is not by permutations")
        if not np.array_equal(perm[a.table], a.table[np.ix_(perm, perm)]):
            raise InputFormatError("action is not by automorphisms")
    if not np.array_equal(act[h.identity], np.arange(a.n)):
        raise InputFormatError("identity must act trivially")
    for k1 in range(h.n):
        for k2 in range(h.n):
            if not np.array_equal(act[h.table[k1, k2]], act[k1][act[k2]]):
                raise InputFormatError("action is not a homomorphism")

    n = a.n * h.n
    ix = np.arange(n) // h.n
    ik = np.arange(n) % h.n
    x2_twisted = act[np.ix_(ik, ix)]                     # act[k1][x2]
    ax = a.table[ix[:, None], x2_twisted]                # x1 * act[k1][x2]
    hk = h.table[np.ix_(ik, ik)]
    table = ax * h.n + hk
    names = [f"{a.names[x]}|{h.names[k]}" for x, k in zip(ix, ik)]
    return FiniteGroup(table, names=names, validate=False)


def dihedral(n: int) -> FiniteGroup:
    """Order 2n: rotations r^i and reflections s r^i."""
    if n < 1:
        raise InputFormatError("dihedral needs n >= 1")
    rot = cyclic(n)
    flip = cyclic(2)
    act = np.vstack([np.arange(n), (-np.arange(n)) % n]).astype(np.int32)
    return semidirect_product(rot, flip, act)


def quaternion8() -> FiniteGroup:
    """The eight quaternions 1, -1, i, -i, j, -j, k, -k."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    idx = {s: t for t, s in enumerate(names)}

    def nm(s):
        return s[1:] if s.startswith("-") else "-" + s

    base = {
        ("1", "1"): "1", ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(x, y):
        sx, x0 = (True, x[1:]) if x.startswith("-") else (False, x)
        sy, y0 = (True, y[1:]) if y.startswith("-") else (False, y)
        if x0 == "1":
            z = y0
        elif y0 == "1":
            z = x0
        else:
            z = base[(x0, y0)]
        return nm(z) if sx != sy else z

    table = [[idx[mul(x, y)] for y in names] for x in names]
    return FiniteGroup(table, names=names, validate=False)


def from_permutations(perms: list[list[int]]) -> FiniteGroup:
    """Group generated by permutations (as images lists over 0..m-1)."""
    if not perms:
        raise InputFormatError("need at least one permutation")
    m = len(perms[0])
    elems: list[tuple[int, ...]] = [tuple(range(m))]
    seen = {elems[0]}
    for p in perms:
        if sorted(p) != list(range(m)):
            raise InputFormatError("not a permutation of 0..m-1")
    frontier = [tuple(p) for p in perms]
    while frontier:
        p = frontier.pop()
        if p in seen:
            continue
        seen.add(p)
        elems.append(p)
        if len(elems) > MAX_ORDER:
            raise InputFormatError("permutation group exceeds the order cap")
        for q in list(seen):
            for r in ((tuple(p[i] for i in q)), (tuple(q[i] for i in p))):
                if r not in seen:
                    frontier.append(r)
    elems = sorted(elems)
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    table = np.zeros((n, n), dtype=np.int32)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = index[tuple(p[x] for x in q)]
    names = ["perm" + "".join(str(x) for x in p) for p in elems]
    return FiniteGroup(table, names=names, validate=False)


def symmetric(n: int) -> FiniteGroup:
    if n < 1 or n > 6:
        raise InputFormatError("symmetric group supported for 1 <= n <= 6")
    if n == 1:
        return cyclic(1)
    swap = [1, 0] + list(range(2, n))
    cyc = list(range(1, n)) + [0]
    return from_permutations([swap, cyc])
