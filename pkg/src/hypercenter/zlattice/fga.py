"""Finitely generated abelian groups, their subgroups, and homomorphisms.

A group X is stored in canonical coordinates: ``rank`` free coordinates
first, then one coordinate per torsion invariant d_1 | d_2 | ... | d_s
(each >= 2).  Elements are integer vectors of length rank + s with the
torsion coordinates reduced into [0, d_i).

A subgroup is a lattice in the free cover Z^width that contains the
relation lattice R = <d_i * e_{rank+i}>; its canonical basis is the row
Hermite form, so equal subgroups compare equal structurally.

Endomorphism/homomorphism matrices act on elements as columns:
``apply(x) = M @ x`` reduced in the target.  A matrix is accepted only
when it maps the source relation lattice into the target one, i.e. when
the map is well defined on the quotient groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import (
    IntMat,
    IntVec,
    hermite_row_basis,
    identity_matrix,
    kernel_basis,
    lattice_contains,
    lattice_eq,
    lattice_index,
    lattice_intersection,
    lattice_member,
    lattice_rank,
    lattice_saturation,
    lattice_sum,
    mat_eq,
    mat_mul,
    mat_transpose,
    mat_vec,
    smith_normal_form,
    solve_int,
    zero_matrix,
)


def _unimodular_inverse(v: IntMat) -> IntMat:
    """Inverse of a unimodular integer matrix, column by column."""
    n = len(v)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = solve_int(v, e)
        if x is None:
            raise ValueError("matrix is not unimodular")
        cols.append(x)
    return mat_transpose(cols)


class FgAbelian:
    """Z^rank  x  Z/d_1 x ... x Z/d_s in fixed free-first coordinates."""

    def __init__(self, rank: int, invariants: tuple[int, ...] = ()):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        inv = tuple(int(d) for d in invariants)
        for d in inv:
            if d < 2:
                raise ValueError("torsion invariants must be >= 2")
        for a, b in zip(inv, inv[1:]):
            if b % a != 0:
                raise ValueError("invariants must form a divisibility chain")
        self.rank = rank
        self.invariants = inv
        self.width = rank + len(inv)

    def __repr__(self) -> str:
        return f"FgAbelian(rank={self.rank}, invariants={self.invariants})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FgAbelian)
            and self.rank == other.rank
            and self.invariants == other.invariants
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.invariants))

    # -- elements ----------------------------------------------------

    def zero(self) -> IntVec:
        return [0] * self.width

    def reduce(self, v: IntVec) -> IntVec:
        if len(v) != self.width:
            raise ValueError("element has wrong length")
        out = list(v)
        for i, d in enumerate(self.invariants):
            out[self.rank + i] %= d
        return out

    def add(self, a: IntVec, b: IntVec) -> IntVec:
        return self.reduce([x + y for x, y in zip(a, b)])

    def neg(self, a: IntVec) -> IntVec:
        return self.reduce([-x for x in a])

    def scale(self, n: int, a: IntVec) -> IntVec:
        return self.reduce([n * x for x in a])

    def eq(self, a: IntVec, b: IntVec) -> bool:
        return self.reduce(a) == self.reduce(b)

    def is_zero(self, a: IntVec) -> bool:
        return self.reduce(a) == self.zero()

    def element_key(self, a: IntVec) -> tuple[int, ...]:
        return tuple(self.reduce(a))

    def relation_rows(self) -> list[IntVec]:
        rows = []
        for i, d in enumerate(self.invariants):
            row = [0] * self.width
            row[self.rank + i] = d
            rows.append(row)
        return rows

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int | None:
        if self.rank:
            return None
        n = 1
        for d in self.invariants:
            n *= d
        return n

    def elements(self) -> list[IntVec]:
        """All elements; only for finite groups."""
        if self.rank:
            raise ValueError("group is infinite")
        out = [[]]
        for d in self.invariants:
            out = [e + [r] for e in out for r in range(d)]
        return out

    def exponent(self) -> int | None:
        if self.rank:
            return None
        return self.invariants[-1] if self.invariants else 1

    # -- subgroup constructors ---------------------------------------

    def subgroup(self, generators: list[IntVec]) -> "SubgroupOfFgA":
        return SubgroupOfFgA(self, generators)

    def trivial_subgroup(self) -> "SubgroupOfFgA":
        return SubgroupOfFgA(self, [])

    def full_subgroup(self) -> "SubgroupOfFgA":
        return SubgroupOfFgA(self, identity_matrix(self.width))

    # -- presentation -> canonical coordinates ------------------------

    @staticmethod
    def from_relations(
        n_gens: int, relation_rows: list[IntVec]
    ) -> tuple["FgAbelian", IntMat, IntMat]:
        """Canonicalize Z^n_gens / <relation rows>.

        Returns (group, proj, section) where proj is width x n_gens,
        section is n_gens x width, old coordinates map to canonical ones
        by x -> reduce(proj @ x), and proj @ section = identity.
        """
        for r in relation_rows:
            if len(r) != n_gens:
                raise ValueError("relation row has wrong length")
        if n_gens == 0:
            return FgAbelian(0, ()), [], []
        if not relation_rows:
            grp = FgAbelian(n_gens, ())
            return grp, identity_matrix(n_gens), identity_matrix(n_gens)
        _, d, v = smith_normal_form([list(r) for r in relation_rows])
        m = len(relation_rows)
        diag = [d[i][i] for i in range(min(m, n_gens))]
        diag += [0] * (n_gens - len(diag))
        free_pos = [j for j in range(n_gens) if diag[j] == 0]
        tors_pos = [j for j in range(n_gens) if diag[j] >= 2]
        grp = FgAbelian(len(free_pos), tuple(diag[j] for j in tors_pos))
        vt = mat_transpose(v)
        vt_inv = mat_transpose(_unimodular_inverse(v))
        keep = free_pos + tors_pos
        proj = [vt[j] for j in keep]
        section = [[vt_inv[i][j] for j in keep] for i in range(n_gens)]
        return grp, proj, section


class SubgroupOfFgA:
    """Subgroup of an FgAbelian group, canonicalized as an HNF lattice."""

    def __init__(self, ambient: FgAbelian, generators: list[IntVec]):
        self.ambient = ambient
        rows = [list(g) for g in generators]
        for r in rows:
            if len(r) != ambient.width:
                raise ValueError("generator has wrong length")
        rows.extend(ambient.relation_rows())
        self.basis = hermite_row_basis(rows, ambient.width)

    def __repr__(self) -> str:
        return f"SubgroupOfFgA({self.ambient!r}, basis={self.basis})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SubgroupOfFgA)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient, tuple(tuple(r) for r in self.basis)))

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r) for r in self.basis)

    def _check_same_ambient(self, other: "SubgroupOfFgA") -> None:
        if self.ambient != other.ambient:
            raise ValueError("subgroups live in different groups")

    # -- membership and comparison ------------------------------------

    def contains_element(self, x: IntVec) -> bool:
        return lattice_member(self.ambient.reduce(x), self.basis)

    def contains(self, other: "SubgroupOfFgA") -> bool:
        self._check_same_ambient(other)
        return lattice_contains(self.basis, other.basis)

    def is_trivial(self) -> bool:
        return self.basis == hermite_row_basis(
            self.ambient.relation_rows(), self.ambient.width
        )

    def is_full(self) -> bool:
        return self.basis == identity_matrix(self.ambient.width)

    # -- lattice operations --------------------------------------------

    def sum_with(self, other: "SubgroupOfFgA") -> "SubgroupOfFgA":
        self._check_same_ambient(other)
        return SubgroupOfFgA(self.ambient, lattice_sum(self.basis, other.basis, self.ambient.width))

    def intersect(self, other: "SubgroupOfFgA") -> "SubgroupOfFgA":
        self._check_same_ambient(other)
        return SubgroupOfFgA(
            self.ambient, lattice_intersection(self.basis, other.basis, self.ambient.width)
        )

    def saturation(self) -> "SubgroupOfFgA":
        """Elements with a nonzero multiple inside self (includes all torsion)."""
        sat = lattice_saturation(self.basis, self.ambient.width)
        return SubgroupOfFgA(self.ambient, sat)

    def torsion_part(self) -> "SubgroupOfFgA":
        amb = self.ambient
        tors_rows = [
            [1 if j == amb.rank + i else 0 for j in range(amb.width)]
            for i in range(len(amb.invariants))
        ]
        rows = lattice_intersection(self.basis, tors_rows, amb.width) if tors_rows else []
        return SubgroupOfFgA(amb, rows)

    # -- sizes -----------------------------------------------------------

    def index_in_ambient(self) -> int | None:
        return lattice_index(self.basis, self.ambient.width)

    def order(self) -> int | None:
        """Number of elements of the subgroup, None when infinite."""
        rel = self.ambient.relation_rows()
        if lattice_rank(self.basis) > len(rel):
            return None
        coeffs = self._coefficients_of(rel)
        if not self.basis:
            return 1
        return lattice_index(coeffs, len(self.basis))

    def _coefficients_of(self, rows: list[IntVec]) -> list[IntVec]:
        """Express each row in terms of self.basis (rows must be members)."""
        bt = mat_transpose(self.basis) if self.basis else []
        out = []
        for r in rows:
            if not self.basis:
                if any(r):
                    raise ValueError("row not in the lattice")
                out.append([])
                continue
            c = solve_int(bt, list(r))
            if c is None:
                raise ValueError("row not in the lattice")
            out.append(c)
        return out

    # -- the subgroup as a group in its own right ------------------------

    def as_group(self) -> tuple[FgAbelian, "Hom", IntMat]:
        """Present the subgroup abstractly.

        Returns (grp, incl, coord_proj): grp the canonical form, incl the
        injection grp -> ambient, and coord_proj (grp.width x len(basis))
        turning basis coefficients into grp coordinates.  Use
        member_coords for elements.
        """
        m = len(self.basis)
        rel_coeffs = self._coefficients_of(self.ambient.relation_rows())
        grp, proj, section = FgAbelian.from_relations(m, rel_coeffs)
        # columns of incl: images of grp basis vectors inside the ambient
        bt = mat_transpose(self.basis) if self.basis else [[] for _ in range(self.ambient.width)]
        incl_mat = mat_mul(bt, section) if m else [[] for _ in range(self.ambient.width)]
        if not incl_mat:
            incl_mat = [[] for _ in range(self.ambient.width)]
        incl = Hom(grp, self.ambient, incl_mat)
        return grp, incl, proj

    def member_coords(self, x: IntVec, proj: IntMat) -> IntVec:
        """Coordinates of a member element in the as_group presentation."""
        coeffs = self._coefficients_of([self.ambient.reduce(x)])[0]
        return mat_vec(proj, coeffs) if coeffs else [0] * len(proj)

    # -- quotient ---------------------------------------------------------

    def quotient(self) -> tuple[FgAbelian, "Hom", IntMat]:
        """Ambient / self.

        Returns (grp, proj_hom, section): proj_hom the projection
        ambient -> grp, section (ambient.width x grp.width) a set-level
        lift with proj o section = identity on grp coordinates.
        """
        grp, proj, section = FgAbelian.from_relations(self.ambient.width, self.basis)
        return grp, Hom(self.ambient, grp, proj), section


class Hom:
    """Homomorphism between FgAbelian groups given by an integer matrix."""

    def __init__(self, src: FgAbelian, dst: FgAbelian, mat: IntMat):
        if len(mat) != dst.width:
            raise ValueError("matrix has wrong number of rows")
        for row in mat:
            if len(row) != src.width:
                raise ValueError("matrix has wrong number of columns")
        dst_rel = hermite_row_basis(dst.relation_rows(), dst.width)
        for r in src.relation_rows():
            img = mat_vec(mat, r) if src.width else [0] * dst.width
            if not lattice_member(img, dst_rel):
                raise ValueError("matrix does not respect the relations")
        self.src = src
        self.dst = dst
        self.mat = [list(r) for r in mat]

    def __repr__(self) -> str:
        return f"Hom({self.src!r} -> {self.dst!r}, {self.mat})"

    @staticmethod
    def identity(grp: FgAbelian) -> "Hom":
        return Hom(grp, grp, identity_matrix(grp.width))

    @staticmethod
    def zero(src: FgAbelian, dst: FgAbelian) -> "Hom":
        return Hom(src, dst, zero_matrix(dst.width, src.width))

    def apply(self, x: IntVec) -> IntVec:
        if self.src.width == 0:
            return self.dst.zero()
        return self.dst.reduce(mat_vec(self.mat, self.src.reduce(x)))

    def compose(self, inner: "Hom") -> "Hom":
        """self o inner."""
        if inner.dst != self.src:
            raise ValueError("homs do not compose")
        return Hom(inner.src, self.dst, mat_mul(self.mat, inner.mat))

    def add(self, other: "Hom") -> "Hom":
        if self.src != other.src or self.dst != other.dst:
            raise ValueError("homs have different types")
        m = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.mat, other.mat)
        ]
        return Hom(self.src, self.dst, m)

    def sub(self, other: "Hom") -> "Hom":
        if self.src != other.src or self.dst != other.dst:
            raise ValueError("homs have different types")
        m = [
            [a - b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.mat, other.mat)
        ]
        return Hom(self.src, self.dst, m)

    def eq(self, other: "Hom") -> bool:
        """Equality as maps on the quotient groups."""
        if self.src != other.src or self.dst != other.dst:
            return False
        dst_rel = hermite_row_basis(self.dst.relation_rows(), self.dst.width)
        for j in range(self.src.width):
            col = [self.mat[i][j] - other.mat[i][j] for i in range(self.dst.width)]
            if not lattice_member(col, dst_rel):
                return False
        return True

    def is_identity(self) -> bool:
        return self.src == self.dst and self.eq(Hom.identity(self.src))

    def image(self, sub: SubgroupOfFgA | None = None) -> SubgroupOfFgA:
        if sub is None:
            sub = self.src.full_subgroup()
        if sub.ambient != self.src:
            raise ValueError("subgroup lives in the wrong group")
        gens = [mat_vec(self.mat, b) for b in sub.basis] if self.src.width else []
        return SubgroupOfFgA(self.dst, gens)

    def preimage(self, sub: SubgroupOfFgA) -> SubgroupOfFgA:
        if sub.ambient != self.dst:
            raise ValueError("subgroup lives in the wrong group")
        if self.src.width == 0:
            return self.src.full_subgroup()
        # solve M x = c . basis: kernel of [M | -basis^T] projected to x
        n, m = self.src.width, len(sub.basis)
        rows = []
        for i in range(self.dst.width):
            row = list(self.mat[i]) + [-sub.basis[j][i] for j in range(m)]
            rows.append(row)
        ker = kernel_basis(rows, n + m)
        gens = [k[:n] for k in ker]
        return SubgroupOfFgA(self.src, gens)

    def kernel(self) -> SubgroupOfFgA:
        return self.preimage(self.dst.trivial_subgroup())

    def power(self, n: int) -> "Hom":
        if self.src != self.dst:
            raise ValueError("power needs an endomorphism")
        if n < 0:
            raise ValueError("negative power")
        out = Hom.identity(self.src)
        base = self
        while n:
            if n & 1:
                out = base.compose(out)
            n >>= 1
            if n:
                base = base.compose(base)
        return out

    def order_as_automorphism(self, cap: int = 10_000) -> int:
        """Multiplicative order; raises if not finite order within cap."""
        if self.src != self.dst:
            raise ValueError("order needs an endomorphism")
        cur = self
        for n in range(1, cap + 1):
            if cur.is_identity():
                return n
            cur = self.compose(cur)
        raise ValueError("endomorphism has no small finite order")
