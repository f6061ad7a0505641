"""Nilpotent Lie algebras over Q with explicit structure constants.

Subspaces (ideals, centers, series terms) are reduced-row-echelon
bases from ratlin, so equal subspaces compare equal.  Weight data and
finite-part actions live on the model, not here; this module is the
pure Lie structure.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InputFormatError
from ..zlattice.ratlin import (
    RatMat,
    RatVec,
    fr,
    in_span,
    nullspace,
    rref,
    span_contains,
    span_eq,
    span_sum,
    vec,
)


class NilpotentLie:
    """Lie algebra on basis e_0..e_{dim-1}, given by [e_i, e_j] vectors."""

    def __init__(self, dim: int, entries: list[tuple[int, int, int, Fraction]]):
        if dim < 0:
            raise InputFormatError("dimension must be nonnegative")
        self.dim = dim
        table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InputFormatError("bracket index out of range")
            table[i][j][k] += fr(c)
        # antisymmetrize unspecified halves; reject contradictions
        for i in range(dim):
            if any(table[i][i]):
                raise InputFormatError(f"[e{i}, e{i}] must vanish")
            for j in range(i + 1, dim):
                ij, ji = table[i][j], table[j][i]
                if any(ji):
                    if any(ij):
                        if any(a + b for a, b in zip(ij, ji)):
                            raise InputFormatError(
                                f"[e{i},e{j}] and [e{j},e{i}] are not antisymmetric"
                            )
                    else:
                        table[i][j] = [-a for a in ji]
                table[j][i] = [-a for a in table[i][j]]
        self.table = table
        self._check_jacobi()
        series = self.lower_central_series()
        # an empty series with brackets present means [L, L] = L
        if (series and series[-1]) or (dim and not series and not self.is_abelian()):
            raise InputFormatError("algebra is not nilpotent")

    def _check_jacobi(self) -> None:
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    s = [
                        a + b + c
                        for a, b, c in zip(
                            self.bracket(self.table[i][j], self._basis(k)),
                            self.bracket(self.table[j][k], self._basis(i)),
                            self.bracket(self.table[k][i], self._basis(j)),
                        )
                    ]
                    if any(s):
                        raise InputFormatError(
                            f"Jacobi identity fails on (e{i}, e{j}, e{k})"
                        )

    def _basis(self, i: int) -> RatVec:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def zero_subspace(self) -> RatMat:
        return []

    def full_subspace(self) -> RatMat:
        return rref([self._basis(i) for i in range(self.dim)], self.dim)

    def bracket(self, u, v) -> RatVec:
        uu, vv = vec(u), vec(v)
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(uu):
            if not a:
                continue
            for j, b in enumerate(vv):
                if not b:
                    continue
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += a * b * c
        return out

    def bracket_spans(self, a_rows: RatMat, b_rows: RatMat) -> RatMat:
        prods = [self.bracket(u, v) for u in a_rows for v in b_rows]
        return rref(prods, self.dim)

    def center_space(self) -> RatMat:
        """{v : [v, e_j] = 0 for all j} via one stacked linear system."""
        if self.dim == 0:
            return []
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                rows.append([self.table[i][j][k] for i in range(self.dim)])
        return nullspace(rows, self.dim)

    def lower_central_series(self) -> list[RatMat]:
        """[L,L], [L,[L,L]], ... down to (and excluding repetition of) the end."""
        out = []
        full = self.full_subspace()
        cur = full
        while True:
            nxt = self.bracket_spans(full, cur)
            if span_eq(nxt, cur, self.dim):
                return out
            out.append(nxt)
            cur = nxt

    def nilpotency_class(self) -> int:
        return len(self.lower_central_series())

    def is_abelian(self) -> bool:
        return all(not any(v) for row in self.table for v in row)

    def is_subalgebra(self, rows: RatMat) -> bool:
        return span_contains(rows, self.bracket_spans(rows, rows), self.dim)

    def is_ideal(self, rows: RatMat) -> bool:
        return span_contains(rows, self.bracket_spans(self.full_subspace(), rows), self.dim)

    def centralizer_space(self, rows: RatMat) -> RatMat:
        """{v : [v, w] = 0 for all w in the span}."""
        if not rows:
            return self.full_subspace()
        sys_rows = []
        for w in rows:
            # v -> [v, w] linear in v; one row per output coordinate
            for k in range(self.dim):
                sys_rows.append(
                    [self.bracket(self._basis(i), w)[k] for i in range(self.dim)]
                )
        return nullspace(sys_rows, self.dim)
