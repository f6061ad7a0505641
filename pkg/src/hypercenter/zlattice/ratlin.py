"""Exact linear algebra over the rationals.

Vectors are lists of Fractions (plain ints accepted on input); a
subspace is held as a reduced row echelon basis, which is unique, so
equal subspaces compare equal structurally.
"""

from __future__ import annotations

from fractions import Fraction

RatVec = list[Fraction]
RatMat = list[list[Fraction]]


def fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs) -> RatVec:
    return [fr(x) for x in xs]


def rref(rows: RatMat, width: int) -> RatMat:
    """Reduced row echelon basis of the row span; no zero rows."""
    work = [vec(r) for r in rows if any(r)]
    out: RatMat = []
    pivots: list[int] = []
    for row in work:
        for p, prow in zip(pivots, out):
            if row[p]:
                c = row[p]
                row = [a - c * b for a, b in zip(row, prow)]
        lead = next((j for j in range(width) if row[j]), None)
        if lead is None:
            continue
        c = row[lead]
        row = [a / c for a in row]
        for i, (p, prow) in enumerate(zip(pivots, out)):
            if prow[lead]:
                cc = prow[lead]
                out[i] = [a - cc * b for a, b in zip(prow, row)]
        out.append(row)
        pivots.append(lead)
    order = sorted(range(len(out)), key=lambda i: pivots[i])
    return [out[i] for i in order]


def rank(rows: RatMat, width: int) -> int:
    return len(rref(rows, width))


def in_span(v, rows: RatMat) -> bool:
    if not rows:
        return not any(v)
    width = len(rows[0])
    return len(rref(list(rows) + [vec(v)], width)) == len(rref(rows, width))


def span_eq(a: RatMat, b: RatMat, width: int) -> bool:
    return rref(a, width) == rref(b, width)


def span_contains(big: RatMat, small: RatMat, width: int) -> bool:
    return all(in_span(v, rref(big, width)) for v in small)


def span_sum(a: RatMat, b: RatMat, width: int) -> RatMat:
    return rref(list(a) + list(b), width)


def nullspace(rows: RatMat, width: int) -> RatMat:
    """Basis of {x : rows @ x = 0} (x as column), rref'd."""
    r = rref(rows, width)
    pivots = []
    for row in r:
        pivots.append(next(j for j in range(width) if row[j]))
    free = [j for j in range(width) if j not in pivots]
    out = []
    for j in free:
        v = [Fraction(0)] * width
        v[j] = Fraction(1)
        for p, row in zip(pivots, r):
            v[p] = -row[j]
        out.append(v)
    return rref(out, width)


def span_intersection(a: RatMat, b: RatMat, width: int) -> RatMat:
    """Intersection of two row spans."""
    ra, rb = rref(a, width), rref(b, width)
    if not ra or not rb:
        return []
    # x in both spans: x = s.ra = t.rb; solve [ra^T | -rb^T] kernel
    rows = []
    for j in range(width):
        rows.append([r[j] for r in ra] + [-r[j] for r in rb])
    ker = nullspace(rows, len(ra) + len(rb))
    out = []
    for k in ker:
        v = [Fraction(0)] * width
        for c, r in zip(k[: len(ra)], ra):
            v = [x + c * y for x, y in zip(v, r)]
        out.append(v)
    return rref(out, width)


def solve(rows: RatMat, target) -> RatVec | None:
    """Coefficients c with sum c_i rows_i = target, or None."""
    if not rows:
        return [] if not any(target) else None
    width = len(rows[0])
    t = vec(target)
    # row-reduce [rows^T | t]
    aug = [[rows[i][j] for i in range(len(rows))] + [t[j]] for j in range(width)]
    r = rref(aug, len(rows) + 1)
    for row in r:
        lead = next(j for j in range(len(rows) + 1) if row[j])
        if lead == len(rows):
            return None
    coeffs = [Fraction(0)] * len(rows)
    for row in r:
        lead = next(j for j in range(len(rows)) if row[j])
        coeffs[lead] = row[len(rows)]
    return coeffs


def mat_apply(mat: RatMat, v) -> RatVec:
    vv = vec(v)
    return [sum((fr(a) * b for a, b in zip(row, vv)), Fraction(0)) for row in mat]


def mat_product(a: RatMat, b: RatMat) -> RatMat:
    n = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum((fr(a[i][k]) * fr(b[k][j]) for k in range(n)), Fraction(0)) for j in range(cols)]
        for i in range(len(a))
    ]


def identity_rat(n: int) -> RatMat:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_eq_rat(a: RatMat, b: RatMat) -> bool:
    return len(a) == len(b) and all(
        len(r1) == len(r2) and all(fr(x) == fr(y) for x, y in zip(r1, r2))
        for r1, r2 in zip(a, b)
    )
