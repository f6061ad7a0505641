"""Exact integer matrix routines: Smith/Hermite forms, kernels, lattice arithmetic.

Everything works on plain Python ints (arbitrary precision); matrices are
lists of rows.  Lattices in Z^k are given by lists of generating row
vectors and are canonicalized through the row-style Hermite normal form,
which is unique: equal lattices produce identical bases.
"""

from __future__ import annotations

IntMat = list[list[int]]
IntVec = list[int]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def identity_matrix(n: int) -> IntMat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(m: int, n: int) -> IntMat:
    return [[0] * n for _ in range(m)]


def mat_copy(a: IntMat) -> IntMat:
    return [row[:] for row in a]


def mat_mul(a: IntMat, b: IntMat) -> IntMat:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in mat_mul")
    n_inner = len(b)
    n_cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = [0] * n_cols
        for i in range(n_inner):
            x = row[i]
            if x:
                brow = b[i]
                for j in range(n_cols):
                    new[j] += x * brow[j]
        out.append(new)
    return out


def mat_vec(a: IntMat, v: IntVec) -> IntVec:
    if a and len(a[0]) != len(v):
        raise ValueError("shape mismatch in mat_vec")
    return [sum(row[i] * v[i] for i in range(len(v))) for row in a]


def mat_transpose(a: IntMat) -> IntMat:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_eq(a: IntMat, b: IntMat) -> bool:
    return a == b


def _swap_rows(m: IntMat, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_cols(m: IntMat, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(a: IntMat) -> tuple[IntMat, IntMat, IntMat]:
    """Return (U, D, V) with U*a*V = D, U and V unimodular.

    D is diagonal with non-negative entries d_0 | d_1 | ... ; total on any
    shape including empty.  Deterministic: identical input gives identical
    transforms.
    """
    m = len(a)
    n = len(a[0]) if a else 0
    d = mat_copy(a)
    u = identity_matrix(m)
    v = identity_matrix(n)

    def row_combine(t: int, i: int) -> None:
        # clear d[i][t] against pivot d[t][t]; plain elimination when the
        # pivot divides, else a 2x2 transform that strictly shrinks the pivot
        a, b = d[t][t], d[i][t]
        if b % a == 0:
            q = b // a
            for mat in (d, u):
                rt, ri = mat[t], mat[i]
                for c in range(len(rt)):
                    ri[c] -= q * rt[c]
            return
        g, x, y = xgcd(a, b)
        p, q = a // g, b // g
        for mat in (d, u):
            rt, ri = mat[t], mat[i]
            for c in range(len(rt)):
                rt[c], ri[c] = x * rt[c] + y * ri[c], -q * rt[c] + p * ri[c]

    def col_combine(t: int, j: int) -> None:
        a, b = d[t][t], d[t][j]
        if b % a == 0:
            q = b // a
            for mat in (d, v):
                for row in mat:
                    row[j] -= q * row[t]
            return
        g, x, y = xgcd(a, b)
        p, q = a // g, b // g
        for mat in (d, v):
            for row in mat:
                row[t], row[j] = x * row[t] + y * row[j], -q * row[t] + p * row[j]

    rank_bound = min(m, n)
    t = 0
    while t < rank_bound:
        # locate a pivot in the trailing submatrix
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            _swap_rows(d, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(d, t, pj)
            _swap_cols(v, t, pj)
        while True:
            for i in range(t + 1, m):
                if d[i][t]:
                    row_combine(t, i)
            dirty = False
            for j in range(t + 1, n):
                if d[t][j]:
                    col_combine(t, j)
                    dirty = True
            if dirty:
                # column ops may refill the pivot column
                if any(d[i][t] for i in range(t + 1, m)):
                    continue
            # enforce divisibility of the trailing block by the pivot
            piv = d[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # folding the offending row into the pivot row shrinks the pivot
            for mat in (d, u):
                for c in range(len(mat[t])):
                    mat[t][c] += mat[offender][c]
        if d[t][t] < 0:
            for c in range(n):
                d[t][c] = -d[t][c]
            for c in range(m):
                u[t][c] = -u[t][c]
        t += 1
    return u, d, v


def hermite_row_basis(rows: list[IntVec], width: int) -> list[IntVec]:
    """Canonical basis of the lattice generated by `rows` inside Z^width.

    Row-style Hermite normal form: echelon, positive pivots, entries above a
    pivot reduced into [0, pivot).  Unique for the lattice, so equality of
    bases is equality of lattices.
    """
    work = [list(r) for r in rows if any(r)]
    for r in work:
        if len(r) != width:
            raise ValueError("row width mismatch")
    rank = 0
    for col in range(width):
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        _swap_rows(work, rank, pivot_row)
        for i in range(rank + 1, len(work)):
            while work[i][col]:
                g, x, y = xgcd(work[rank][col], work[i][col])
                p, q = work[rank][col] // g, work[i][col] // g
                ra, rb = work[rank], work[i]
                for c in range(col, width):
                    ra[c], rb[c] = x * ra[c] + y * rb[c], -q * ra[c] + p * rb[c]
        if work[rank][col] < 0:
            work[rank] = [-x for x in work[rank]]
        rank += 1
        if rank == len(work):
            break
    work = [r for r in work if any(r)]
    # reduce entries above each pivot
    pivots = []
    for r in work:
        c = next(i for i, x in enumerate(r) if x)
        pivots.append(c)
    for idx in range(len(work)):
        c = pivots[idx]
        p = work[idx][c]
        for above in range(idx):
            q = work[above][c] // p
            if q:
                for col in range(c, width):
                    work[above][col] -= q * work[idx][col]
    return work


def kernel_basis(a: IntMat, n_cols: int | None = None) -> list[IntVec]:
    """Basis of {x in Z^n : a @ x = 0}; the kernel lattice is saturated."""
    if n_cols is None:
        if not a:
            raise ValueError("kernel_basis needs explicit n_cols for empty matrix")
        n_cols = len(a[0])
    if not a:
        return [row[:] for row in identity_matrix(n_cols)]
    _, d, v = smith_normal_form(a)
    rank = 0
    for i in range(min(len(d), n_cols)):
        if d[i][i]:
            rank += 1
    return [[v[r][j] for r in range(n_cols)] for j in range(rank, n_cols)]


def solve_int(a: IntMat, b: IntVec) -> IntVec | None:
    """One integer solution x of a @ x = b, or None."""
    m = len(a)
    n = len(a[0]) if a else 0
    if len(b) != m:
        raise ValueError("rhs length mismatch")
    if not a:
        return None if any(b) else []
    u, d, v = smith_normal_form(a)
    ub = mat_vec(u, b)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
        elif ub[i]:
            return None
    return mat_vec(v, y)


def lattice_sum(rows_a: list[IntVec], rows_b: list[IntVec], width: int) -> list[IntVec]:
    return hermite_row_basis(list(rows_a) + list(rows_b), width)


def lattice_member(x: IntVec, rows: list[IntVec]) -> bool:
    """Is x in the integer row span of rows?"""
    if not any(x):
        return True
    if not rows:
        return False
    at = mat_transpose(rows)
    return solve_int(at, list(x)) is not None


def lattice_intersection(rows_a: list[IntVec], rows_b: list[IntVec], width: int) -> list[IntVec]:
    """Canonical basis of rowspan(rows_a) ∩ rowspan(rows_b)."""
    if not rows_a or not rows_b:
        return []
    p, q = len(rows_a), len(rows_b)
    # columns of the combined map Z^(p+q) -> Z^width, (s,t) |-> s*A - t*B
    stacked = [
        [rows_a[i][c] for i in range(p)] + [-rows_b[j][c] for j in range(q)]
        for c in range(width)
    ]
    combos = kernel_basis(stacked, p + q)
    gens = []
    for combo in combos:
        vec = [0] * width
        for i in range(p):
            if combo[i]:
                for c in range(width):
                    vec[c] += combo[i] * rows_a[i][c]
        gens.append(vec)
    return hermite_row_basis(gens, width)


def lattice_saturation(rows: list[IntVec], width: int) -> list[IntVec]:
    """Canonical basis of (Q-span of rows) ∩ Z^width."""
    if not rows:
        return []
    # Q-span = vectors annihilated by the kernel of the generator matrix
    rels = kernel_basis([list(r) for r in rows], width)
    if not rels:
        return hermite_row_basis(identity_matrix(width), width)
    return hermite_row_basis(kernel_basis(rels, width), width)


def lattice_rank(rows: list[IntVec]) -> int:
    if not rows:
        return 0
    _, d, _ = smith_normal_form([list(r) for r in rows])
    return sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i])


def lattice_index(sub_rows: list[IntVec], width: int) -> int | None:
    """[Z^width : L] when L has full rank, else None (infinite)."""
    if width == 0:
        return 1
    if not sub_rows:
        return None
    _, d, _ = smith_normal_form([list(r) for r in sub_rows])
    idx = 1
    for i in range(width):
        di = d[i][i] if i < len(d) and i < len(d[0]) else 0
        if not di:
            return None
        idx *= di
    return idx


def lattice_eq(rows_a: list[IntVec], rows_b: list[IntVec], width: int) -> bool:
    return hermite_row_basis(rows_a, width) == hermite_row_basis(rows_b, width)


def lattice_contains(rows_big: list[IntVec], rows_small: list[IntVec]) -> bool:
    return all(lattice_member(r, rows_big) for r in rows_small)
