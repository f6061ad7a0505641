"""Jitted kernels mirroring kernels_numpy, loop-style for numba.

Importing this module fails cleanly when numba is absent; the backend
catches that and falls back to the numpy implementations.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def check_associativity(table):
    n = table.shape[0]
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return False
    return True


@njit(cache=True)
def center_mask(table):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for x in range(n):
        ok = True
        for y in range(n):
            if table[x, y] != table[y, x]:
                ok = False
                break
        out[x] = ok
    return out


@njit(cache=True)
def centralizer_mask(table, subset):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for x in range(n):
        ok = True
        for s in range(n):
            if subset[s] and table[x, s] != table[s, x]:
                ok = False
                break
        out[x] = ok
    return out


@njit(cache=True)
def closure_mask(table, seed):
    n = table.shape[0]
    mask = seed.copy()
    queue = np.empty(n, dtype=np.int64)
    members = np.empty(n, dtype=np.int64)
    qlen = 0
    mlen = 0
    for x in range(n):
        if mask[x]:
            queue[qlen] = x
            qlen += 1
            members[mlen] = x
            mlen += 1
    head = 0
    while head < qlen:
        x = queue[head]
        head += 1
        for j in range(mlen):
            y = members[j]
            for p in (table[x, y], table[y, x]):
                if not mask[p]:
                    mask[p] = True
                    queue[qlen] = p
                    qlen += 1
                    members[mlen] = p
                    mlen += 1
    return mask


@njit(cache=True)
def conjugate_closure_mask(table, inv, seed):
    n = table.shape[0]
    mask = closure_mask(table, seed)
    changed = True
    while changed:
        changed = False
        for g in range(n):
            gi = inv[g]
            for s in range(n):
                if mask[s]:
                    c = table[table[g, s], gi]
                    if not mask[c]:
                        mask[c] = True
                        changed = True
        if changed:
            mask = closure_mask(table, mask)
    return mask


@njit(cache=True)
def commutator_set_mask(table, inv, mask_a, mask_b):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        if not mask_a[a]:
            continue
        ai = inv[a]
        for b in range(n):
            if not mask_b[b]:
                continue
            out[table[table[a, b], table[ai, inv[b]]]] = True
    return out


@njit(cache=True)
def coset_min_labels(table, sub):
    n = table.shape[0]
    out = np.empty(n, dtype=table.dtype)
    for g in range(n):
        best = -1
        for s in range(n):
            if sub[s]:
                v = table[g, s]
                if best < 0 or v < best:
                    best = v
        out[g] = best
    return out
