"""Vectorized numpy kernels for finite group computations.

All kernels take an n x n Cayley table of int32 element indices and
boolean masks over elements.  The numba module mirrors these
signatures exactly; the backend picks one implementation at import.
"""

from __future__ import annotations

import numpy as np


def check_associativity(table: np.ndarray) -> bool:
    n = table.shape[0]
    # (a*b)*c == a*(b*c), vectorized one row of a at a time
    for a in range(n):
        lhs = table[table[a, :], :]
        rhs = table[a, table]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def center_mask(table: np.ndarray) -> np.ndarray:
    return (table == table.T).all(axis=1)


def centralizer_mask(table: np.ndarray, subset: np.ndarray) -> np.ndarray:
    idx = np.flatnonzero(subset)
    if idx.size == 0:
        return np.ones(table.shape[0], dtype=bool)
    # x centralizes S iff row x agrees with column x on S
    return (table[:, idx] == table[idx, :].T).all(axis=1)


def closure_mask(table: np.ndarray, seed: np.ndarray) -> np.ndarray:
    mask = seed.copy()
    while True:
        idx = np.flatnonzero(mask)
        prods = table[np.ix_(idx, idx)]
        new = mask.copy()
        new[prods.ravel()] = True
        if np.array_equal(new, mask):
            return mask
        mask = new


def conjugate_closure_mask(
    table: np.ndarray, inv: np.ndarray, seed: np.ndarray
) -> np.ndarray:
    """Smallest normal subgroup containing the seed elements."""
    mask = seed.copy()
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        prods = table[np.ix_(idx, idx)]
        new[prods.ravel()] = True
        # all conjugates g s g^-1
        gs = table[:, idx]
        conj = table[gs, inv[:, None]]
        new[conj.ravel()] = True
        if np.array_equal(new, mask):
            return mask
        mask = new


def commutator_set_mask(
    table: np.ndarray, inv: np.ndarray, mask_a: np.ndarray, mask_b: np.ndarray
) -> np.ndarray:
    """Elements a b a^-1 b^-1 for a in A, b in B (the raw set)."""
    n = table.shape[0]
    out = np.zeros(n, dtype=bool)
    ia = np.flatnonzero(mask_a)
    ib = np.flatnonzero(mask_b)
    if ia.size == 0 or ib.size == 0:
        return out
    ab = table[np.ix_(ia, ib)]
    a_inv = inv[ia]
    ainv_binv = table[np.ix_(a_inv, inv[ib])]
    comm = table[ab, ainv_binv]
    out[comm.ravel()] = True
    return out


def coset_min_labels(table: np.ndarray, sub: np.ndarray) -> np.ndarray:
    """Label each element by the least member of its left coset g.S."""
    idx = np.flatnonzero(sub)
    return table[:, idx].min(axis=1)
