"""Timing comparison of the jitted and pure-numpy finite-group kernels.

Runs each kernel on Cayley tables of increasing order and prints a
table of per-call times for both backends.  The first jitted call pays
compilation; it is excluded by a warmup pass.

    python3 benchmarks/bench_kernels.py [--orders 64,128,256,512] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hypercenter.finitegrp import kernels_numpy
from hypercenter.finitegrp.group import FiniteGroup, dihedral

try:
    from hypercenter.finitegrp import kernels_numba
except ImportError:
    kernels_numba = None


def _make_group(order: int) -> FiniteGroup:
    # dihedral tables scale to any even order and have rich subgroup
    # structure, which keeps the closure kernels honest
    if order % 2:
        raise SystemExit("orders must be even (dihedral construction)")
    return dihedral(order // 2)


def _inputs(grp: FiniteGroup):
    n = grp.n
    seed = np.zeros(n, dtype=bool)
    seed[: max(2, n // 8)] = True
    half = np.zeros(n, dtype=bool)
    half[: n // 2] = True
    return {
        "check_associativity": (grp.table,),
        "center_mask": (grp.table,),
        "centralizer_mask": (grp.table, seed),
        "closure_mask": (grp.table, seed),
        "conjugate_closure_mask": (grp.table, grp.inv, seed),
        "commutator_set_mask": (grp.table, grp.inv, half, half),
        "coset_min_labels": (grp.table, half),
    }


def _time(fn, args, repeat: int) -> float:
    fn(*args)  # warmup / jit compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", default="64,128,256,512")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    orders = [int(s) for s in args.orders.split(",")]

    if kernels_numba is None:
        print("numba unavailable; showing numpy only")

    for order in orders:
        grp = _make_group(order)
        inputs = _inputs(grp)
        print(f"\norder {order}")
        header = f"{'kernel':28s} {'numpy':>12s}"
        if kernels_numba is not None:
            header += f" {'numba':>12s} {'speedup':>9s}"
        print(header)
        for name, call_args in inputs.items():
            t_np = _time(getattr(kernels_numpy, name), call_args, args.repeat)
            line = f"{name:28s} {t_np * 1e6:10.1f}us"
            if kernels_numba is not None:
                t_nb = _time(getattr(kernels_numba, name), call_args, args.repeat)
                line += f" {t_nb * 1e6:10.1f}us {t_np / t_nb:8.1f}x"
            print(line)


if __name__ == "__main__":
    main()
