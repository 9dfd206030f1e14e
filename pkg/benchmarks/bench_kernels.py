"""Compare the compiled kernels with the numpy fallback on a few corpus groups.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from lcgroups import kernels
from lcgroups.constructors import build_group

GROUPS = ["Sym(5)", "prod(Dih(8),Dih(8))", "Wr(3)", "prod(Alt(4),Cyc(5))"]


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'group':24} {'kernel':15} " + " ".join(f"{b:>10}" for b in backends))
    for spec in GROUPS:
        G = build_group(spec)
        perms = G.perm_array
        table, orders = G.table, G.orders
        ones = np.ones(G.order, dtype=np.uint8)
        gens = list(G.gen_indices)
        cases = {
            "product_table": lambda b: kernels.product_table(perms, backend=b),
            "closure": lambda b: kernels.closure(table, gens, [0], backend=b),
            "first_failures": lambda b: kernels.first_failures(table, orders, ones, ones, backend=b),
            "cp2_violation": lambda b: kernels.cp2_violation(table, orders, backend=b),
        }
        for name, fn in cases.items():
            results = [fn(b) for b in backends.values()]
            for r in results[1:]:
                assert np.array_equal(np.asarray(r), np.asarray(results[0])), (spec, name)
            times = [_best(lambda: fn(b), args.repeat) for b in backends.values()]
            print(f"{spec:24} {name:15} " + " ".join(f"{t * 1e3:9.2f}ms" for t in times))


if __name__ == "__main__":
    main()
