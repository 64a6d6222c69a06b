"""Time the numba and numpy kernel backends on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

The first numba call includes JIT compilation (or a cache load); it is reported
separately and excluded from the steady-state timing.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from gdyck import _kernels

CASES = [
    ("dyck bridges g=2 len=16", lambda b: _kernels.bridge_rows(16, 2, False, b)),
    ("dyck bridges g=3 len=15", lambda b: _kernels.bridge_rows(15, 3, False, b)),
    ("motzkin bridges g=2 len=12", lambda b: _kernels.bridge_rows(12, 2, True, b)),
    ("motzkin bridges g=3 len=13", lambda b: _kernels.bridge_rows(13, 3, True, b)),
    ("path statistics g=2 len=16",
     lambda b: _kernels.path_statistics(_kernels.bridge_rows(16, 2, False, "numpy"), 2, b)),
    ("walk areas n=10", lambda b: _kernels.walk_area_counts(10, 9, b)),
    ("walk areas n=12", lambda b: _kernels.walk_area_counts(12, 9, b)),
]


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':32s} " + " ".join(f"{b:>12s}" for b in backends) + "   first-call  agree")
    for name, fn in CASES:
        results, times, first = {}, {}, 0.0
        for b in backends:
            t0 = time.perf_counter()
            results[b] = fn(b)
            if b == "numba":
                first = time.perf_counter() - t0
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                fn(b)
                best = min(best, time.perf_counter() - t0)
            times[b] = best
        agree = all(_same(results[backends[0]], results[b]) for b in backends[1:])
        print(f"{name:32s} " + " ".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
              + f"   {first * 1e3:8.1f}ms  {agree}")
        if not agree:
            return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
