#!/usr/bin/env python3
"""Benchmark the compiled bar-transfer kernel against the pure-Python one.

Runs the vector counting engine on a few regions with each available
backend, checks that the counts agree, and prints per-case timings plus
the speedup of the compiled kernel when it is present.

Usage: python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import time

from aztecount.counter import count_vector
from aztecount.kernel import available_backends
from aztecount.region import RegionSpec

CASES = [
    RegionSpec(0, 0, 8),
    RegionSpec(0, 0, 9),
    RegionSpec(0, 0, 10),
    RegionSpec(3, 2, 4),
    RegionSpec(0, 8, 8),
    RegionSpec(2, 0, 9),
]


def best_time(fn, repeat):
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return value, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions per case")
    args = parser.parse_args()

    backends = available_backends()
    names = sorted(backends)
    print(f"backends: {', '.join(names)}")
    header = f"{'region':>12}  " + "".join(f"{name:>12}  " for name in names) + "count digits"
    print(header)
    print("-" * len(header))

    totals = dict.fromkeys(names, 0.0)
    for spec in CASES:
        times = {}
        values = {}
        for name in names:
            apply_bar = backends[name]
            values[name], times[name] = best_time(
                lambda: count_vector(spec, apply_bar=apply_bar), args.repeat
            )
            totals[name] += times[name]
        assert len(set(values.values())) == 1, f"backends disagree on {spec}"
        digits = len(str(next(iter(values.values()))))
        row = f"({spec.p},{spec.q},{spec.n})".rjust(12) + "  "
        row += "".join(f"{times[name]:>10.3f}s  " for name in names)
        row += str(digits)
        print(row)

    if "compiled" in totals and "python" in totals and totals["compiled"] > 0:
        print(f"\ntotal: python {totals['python']:.3f}s, compiled {totals['compiled']:.3f}s "
              f"-> speedup x{totals['python'] / totals['compiled']:.2f}")
    else:
        print("\ncompiled backend not available; only the pure-Python kernel was timed")


if __name__ == "__main__":
    main()
