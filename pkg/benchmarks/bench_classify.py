"""Benchmark the classification kernels: compiled extension vs pure Python.

Times the batch quartet kernel over random readings in both rating modes
and prints rows/second per backend plus the speedup.

Usage: python3 benchmarks/bench_classify.py [--rows N] [--repeats K]
"""

import argparse
import time

import numpy as np

from teatwatch.classify import DEFAULT_THRESHOLDS, available_kernels


def time_backend(kernel, temps, worst, repeats):
    out = np.empty(temps.shape[0], dtype=np.int8)
    args = DEFAULT_THRESHOLDS.as_args()
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        kernel.fill_batch_codes(temps, out, worst, *args)
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=1_000_000,
                        help="quartets per run (default 1e6)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timed repeats, best taken (default 5)")
    args = parser.parse_args()

    rng = np.random.default_rng(20201028)
    temps = rng.uniform(31.0, 43.0, size=(args.rows, 4))
    kernels = available_kernels()
    print(f"{args.rows:,} random quartets, best of {args.repeats} runs")

    for mode_name, worst in (("worst-teat", True), ("legacy", False)):
        results = {}
        outputs = {}
        for name, kernel in kernels.items():
            seconds, out = time_backend(kernel, temps, worst, args.repeats)
            results[name] = seconds
            outputs[name] = out.copy()
            print(f"  {mode_name:<10} {name:<8} {seconds * 1e3:9.1f} ms "
                  f"({args.rows / seconds / 1e6:7.2f} M rows/s)")
        if len(outputs) == 2 and not np.array_equal(outputs["pure"], outputs["compiled"]):
            raise SystemExit("backends disagree; benchmark aborted")
        if "compiled" in results:
            print(f"  {mode_name:<10} speedup  "
                  f"{results['pure'] / results['compiled']:8.1f}x")


if __name__ == "__main__":
    main()
