"""Benchmark the compiled kernels against the pure-Python fallback.

Runs both backends on identical inputs for the two hot paths — the Gauss
linking double sum and the brute-force conjugacy search — and prints a
timing table with the speedup.  Results are asserted to agree (within 1e-12
for the floating-point sum, exactly for the integer search) before any
timing is reported.

Usage::

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import importlib
import time

from stemcert._kernels import fallback
from stemcert.hopf import fiber_curve, choose_pole, _project_curve

try:
    _core = importlib.import_module("stemcert._kernels._core")
except ImportError:
    _core = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def linking_inputs(samples):
    a = fiber_curve([0.0, 0.0, 1.0], samples=samples)
    b = fiber_curve([0.0, 0.0, -1.0], samples=samples)
    pole = choose_pole([a, b])
    mids_a, segs_a = _project_curve(a, pole).segments()
    mids_b, segs_b = _project_curve(b, pole).segments()
    return mids_a, segs_a, mids_b, segs_b


def bench_linking(repeat):
    print("Gauss linking double sum")
    print(f"{'segments':>10} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for samples in (256, 512, 1024):
        args = linking_inputs(samples)
        slow_val, slow_t = timed(fallback.gauss_linking_sum, *args, repeat=repeat)
        if _core is None:
            print(f"{samples:>10} {slow_t * 1e3:>10.2f}ms {'n/a':>12} {'n/a':>9}")
            continue
        fast_val, fast_t = timed(_core.gauss_linking_sum, *args, repeat=repeat)
        assert abs(fast_val - slow_val) <= 1e-12, "backend results diverged"
        print(
            f"{samples:>10} {slow_t * 1e3:>10.2f}ms {fast_t * 1e3:>10.2f}ms "
            f"{slow_t / fast_t:>8.1f}x"
        )


def bench_search(repeat):
    print()
    print("Conjugacy search (exhaustive no-witness case: modulus does not divide c)")
    print(f"{'bound':>10} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for bound in (10, 20, 40):
        args = (2, 1, 4, bound)  # modulus 2 never divides 1: full scan
        slow_val, slow_t = timed(fallback.search_diagonalizer, *args, repeat=repeat)
        if _core is None:
            print(f"{bound:>10} {slow_t * 1e3:>10.2f}ms {'n/a':>12} {'n/a':>9}")
            continue
        fast_val, fast_t = timed(_core.search_diagonalizer, *args, repeat=repeat)
        assert fast_val == slow_val, "backend witnesses diverged"
        print(
            f"{bound:>10} {slow_t * 1e3:>10.2f}ms {fast_t * 1e3:>10.2f}ms "
            f"{slow_t / fast_t:>8.1f}x"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()
    if _core is None:
        print("compiled kernels unavailable; timing the fallback only\n")
    bench_linking(args.repeat)
    bench_search(args.repeat)


if __name__ == "__main__":
    main()
