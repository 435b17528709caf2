"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--sizes 8 32 128] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from fuzzyhom import _pykernels

try:
    from fuzzyhom import _ckernels
except ImportError:
    _ckernels = None


def cases(n, rng):
    a = np.where(rng.random((n, n)) < 0.5, rng.integers(0, 11, (n, n)) * 100_000, 0).astype(np.int64)
    b = np.ascontiguousarray(a.T)
    m = max(1, n // 2)
    assign = rng.integers(0, m, n).astype(np.intp)
    leader = np.array([np.flatnonzero(assign == assign[i])[0] for i in range(n)], dtype=np.intp)
    cols = np.ascontiguousarray(a[:, leader])  # pred-consistent, so the scan runs to the end
    sig = np.ascontiguousarray(np.hstack([a.T, a]))
    return {
        "compose": lambda k: k.compose(a, b),
        "closure": lambda k: k.closure(a),
        "first_intransitive": lambda k: k.first_intransitive(a),
        "image_relation": lambda k: k.image_relation(a, assign, m),
        "first_class_mismatch": lambda k: k.first_class_mismatch(cols, leader, 0, 0),
        "group_leaders": lambda k: k.group_leaders(sig, 0),
    }


def same(x, y):
    if isinstance(x, np.ndarray):
        return np.array_equal(x, y)
    return x == y


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--sizes", type=int, nargs="+", default=[8, 32, 128])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the numpy fallback is available")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<22}{'n':>5}{'numpy ms':>12}{'cython ms':>12}{'speedup':>9}")
    for n in args.sizes:
        for name, call in cases(n, rng).items():
            number = max(1, 2000 // (n * n // 8 + 1))
            py = min(timeit.repeat(lambda: call(_pykernels), number=number, repeat=args.repeat)) / number
            if _ckernels is None:
                print(f"{name:<22}{n:>5}{py * 1e3:>12.3f}{'-':>12}{'-':>9}")
                continue
            assert same(call(_pykernels), call(_ckernels)), name
            cy = min(timeit.repeat(lambda: call(_ckernels), number=number, repeat=args.repeat)) / number
            print(f"{name:<22}{n:>5}{py * 1e3:>12.3f}{cy * 1e3:>12.3f}{py / cy:>8.1f}x")


if __name__ == "__main__":
    main()
