"""Benchmark the compiled tensor-product kernel against the NumPy fallback.

Times the sparse multilinear product A x^{k-1} (the inner loop of the
power iteration) on a random k-uniform edge set.

    python benchmarks/bench_kernels.py --dim 5000 --nnz 200000 --order 3
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hgtensor import _kernels_py

try:
    from hgtensor import _kernels
except ImportError:
    _kernels = None


def random_coords(rng: np.random.Generator, dim: int, nnz: int, order: int):
    rows = set()
    while len(rows) < nnz:
        need = nnz - len(rows)
        draw = rng.integers(0, dim, size=(need + need // 4 + 1, order))
        for row in draw:
            if len(set(row.tolist())) == order:
                rows.add(tuple(sorted(row.tolist())))
                if len(rows) == nnz:
                    break
    indices = np.array(sorted(rows), dtype=np.int64)
    values = rng.uniform(0.1, 1.0, size=nnz)
    return np.ascontiguousarray(indices), values


def best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=5000)
    parser.add_argument("--nnz", type=int, default=200_000)
    parser.add_argument("--order", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(7)
    indices, values = random_coords(rng, args.dim, args.nnz, args.order)
    x = rng.uniform(0.5, 1.5, size=args.dim)

    ref = _kernels_py.apply_coords(indices, values, x)
    t_py = best_time(lambda: _kernels_py.apply_coords(indices, values, x), args.repeats)
    print(f"order={args.order} dim={args.dim} nnz={args.nnz} (best of {args.repeats})")
    print(f"python kernel:  {t_py * 1e3:9.3f} ms")

    if _kernels is None:
        print("cython kernel:  not built (pip install -e . to compile)")
        return
    out = _kernels.apply_coords(indices, values, x)
    assert np.allclose(out, ref, rtol=1e-12, atol=1e-12), "kernel mismatch"
    t_cy = best_time(lambda: _kernels.apply_coords(indices, values, x), args.repeats)
    print(f"cython kernel:  {t_cy * 1e3:9.3f} ms")
    print(f"speedup:        {t_py / t_cy:9.2f}x")


if __name__ == "__main__":
    main()
