"""Time the jitted kernels against their plain numpy versions.

    python benchmarks/bench_kernels.py [--repeat N]

Run with ``DICYCLES_DISABLE_NUMBA=1`` and both columns show the plain code.
"""

import argparse
import time

from dicycles import _kernels
from dicycles.generators import (
    gen_bipartite_tournament,
    gen_circular,
    gen_complete_symmetric,
    gen_even_girth,
    gen_random_min_outdegree,
)

GIRTH_CASES = [
    ("even g=8 k=3", gen_even_girth(8, 3)),
    ("circular p=3 g=300", gen_circular(3, 300)),
    ("random m=400 d=3", gen_random_min_outdegree(400, 3, 1)),
]

PATH_CASES = [
    ("even g=4 k=2", gen_even_girth(4, 2)),
    ("even g=6 k=1", gen_even_girth(6, 1)),
    ("tournament h=2", gen_bipartite_tournament(2)),
    ("complete m=9", gen_complete_symmetric(9)),
    ("random m=14 d=2", gen_random_min_outdegree(14, 2, 3)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"numba enabled: {_kernels.NUMBA_ENABLED}")
    print(f"{'kernel':<14} {'instance':<20} {'jit s':>10} {'py s':>10} {'speedup':>8}")
    rows = [("girth", name, D, _kernels.girth_sweep, _kernels.girth_sweep_py) for name, D in GIRTH_CASES]
    rows += [
        ("longest_path", name, D, _kernels.longest_path_search, _kernels.longest_path_search_py)
        for name, D in PATH_CASES
    ]
    for kernel, name, D, fast, slow in rows:
        indptr, indices = D.csr()
        n = D.vertex_count
        if kernel == "girth":
            call_fast = lambda: fast(indptr, indices, n)  # noqa: E731
            call_slow = lambda: slow(indptr, indices, n)  # noqa: E731
        else:
            call_fast = lambda: fast(indptr, indices, n, n - 1, 10**9)  # noqa: E731
            call_slow = lambda: slow(indptr, indices, n, n - 1, 10**9)  # noqa: E731
        a, b = call_fast(), call_slow()
        assert int(a[0]) == int(b[0]), (kernel, name)
        tf, ts = best_of(call_fast, args.repeat), best_of(call_slow, args.repeat)
        print(f"{kernel:<14} {name:<20} {tf:>10.5f} {ts:>10.5f} {ts / tf:>7.1f}x")


if __name__ == "__main__":
    main()
