"""Timing comparison of the compiled and pure-Python kernels.

Each low-level kernel runs on seeded random inputs at a few widths, then
two workloads that lean on them (orbit enumeration and exact rank-width)
run once per available backend.  Reported numbers are medians over
--repeat runs; the last column is pure-Python time over compiled time,
so values above one mean the extension pays off.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 9 --widths 8 16 32 64
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from vminor._kernels import (
    available_backends,
    get_backend,
    gf2_rank,
    induced_rows,
    lc_rows,
    pivot_rows,
    set_backend,
)
from vminor.graph import Graph
from vminor.rankwidth import rank_width_exact
from vminor.vertex_minor import lc_orbit

SEED = 1187


def random_rows(rng: random.Random, n: int) -> tuple[int, ...]:
    """Symmetric zero-diagonal adjacency rows on n positions."""
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def median_time(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def kernel_cases(widths: list[int]):
    rng = random.Random(SEED)
    for n in widths:
        rows = random_rows(rng, n)
        dense = tuple(rng.getrandbits(n) for _ in range(n))
        keep = sorted(rng.sample(range(n), max(2, n // 2)))
        inner = max(1, 20000 // n)
        yield (f"lc_rows n={n}", inner,
               lambda rows=rows, n=n, k=inner:
                   [lc_rows(rows, i % n) for i in range(k)])
        yield (f"pivot_rows n={n}", inner,
               lambda rows=rows, n=n, k=inner:
                   [pivot_rows(rows, i % n, (i + 1) % n) for i in range(k)])
        yield (f"gf2_rank n={n}", inner,
               lambda dense=dense, k=inner: [gf2_rank(dense) for _ in range(k)])
        yield (f"induced_rows n={n}", inner,
               lambda rows=rows, keep=keep, k=inner:
                   [induced_rows(rows, keep) for _ in range(k)])


def workload_cases():
    rng = random.Random(SEED + 1)
    path9 = Graph.path(range(9))
    pairs = [(i, j) for i in range(8) for j in range(i + 1, 8)]
    dense8 = Graph(range(8), [e for e in pairs if rng.random() < 0.5])
    yield "orbit of the nine-vertex path", 1, lambda: lc_orbit(path9)
    yield "exact rank-width, dense n=8", 1, lambda: rank_width_exact(dense8)


def run(repeat: int, widths: list[int]) -> None:
    backends = available_backends()
    print(f"backends: {', '.join(backends)}   repeat: {repeat}")
    header = f"{'case':34} {'calls':>6}"
    for b in backends:
        header += f" {b + ' (ms)':>14}"
    if len(backends) == 2:
        header += f" {'ratio':>7}"
    print(header)
    print("-" * len(header))
    cases = list(kernel_cases(widths)) + list(workload_cases())
    for label, calls, fn in cases:
        row = f"{label:34} {calls:>6}"
        times = {}
        for backend in backends:
            set_backend(backend)
            assert get_backend() == backend
            times[backend] = median_time(fn, repeat)
            row += f" {times[backend] * 1e3:>14.3f}"
        if len(backends) == 2:
            row += f" {times['python'] / times['cython']:>6.1f}x"
        print(row)
    set_backend(backends[-1])


def main() -> None:
    parser = argparse.ArgumentParser(
        description="compare the pure-Python and compiled kernels")
    parser.add_argument("--repeat", type=int, default=5,
                        help="runs per case, median reported (default 5)")
    parser.add_argument("--widths", type=int, nargs="+",
                        default=[8, 16, 32, 64],
                        help="row widths for the kernel microbenchmarks")
    args = parser.parse_args()
    run(args.repeat, args.widths)


if __name__ == "__main__":
    main()
