"""Timing harness for the rank algorithms.

Measures wall time of the rank computation over a geometric grid of n and
fits the growth exponent as the least-squares slope of log(time) against
log(n). The query fraction is fixed across the whole grid to a ratio of
consecutive Fibonacci numbers: its continued fraction is all ones, the
worst case for the Euclid-style recursion inside the floor sums, so easy
inputs cannot flatter the fit.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction

from .farey import rank_brute, rank_improved, rank_pawlewicz

__all__ = ["BenchRecord", "golden_x", "run_grid", "fit_exponent", "to_csv", "ALGOS"]

ALGOS = {
    "improved": rank_improved,
    "pawlewicz": rank_pawlewicz,
    "brute": rank_brute,
}


def golden_x(depth: int = 44) -> Fraction:
    """Ratio of consecutive Fibonacci numbers, a hair under the inverse
    golden ratio; depth is the length of its all-ones continued fraction."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    a, b = 1, 1
    for _ in range(depth):
        a, b = b, a + b
    return Fraction(a, b)


@dataclass
class BenchRecord:
    """One timed grid point."""

    algo: str
    n: int
    reps: int
    median_ns: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.reps < 3:
            raise ValueError("need at least 3 repetitions")
        if self.median_ns <= 0:
            raise ValueError("median time must be positive")


def run_grid(algo: str, sizes, reps: int, x: Fraction | None = None) -> list:
    """Time one algorithm across an ascending grid of n.

    The grid must hold at least 4 sizes spanning at least two decades so a
    slope fit is meaningful. Per size, one warm-up run is discarded and the
    median of reps wall-clock timings is kept.
    """
    if algo not in ALGOS:
        raise ValueError(f"unknown algorithm {algo!r}")
    sizes = list(sizes)
    if len(sizes) < 4:
        raise ValueError("need at least 4 grid sizes")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly ascending")
    if sizes[-1] < 100 * sizes[0]:
        raise ValueError("sizes must span at least two decades")
    if reps < 3:
        raise ValueError("need at least 3 repetitions")
    fn = ALGOS[algo]
    if x is None:
        x = golden_x()
    records = []
    for n in sizes:
        fn(x, n)  # warm-up, discarded
        times = []
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            fn(x, n)
            times.append(time.perf_counter_ns() - t0)
        records.append(BenchRecord(algo=algo, n=n, reps=reps, median_ns=round(statistics.median(times))))
    return records


def fit_exponent(records) -> float:
    """Least-squares slope of log median time against log n."""
    records = list(records)
    if len(records) < 4:
        raise ValueError("need at least 4 records to fit a slope")
    xs = [math.log(r.n) for r in records]
    ys = [math.log(r.median_ns) for r in records]
    return statistics.linear_regression(xs, ys).slope


def to_csv(records) -> str:
    """CSV rows with the fixed header algo,n,reps,median_ns."""
    lines = ["algo,n,reps,median_ns"]
    lines.extend(f"{r.algo},{r.n},{r.reps},{r.median_ns}" for r in records)
    return "\n".join(lines) + "\n"
