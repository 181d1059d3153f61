"""Timing harness, growth-exponent estimation, density statistics, CSV export.

Wall-clock measurements use the monotonic clock, a discarded warm-up run
and the median over repetitions.  Points below a 10 ms resolution floor
are excluded from log-log regression: below it, clock granularity and
interpreter noise dominate and fitted slopes are garbage.
"""

import math
import statistics
import time
from dataclasses import dataclass
from itertools import islice
from pathlib import Path
from typing import Callable, Iterable, TextIO

from . import hamming, primes, ulam
from .streams import MonotoneGenerator

RESOLUTION_FLOOR_NS = 10_000_000  # 10 ms

#: registered generator factories, keyed by the canonical snake_case names
ALGORITHMS: dict[str, Callable[[], MonotoneGenerator]] = {
    **ulam.ulam_generators(),
    "non_ulam_v": ulam.non_ulam_v,
    "primes_trial_division": primes.primes_trial_division,
    "primes_sieve_minus": primes.primes_sieve_minus,
    "primes_sieve_composites": primes.primes_sieve_composites,
}

#: short forms accepted anywhere a canonical name is
ALIASES = {
    "ulam_oeis": "ulam_oeis_cubic",
    "ulam_optimized": "ulam_optimized_filter",
}

ULAM_FAMILY = tuple(ulam.ulam_generators())
PRIMES_FAMILY = (
    "primes_trial_division",
    "primes_sieve_minus",
    "primes_sieve_composites",
)

HAMMING_FAMILY = (
    "hamming_filter",
    "hamming_generative_pair",
    "hamming_generative_min_heads",
    "hamming_union_fold",
    "hamming_recursive_products",
)


def hamming_algorithms(factors) -> dict[str, Callable[[], MonotoneGenerator]]:
    """Factories for the five closure generators over a fixed factor base."""
    base = hamming.FactorBase(factors)
    out = {
        "hamming_filter": lambda: hamming.hamming_filter(base),
        "hamming_generative_min_heads": lambda: hamming.hamming_generative_min_heads(base),
        "hamming_union_fold": lambda: hamming.hamming_union_fold(base),
        "hamming_recursive_products": lambda: hamming.hamming_recursive_products(base),
    }
    if len(base.factors) == 2:
        x, y = base.factors
        out["hamming_generative_pair"] = lambda: hamming.hamming_generative_pair(x, y)
    return out


def resolve(name: str) -> Callable[[], MonotoneGenerator]:
    key = ALIASES.get(name, name)
    try:
        return ALGORITHMS[key]
    except KeyError:
        known = ", ".join(sorted(ALGORITHMS) + sorted(ALIASES))
        raise ValueError(f"unknown algorithm {name!r}; registered: {known}") from None


@dataclass(frozen=True)
class BenchSample:
    algorithm: str
    n: int
    elapsed_ns: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.elapsed_ns < 0:
            raise ValueError("elapsed_ns must be >= 0")


@dataclass(frozen=True)
class DensityStats:
    n: int
    u_n: int
    ratio: float
    nonsum_count: int


def _consume(factory: Callable[[], MonotoneGenerator], n: int) -> int:
    gen = factory()
    last = 0
    for last in islice(gen, n):
        pass
    return last


def time_algorithm(algorithm: str, n: int, repetitions: int = 3) -> BenchSample:
    """Median wall time to produce the algorithm's first n terms.

    One warm-up run is discarded first; it is sized at min(n, 2048), enough
    to trigger JIT compilation and cache warming without doubling long runs.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    factory = resolve(algorithm)
    _consume(factory, min(n, 2048))  # warm-up, discarded
    times = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        _consume(factory, n)
        times.append(time.perf_counter_ns() - t0)
    name = ALIASES.get(algorithm, algorithm)
    return BenchSample(name, n, int(statistics.median(times)))


def growth_exponent(samples: Iterable[BenchSample]) -> float:
    """Least-squares slope of log2(elapsed) against log2(n).

    Samples under the 10 ms resolution floor are dropped; at least three
    usable points with distinct n are required.
    """
    usable = [s for s in samples if s.elapsed_ns >= RESOLUTION_FLOOR_NS]
    if len({s.n for s in usable}) < 3:
        raise ValueError(
            "insufficient data: need >= 3 samples above the 10 ms floor "
            f"with distinct n, got {len(usable)}"
        )
    xs = [math.log2(s.n) for s in usable]
    ys = [math.log2(s.elapsed_ns) for s in usable]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def density_stats(n: int) -> DensityStats:
    """u_n, the ratio u_n/n, and the count of non-sum values <= u_n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    u_n = _consume(ulam.ulam_optimized_filter, n)
    nonsum = 0
    for v in ulam.non_ulam_v():
        if v > u_n:
            break
        nonsum += 1
    return DensityStats(n=n, u_n=u_n, ratio=u_n / n, nonsum_count=nonsum)


def export_csv(samples: Iterable[BenchSample], destination) -> int:
    """Write samples as CSV (header: algorithm,n,elapsed_ns); returns the
    data-row count.  Destination may be a path or an open text sink."""
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="ascii", newline="") as fh:
            return export_csv(samples, fh)
    sink: TextIO = destination
    sink.write("algorithm,n,elapsed_ns\n")
    rows = 0
    for s in samples:
        sink.write(f"{s.algorithm},{s.n},{s.elapsed_ns}\n")
        rows += 1
    return rows


def parse_csv(source) -> list[BenchSample]:
    """Inverse of :func:`export_csv` (used by tests and external tooling)."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="ascii") as fh:
            return parse_csv(fh)
    lines = [ln.strip() for ln in source if ln.strip()]
    if not lines or lines[0] != "algorithm,n,elapsed_ns":
        raise ValueError("not a benchmark CSV: bad or missing header")
    out = []
    for ln in lines[1:]:
        algo, n, ns = ln.split(",")
        out.append(BenchSample(algo, int(n), int(ns)))
    return out
