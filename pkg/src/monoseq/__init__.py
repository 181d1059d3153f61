"""Monotone integer sequence generators and an empirical complexity harness.

Subpackages by topic:

* :mod:`monoseq.streams` -- ordered-stream combinators (union, minus,
  left-biased union, all-products) over strictly increasing generators.
* :mod:`monoseq.hamming` -- five generators for multiplicative closures
  ("Hamming" / regular / smooth numbers) over a factor base.
* :mod:`monoseq.ulam`    -- five Ulam-sequence generators, the non-sum
  complement sequence, and the brute-force verification oracle.
* :mod:`monoseq.primes`  -- trial division and two stream sieves.
* :mod:`monoseq.bench`   -- timing, log-log growth exponents, density
  statistics, CSV export.
* :mod:`monoseq.cli`     -- the ``monoseq`` command.
"""

from .streams import (
    U64_MAX,
    MonotoneGenerator,
    Replay,
    all_products,
    minus,
    prefix,
    union2,
    union_left_biased,
    union_many,
)
from .hamming import (
    FactorBase,
    hamming_filter,
    hamming_generative_min_heads,
    hamming_generative_pair,
    hamming_recursive_products,
    hamming_union_fold,
    is_composite_of,
)
from .ulam import (
    CandidateEntry,
    UlamPrefix,
    candidate_insert,
    count_representations,
    non_ulam_v,
    ulam_generative,
    ulam_naive_filter,
    ulam_oeis_cubic,
    ulam_optimized_filter,
    ulam_variant_no_reverse_all_sums,
    ulam_variant_reverse_stop2,
)
from .primes import (
    composites_of_primes,
    primes_sieve_composites,
    primes_sieve_minus,
    primes_trial_division,
)
from .bench import (
    BenchSample,
    DensityStats,
    density_stats,
    export_csv,
    growth_exponent,
    time_algorithm,
)

__all__ = [
    "U64_MAX",
    "MonotoneGenerator",
    "Replay",
    "union2",
    "union_many",
    "union_left_biased",
    "minus",
    "all_products",
    "prefix",
    "FactorBase",
    "is_composite_of",
    "hamming_filter",
    "hamming_generative_pair",
    "hamming_generative_min_heads",
    "hamming_union_fold",
    "hamming_recursive_products",
    "CandidateEntry",
    "UlamPrefix",
    "candidate_insert",
    "count_representations",
    "ulam_oeis_cubic",
    "ulam_naive_filter",
    "ulam_variant_no_reverse_all_sums",
    "ulam_variant_reverse_stop2",
    "ulam_optimized_filter",
    "ulam_generative",
    "non_ulam_v",
    "primes_trial_division",
    "primes_sieve_minus",
    "composites_of_primes",
    "primes_sieve_composites",
    "BenchSample",
    "DensityStats",
    "time_algorithm",
    "growth_exponent",
    "density_stats",
    "export_csv",
]

__version__ = "0.1.0"
