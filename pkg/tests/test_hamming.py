"""Multiplicative-closure generator tests.

The definitional filter is the oracle; the four generative constructions
are checked against it and against each other over several bases,
including a base with a non-prime element where greedy divide-out is wrong.
"""

from itertools import islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoseq.hamming import (
    FactorBase,
    hamming_filter,
    hamming_generative_min_heads,
    hamming_generative_pair,
    hamming_recursive_products,
    hamming_union_fold,
    is_composite_of,
)

REGULAR_PREFIX = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12]


def take(gen, n):
    return list(islice(gen, n))


def brute_closure(factors, bound):
    """Independent oracle: BFS closure of {1} under multiplication."""
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for v in frontier:
            for f in factors:
                w = v * f
                if w <= bound and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


class TestFactorBase:
    def test_normalizes_sorted_and_deduped(self):
        assert FactorBase([5, 2, 3, 2]).factors == (2, 3, 5)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            FactorBase([])

    def test_rejects_below_two(self):
        with pytest.raises(ValueError):
            FactorBase([1, 2])
        with pytest.raises(ValueError):
            FactorBase([0])

    def test_primality_flag(self):
        assert FactorBase([2, 3, 5]).all_prime
        assert not FactorBase([4, 6]).all_prime

    def test_equality_ignores_input_order(self):
        assert FactorBase([3, 2]) == FactorBase([2, 3])


class TestMembership:
    def test_regular_examples(self):
        p = FactorBase([2, 3, 5])
        assert is_composite_of(p, 1)
        assert is_composite_of(p, 60)
        assert not is_composite_of(p, 7)
        assert not is_composite_of(p, 14)

    def test_zero_and_negative_rejected(self):
        p = FactorBase([2])
        with pytest.raises(ValueError):
            is_composite_of(p, 0)
        with pytest.raises(ValueError):
            is_composite_of(p, -4)

    def test_nonprime_base_needs_backtracking(self):
        # 36 = 6*6, but dividing 4 out first strands 9
        p = FactorBase([4, 6])
        assert is_composite_of(p, 36)
        assert is_composite_of(p, 24)  # 4*6
        assert not is_composite_of(p, 8)
        assert not is_composite_of(p, 12)

    @given(st.integers(min_value=1, max_value=5000))
    @settings(max_examples=200)
    def test_matches_brute_closure_46(self, n):
        members = set(brute_closure((4, 6), 5000))
        assert is_composite_of(FactorBase([4, 6]), n) == (n in members)


def generators_for(base):
    fb = FactorBase(base)
    gens = {
        "filter": hamming_filter(fb),
        "min_heads": hamming_generative_min_heads(fb),
        "union_fold": hamming_union_fold(fb),
        "recursive_products": hamming_recursive_products(fb),
    }
    if len(fb.factors) == 2:
        gens["pair"] = hamming_generative_pair(*fb.factors)
    return gens


class TestGenerators:
    @pytest.mark.parametrize(
        "make",
        [
            lambda: hamming_filter(FactorBase([2, 3, 5])),
            lambda: hamming_generative_min_heads(FactorBase([2, 3, 5])),
            lambda: hamming_union_fold(FactorBase([2, 3, 5])),
            lambda: hamming_recursive_products(FactorBase([2, 3, 5])),
        ],
    )
    def test_regular_prefix(self, make):
        assert take(make(), 10) == REGULAR_PREFIX

    def test_pair_prefix(self):
        assert take(hamming_generative_pair(2, 3), 8) == [1, 2, 3, 4, 6, 8, 9, 12]

    def test_pair_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            hamming_generative_pair(3, 2)
        with pytest.raises(ValueError):
            hamming_generative_pair(1, 2)

    @pytest.mark.parametrize("base", [(2,), (2, 3), (2, 3, 5), (3, 5, 7), (4, 6)])
    def test_all_agree_on_brute_closure(self, base):
        bound = 300_000
        expected = brute_closure(base, bound)
        for name, gen in generators_for(base).items():
            got = []
            for v in gen:
                if v > bound:
                    break
                got.append(v)
            assert got == expected, f"{name} diverges for base {base}"

    def test_order_insensitive_base(self):
        a = take(hamming_recursive_products(FactorBase([5, 2, 3])), 50)
        b = take(hamming_recursive_products(FactorBase([2, 3, 5])), 50)
        assert a == b

    def test_singleton_base_is_powers(self):
        assert take(hamming_union_fold(FactorBase([3])), 5) == [1, 3, 9, 27, 81]

    def test_overflow_reported_not_wrapped(self):
        g = hamming_union_fold(FactorBase([2]))
        with pytest.raises(OverflowError):
            take(g, 66)  # 2**65 leaves the value domain

    def test_monotone_over_many_yields(self):
        out = take(hamming_union_fold(FactorBase([2, 3, 5])), 10_000)
        assert all(x < y for x, y in zip(out, out[1:]))

    def test_density_sanity_regular(self):
        # |C_{2,3,5} up to 10**6| is 507: log-cubed growth, not linear
        n = 0
        for v in hamming_filter(FactorBase([2, 3, 5])):
            if v > 10**6:
                break
            n += 1
        assert n == 507
