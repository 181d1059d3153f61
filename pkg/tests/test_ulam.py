"""Ulam generator tests: oracle examples, queue mechanics, cross-variant
prefix equality, and the complement sequence."""

from itertools import islice

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoseq.ulam import (
    CandidateEntry,
    UlamPrefix,
    candidate_insert,
    count_representations,
    non_ulam_v,
    ulam_generative,
    ulam_generators,
    ulam_naive_filter,
    ulam_oeis_cubic,
    ulam_optimized_filter,
    ulam_variant_no_reverse_all_sums,
    ulam_variant_reverse_stop2,
)

ULAM_26 = [1, 2, 3, 4, 6, 8, 11, 13, 16, 18, 26, 28, 36, 38, 47, 48,
           53, 57, 62, 69, 72, 77, 82, 87, 97, 99]

V_PREFIX = [23, 25, 33, 35, 43, 45, 67, 92, 94, 96]

ALL_VARIANTS = [
    ulam_oeis_cubic,
    ulam_naive_filter,
    ulam_variant_no_reverse_all_sums,
    ulam_variant_reverse_stop2,
    ulam_optimized_filter,
    ulam_generative,
]


def take(gen, n):
    return list(islice(gen, n))


class TestOracle:
    def test_examples(self):
        prefix = [1, 2, 3, 4, 6, 8]
        assert count_representations(11, prefix) == 1  # 3+8
        assert count_representations(10, prefix) == 2  # 2+8, 4+6
        assert count_representations(5, [1, 2, 3]) == 1  # 2+3
        assert count_representations(5, [1, 2, 3, 4]) == 2  # 1+4, 2+3
        assert count_representations(2, [1]) == 0

    def test_distinct_terms_only(self):
        # 8 = 4+4 does not count; terms must be distinct
        assert count_representations(8, [1, 2, 4]) == 0

    @given(st.integers(min_value=3, max_value=60),
           st.lists(st.integers(min_value=1, max_value=40), unique=True, min_size=1).map(sorted))
    @settings(max_examples=200)
    def test_matches_pair_enumeration(self, z, prefix):
        expected = sum(
            1
            for i in range(len(prefix))
            for j in range(i + 1, len(prefix))
            if prefix[i] + prefix[j] == z
        )
        assert count_representations(z, prefix) == expected


class TestCandidateQueue:
    def test_new_sums_enter_with_multiplicity_one(self):
        q = candidate_insert([3, 5], [])
        assert q == [CandidateEntry(3, 1), CandidateEntry(5, 1)]

    def test_collision_saturates_to_two(self):
        q = [CandidateEntry(3, 1), CandidateEntry(7, 2)]
        out = candidate_insert([3, 7, 9], q)
        assert out == [CandidateEntry(3, 2), CandidateEntry(7, 2), CandidateEntry(9, 1)]

    def test_inputs_not_mutated(self):
        sums = [4]
        q = [CandidateEntry(4, 1)]
        candidate_insert(sums, q)
        assert sums == [4] and q == [CandidateEntry(4, 1)]

    @given(
        st.lists(st.integers(min_value=1, max_value=100), unique=True).map(sorted),
        st.lists(st.integers(min_value=1, max_value=100), unique=True).map(sorted),
    )
    @settings(max_examples=200)
    def test_merge_is_ordered_union_with_saturation(self, sums, qvals):
        queue = [CandidateEntry(v, 1) for v in qvals]
        out = candidate_insert(sums, queue)
        assert [e.value for e in out] == sorted(set(sums) | set(qvals))
        for e in out:
            expected = 2 if e.value in sums and e.value in qvals else 1
            assert e.multiplicity == expected


class TestUlamPrefix:
    def test_seed(self):
        p = UlamPrefix()
        assert p.terms == [1, 2]
        assert p.reversed == [2, 1]

    def test_append_keeps_copies_synchronized(self):
        p = UlamPrefix()
        p.append(3)
        p.append(4)
        assert p.terms == [1, 2, 3, 4]
        assert p.reversed == [4, 3, 2, 1]

    def test_append_rejects_non_increasing(self):
        p = UlamPrefix()
        with pytest.raises(ValueError):
            p.append(2)


class TestGenerators:
    @pytest.mark.parametrize("make", ALL_VARIANTS)
    def test_26_term_prefix(self, make):
        assert take(make(), 26) == ULAM_26

    def test_registry_covers_all_variants(self):
        assert set(ulam_generators()) == {
            "ulam_oeis_cubic",
            "ulam_naive_filter",
            "ulam_variant_no_reverse_all_sums",
            "ulam_variant_reverse_stop2",
            "ulam_optimized_filter",
            "ulam_generative",
        }

    def test_prefix_equality_2000_terms(self):
        reference = take(ulam_optimized_filter(), 2000)
        for name, make in ulam_generators().items():
            if name in ("ulam_optimized_filter", "ulam_oeis_cubic"):
                continue
            assert take(make(), 2000) == reference, name
        # cubic one at a depth it can afford
        assert take(ulam_oeis_cubic(), 600) == reference[:600]

    def test_every_term_has_one_representation(self):
        terms = take(ulam_optimized_filter(), 200)
        for idx in range(2, len(terms)):
            assert count_representations(terms[idx], terms[:idx]) == 1

    def test_no_qualifying_value_is_skipped(self):
        terms = take(ulam_optimized_filter(), 120)
        members = set(terms)
        for z in range(3, terms[-1]):
            if z in members:
                continue
            assert count_representations(z, [t for t in terms if t < z]) != 1

    def test_growth_upper_bound(self):
        # u_{k+1} <= u_k + u_{k-1}: the largest candidate sum always qualifies
        terms = take(ulam_generative(), 500)
        for a, b, c in zip(terms, terms[1:], terms[2:]):
            assert c <= a + b

    def test_generative_matches_pure_python_queue(self):
        # independent route: drive the queue with candidate_insert directly
        terms = [1, 2]
        queue = [CandidateEntry(3, 1)]
        while len(terms) < 300:
            while queue and queue[0].multiplicity == 2:
                queue = queue[1:]
            head = queue[0]
            assert head.multiplicity == 1
            queue = queue[1:]
            u = head.value
            sums = [u + t for t in terms if t < u]
            terms.append(u)
            queue = candidate_insert(sums, queue)
            assert all(x.value < y.value for x, y in zip(queue, queue[1:]))
        assert terms == take(ulam_generative(), 300)


class TestNonSums:
    def test_v_prefix(self):
        assert take(non_ulam_v(), 10) == V_PREFIX

    def test_v_excludes_ulam_terms_and_sums(self):
        ulam = take(ulam_optimized_filter(), 400)
        bound = ulam[-1]
        vs = []
        for v in non_ulam_v():
            if v > bound:
                break
            vs.append(v)
        members = set(ulam)
        for v in vs:
            assert v not in members
            assert count_representations(v, [t for t in ulam if t < v]) == 0

    def test_v_is_complete_against_oracle(self):
        ulam = take(ulam_optimized_filter(), 400)
        bound = ulam[-1]
        expected = [
            z
            for z in range(3, bound + 1)
            if count_representations(z, [t for t in ulam if t < z]) == 0
        ]
        got = []
        for v in non_ulam_v():
            if v > bound:
                break
            got.append(v)
        assert got == expected

    def test_small_block_size_equivalent(self):
        a = take(non_ulam_v(block=64), 40)
        b = take(non_ulam_v(), 40)
        assert a == b
