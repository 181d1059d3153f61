"""Ulam sequence generators and their verification oracle.

The Ulam sequence starts u1=1, u2=2; each later term is the smallest
integer greater than its predecessor that is the sum of two distinct
earlier terms in exactly one way:

    1, 2, 3, 4, 6, 8, 11, 13, 16, 18, 26, 28, ...

Six generators cover the cubic-to-optimized spectrum:

* :func:`ulam_oeis_cubic`                 O(n^3): linear membership scans
* :func:`ulam_naive_filter`               rebuilds the reversed prefix per
  candidate and counts all sums (both inefficiencies on purpose)
* :func:`ulam_variant_no_reverse_all_sums`  fixes only the rebuild
* :func:`ulam_variant_reverse_stop2`        fixes only the early stop
* :func:`ulam_optimized_filter`           both fixes; the fast one
* :func:`ulam_generative`                 candidate queue of pending sums

All of them yield identical output; the benchmark module exists to measure
their separations, so none of the deliberately slow ones may be quietly
optimized.

:func:`count_representations` is the brute-force oracle used only for
verification, never inside a generator.  :func:`non_ulam_v` yields the
complementary sequence of integers that no pair of Ulam terms sums to
(23, 25, 33, ...).
"""

from typing import NamedTuple

import numpy as np

from . import _ulam_kernels as _k
from .streams import MonotoneGenerator


class CandidateEntry(NamedTuple):
    """A pending sum value with its saturating pair-multiplicity (1 or 2)."""

    value: int
    multiplicity: int


class UlamPrefix:
    """The increasing Ulam terms computed so far, plus a synchronized
    descending copy (the state the two-cursor filters scan)."""

    def __init__(self):
        self.terms = [1, 2]
        self.reversed = [2, 1]

    def append(self, value: int) -> None:
        if value <= self.terms[-1]:
            raise ValueError(f"{value} would break strict monotonicity")
        self.terms.append(value)
        self.reversed.insert(0, value)


def count_representations(z: int, prefix: list[int]) -> int:
    """Number of index pairs i<j with prefix[i]+prefix[j] == z.

    Brute-force pair enumeration over the strictly increasing prefix;
    this is the verification oracle and is never called by a generator.
    """
    n = len(prefix)
    count = 0
    for i in range(n):
        a = prefix[i]
        if a + a >= z:
            break  # any further pair sums at least 2a
        for j in range(i + 1, n):
            s = a + prefix[j]
            if s == z:
                count += 1
                break  # values are distinct: at most one partner per a
            if s > z:
                break
    return count


def candidate_insert(
    sums: list[int], queue: list[CandidateEntry]
) -> list[CandidateEntry]:
    """Merge a strictly increasing, duplicate-free list of sums into the queue.

    A sum absent from the queue enters with multiplicity 1; a sum matching
    an existing entry saturates that entry's multiplicity to 2.  Order is
    preserved; the inputs are not mutated.
    """
    out: list[CandidateEntry] = []
    i = j = 0
    while i < len(sums) and j < len(queue):
        s = sums[i]
        entry = queue[j]
        if s < entry.value:
            out.append(CandidateEntry(s, 1))
            i += 1
        elif s > entry.value:
            out.append(entry)
            j += 1
        else:
            out.append(CandidateEntry(s, 2))
            i += 1
            j += 1
    out.extend(CandidateEntry(s, 1) for s in sums[i:])
    out.extend(queue[j:])
    return out


_SEED = (1, 2)


def _stream_kernel(extend) -> MonotoneGenerator:
    """Drive an extend-style kernel as a pull generator.

    The kernel computes terms in modest increments ahead of the consumer
    (bounded overshoot keeps benchmark timings honest).  ``extend`` returns
    the new term count and raises OverflowError when the next candidate
    would leave the checked value range.
    """
    terms = np.empty(4096, dtype=np.int64)
    terms[: len(_SEED)] = _SEED
    count = len(_SEED)
    emitted = 0
    while True:
        while emitted < count:
            yield int(terms[emitted])
            emitted += 1
        target = count + max(32, count // 16)
        if target > terms.shape[0]:
            grown = np.empty(max(target, 2 * terms.shape[0]), dtype=np.int64)
            grown[:count] = terms[:count]
            terms = grown
        count = extend(terms, count, target)


def _check_count(count: int) -> int:
    if count == _k.OVERFLOW:
        raise OverflowError("next Ulam candidate leaves the checked value range")
    return count


def ulam_oeis_cubic() -> MonotoneGenerator:
    """Cubic-total generator: per candidate, membership of z - u_i is decided
    by a linear scan of the prefix, abandoning the candidate at the second
    representation.  Deliberately O(n^2) per term."""

    def extend(terms, count, target):
        return _check_count(_k.extend_oeis(terms, count, target))

    return _stream_kernel(extend)


def _filter_stream(rebuild: bool, stop_at_two: bool) -> MonotoneGenerator:
    scratch_box = {}

    def extend(terms, count, target):
        scratch = scratch_box.get("s")
        if scratch is None or scratch.shape[0] < terms.shape[0]:
            scratch = np.empty(terms.shape[0], dtype=np.int64)
            scratch_box["s"] = scratch
        return _check_count(
            _k.extend_filter(terms, count, target, rebuild, stop_at_two, scratch)
        )

    return _stream_kernel(extend)


def ulam_naive_filter() -> MonotoneGenerator:
    """Two-cursor filter that rebuilds the reversed prefix from scratch for
    every candidate and counts all sums without early stop.  Both
    inefficiencies are intentional and must stay."""
    return _filter_stream(rebuild=True, stop_at_two=False)


def ulam_variant_no_reverse_all_sums() -> MonotoneGenerator:
    """Naive filter with the reversed prefix maintained incrementally, still
    counting all sums ("no reverse, all sums")."""
    return _filter_stream(rebuild=False, stop_at_two=False)


def ulam_variant_reverse_stop2() -> MonotoneGenerator:
    """Naive filter that aborts a candidate at the second representation but
    still rebuilds the reversed prefix per candidate ("reverse, stops at 2")."""
    return _filter_stream(rebuild=True, stop_at_two=True)


def ulam_optimized_filter() -> MonotoneGenerator:
    """The fast filter: incremental reversed prefix and early stop at the
    second representation."""
    return _filter_stream(rebuild=False, stop_at_two=True)


def ulam_generative() -> MonotoneGenerator:
    """Queue-driven generator: the queue head (after dropping duplicated
    entries) is the next term; its sums with all strictly smaller earlier
    terms are merged back into the queue.  Seeded with [(3, 1)]."""
    state = {
        "qv_a": np.empty(1 << 12, dtype=np.int64),
        "qocc_a": np.empty(1 << 12, dtype=np.uint8),
        "qv_b": np.empty(1 << 12, dtype=np.int64),
        "qocc_b": np.empty(1 << 12, dtype=np.uint8),
        "qstate": np.array([0, 1, 0], dtype=np.int64),
        "status": np.zeros(1, dtype=np.int64),
    }
    state["qv_a"][0] = 3
    state["qocc_a"][0] = 1

    def extend(terms, count, target):
        while True:
            count = _k.extend_generative(
                terms,
                count,
                state["qv_a"],
                state["qocc_a"],
                state["qv_b"],
                state["qocc_b"],
                state["qstate"],
                target,
                state["status"],
            )
            code = int(state["status"][0])
            if code == 0:
                return count
            if code == _k.OVERFLOW:
                return _check_count(_k.OVERFLOW)
            # NEED_SPACE: compact the live queue into larger buffers, resume
            qs, qe, active = (int(v) for v in state["qstate"])
            live = qe - qs
            cap = max(2 * state["qv_a"].shape[0], live + 32 * target)
            old_v = state["qv_a"] if active == 0 else state["qv_b"]
            old_o = state["qocc_a"] if active == 0 else state["qocc_b"]
            state["qv_a"] = np.empty(cap, dtype=np.int64)
            state["qocc_a"] = np.empty(cap, dtype=np.uint8)
            state["qv_b"] = np.empty(cap, dtype=np.int64)
            state["qocc_b"] = np.empty(cap, dtype=np.uint8)
            state["qv_a"][:live] = old_v[qs:qe]
            state["qocc_a"][:live] = old_o[qs:qe]
            state["qstate"][:] = (0, live, 0)

    return _stream_kernel(extend)


def ulam_generators() -> dict:
    """All six Ulam generator factories, keyed by registry name."""
    return {
        "ulam_oeis_cubic": ulam_oeis_cubic,
        "ulam_naive_filter": ulam_naive_filter,
        "ulam_variant_no_reverse_all_sums": ulam_variant_no_reverse_all_sums,
        "ulam_variant_reverse_stop2": ulam_variant_reverse_stop2,
        "ulam_optimized_filter": ulam_optimized_filter,
        "ulam_generative": ulam_generative,
    }


def non_ulam_v(block: int = 1 << 15) -> MonotoneGenerator:
    """Ascending integers z >= 3 that zero pairs of Ulam terms sum to.

    Works block-wise against the optimized generator: within each value
    window, every pairwise sum landing in the window is marked, and the
    unmarked values are exactly the non-sums (Ulam terms themselves always
    carry one representation, so they are marked too).
    """
    src = ulam_optimized_filter()
    terms: list[int] = []
    head = next(src)
    lo = 3
    while True:
        hi = lo + block
        while head < hi:
            terms.append(head)
            head = next(src)
        t = np.array(terms, dtype=np.int64)
        marked = np.zeros(hi - lo, dtype=bool)
        for j in range(len(t) - 1, -1, -1):
            uj = int(t[j])
            if uj + 1 >= hi:
                continue
            if uj + uj < lo:
                break  # every remaining pair sums below the window
            # partners t[i] with i<j and lo <= t[i]+uj < hi
            a = int(np.searchsorted(t[:j], lo - uj, side="left"))
            b = int(np.searchsorted(t[:j], hi - uj, side="left"))
            if a < b:
                marked[t[a:b] + uj - lo] = True
        for off in np.flatnonzero(~marked):
            yield lo + int(off)
        lo = hi
