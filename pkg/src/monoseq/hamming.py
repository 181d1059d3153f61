"""Generators for multiplicative-closure ("Hamming") sequences.

Given a factor base P (integers >= 2), the closure C_P is the smallest set
containing 1 and closed under multiplication by elements of P.  Classic
instance: P = {2, 3, 5}, the regular numbers 1, 2, 3, 4, 5, 6, 8, 9, 10, 12.

Five generators are provided, from the definitional (slow) filter over all
naturals to four generative constructions that only ever touch members.
All of them yield the same sequence for the same base.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _hamming_kernels as _k
from .streams import (
    MonotoneGenerator,
    Replay,
    checked_mul,
    scaled,
    union_left_biased,
    union_many,
    all_products,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FactorBase:
    """Validated, normalized factor base: sorted, duplicate-free, all >= 2."""

    factors: tuple[int, ...]
    all_prime: bool = field(init=False, repr=False, compare=False)

    def __init__(self, factors):
        fs = sorted({int(f) for f in factors})
        if not fs:
            raise ValueError("factor base must be nonempty")
        if fs[0] < 2:
            raise ValueError(f"factor base elements must be >= 2, got {fs[0]}")
        object.__setattr__(self, "factors", tuple(fs))
        object.__setattr__(self, "all_prime", all(_is_prime(f) for f in fs))

    def __iter__(self):
        return iter(self.factors)


def _as_base(p) -> FactorBase:
    return p if isinstance(p, FactorBase) else FactorBase(p)


def is_composite_of(p, n: int) -> bool:
    """True iff n is a product of zero or more elements of p; n=1 is True.

    For a base with a non-prime element, divisibility alone is ambiguous
    (dividing 36 by 4 strands a 9 that {4,6} can never reach, yet 36=6*6),
    so the general case backtracks over which factor to divide out.
    """
    p = _as_base(p)
    if n == 0:
        raise ValueError("membership is defined for n >= 1 only")
    if n < 0:
        raise ValueError("membership is defined for unsigned values")
    if p.all_prime:
        for f in p.factors:
            while n % f == 0:
                n //= f
        return n == 1
    return _member(p.factors, 0, n)


def _member(fs: tuple[int, ...], i: int, n: int) -> bool:
    if n == 1:
        return True
    if i == len(fs):
        return False
    f = fs[i]
    if n % f == 0 and _member(fs, i, n // f):
        return True
    return _member(fs, i + 1, n)


def hamming_filter(p) -> MonotoneGenerator:
    """Definitional reference generator: filter every natural >= 1.

    Deliberately slow (the closure has density 0); kept as the oracle the
    generative implementations are checked against.
    """
    p = _as_base(p)
    if p.all_prime:
        # same enumerate-and-divide-out test, batched per block
        fs = np.array(p.factors, dtype=np.int64)
        block = 1 << 16
        out = np.empty(block, dtype=np.int64)
        lo = 1
        while True:
            found = _k.scan_block(lo, lo + block, fs, out)
            for i in range(found):
                yield int(out[i])
            lo += block
    else:
        n = 1
        while True:
            if is_composite_of(p, n):
                yield n
            n += 1


def hamming_generative_pair(x: int, y: int) -> MonotoneGenerator:
    """Two-factor closure via two cursors into the output under construction.

    Candidates are x*(value at cursor x) and y*(value at cursor y); the
    minimum is emitted and every cursor whose candidate matched advances.
    """
    if not (2 <= x < y):
        raise ValueError(f"requires 2 <= x < y, got x={x}, y={y}")
    return _pair_closure(x, y)


def _pair_closure(x: int, y: int) -> MonotoneGenerator:
    buf = [1]
    yield 1
    ix = iy = 0
    while True:
        fx = checked_mul(x, buf[ix])
        fy = checked_mul(y, buf[iy])
        if fx < fy:
            nxt = fx
            ix += 1
        elif fy < fx:
            nxt = fy
            iy += 1
        else:
            nxt = fx
            ix += 1
            iy += 1
        buf.append(nxt)
        yield nxt


def hamming_generative_min_heads(p) -> MonotoneGenerator:
    """General closure: one cursor per factor, emit the min of the heads.

    Every cursor whose candidate ties the minimum advances, so duplicates
    are emitted exactly once.  The output buffer grows without bound
    (cursors index into it); acceptable at desk scale.
    """
    p = _as_base(p)
    fs = p.factors
    buf = [1]
    yield 1
    cursors = [0] * len(fs)
    while True:
        heads = [checked_mul(f, buf[c]) for f, c in zip(fs, cursors)]
        m = min(heads)
        for i, h in enumerate(heads):
            if h == m:
                cursors[i] += 1
        buf.append(m)
        yield m


def hamming_union_fold(p) -> MonotoneGenerator:
    """General closure as a fold of ordered unions, one stream per factor.

    Each per-factor stream is factor * (this generator's own output); the
    self-reference is realized by reading the retained emitted prefix,
    which is always ahead of every consumer.
    """
    p = _as_base(p)
    buf: list[int] = []

    def emitted(i=0):
        while True:
            yield buf[i]  # guaranteed present before any consumer needs it
            i += 1

    merged = union_many([scaled(f, emitted()) for f in p.factors])
    buf.append(1)
    yield 1
    for v in merged:
        buf.append(v)
        yield v


def hamming_recursive_products(p) -> MonotoneGenerator:
    """General closure by recursion on the base: powers, rest, cross products.

    For base {x} + rest (ascending): the left-biased union of the powers of
    x, the closure of rest, and all products of the two.  Left bias is safe
    because x is the least element of everything on its right.
    """
    p = _as_base(p)
    yield 1
    yield from _closure_aux(list(p.factors))


def _powers(x: int) -> MonotoneGenerator:
    v = x
    while True:
        yield v
        v = checked_mul(v, x)


def _closure_aux(factors: list[int]) -> MonotoneGenerator:
    if not factors:
        return
    x, rest = factors[0], factors[1:]
    h = Replay(_closure_aux(rest))
    yield from union_left_biased(
        union_left_biased(_powers(x), h.reader()),
        all_products(_powers(x), h.reader()),
    )
