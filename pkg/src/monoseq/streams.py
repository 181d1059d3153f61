"""Ordered-stream combinators over strictly increasing integer generators.

A "monotone generator" here is any Python iterator that yields a strictly
increasing sequence of unsigned 64-bit integers.  Infinite streams are the
normal case; a finite input simply exhausts, and every combinator treats
exhaustion as "no further elements on that side".

Generators are single-owner: never share one iterator between two consumers.
When a stream must be read more than once (e.g. the second operand of
``all_products`` feeds every row), wrap it in :class:`Replay` and hand each
consumer its own ``reader()``.

Arithmetic that can leave the 64-bit domain goes through :func:`checked_mul`
/ :func:`checked_add`, which raise :class:`OverflowError` instead of ever
yielding a non-monotone value.
"""

import sys
from itertools import chain, islice
from typing import Iterable, Iterator

U64_MAX = 2**64 - 1


def _stack_headroom(depth: int) -> None:
    # nested stream recursions resume several frames per layer
    need = 8 * depth + 1000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)

MonotoneGenerator = Iterator[int]


def checked_mul(x: int, y: int) -> int:
    r = x * y
    if r > U64_MAX:
        raise OverflowError(f"product {x}*{y} exceeds the unsigned 64-bit domain")
    return r


def checked_add(x: int, y: int) -> int:
    r = x + y
    if r > U64_MAX:
        raise OverflowError(f"sum {x}+{y} exceeds the unsigned 64-bit domain")
    return r


def prefix(stream: Iterable[int], k: int) -> list[int]:
    """First ``k`` values of a stream, as a list (shorter if it exhausts)."""
    return list(islice(stream, k))


class Replay:
    """Buffers a single-owner iterator so several readers can traverse it.

    Each ``reader()`` is an independent iterator over the same underlying
    values; the source is pulled lazily and only once.  The buffer retains
    every value ever pulled, which is the documented desk-scale trade-off
    for self-referential sequence definitions.
    """

    def __init__(self, source: Iterable[int]):
        self._source = iter(source)
        self._cache: list[int] = []

    def reader(self, start: int = 0) -> MonotoneGenerator:
        i = start
        while True:
            while i >= len(self._cache):
                v = next(self._source, None)
                if v is None:
                    return
                self._cache.append(v)
            yield self._cache[i]
            i += 1


def scaled(k: int, stream: Iterable[int]) -> MonotoneGenerator:
    """k * s for every s in the stream, with checked products."""
    for v in stream:
        yield checked_mul(k, v)


def union2(a: Iterable[int], b: Iterable[int]) -> MonotoneGenerator:
    """Sorted set-union of two strictly increasing streams.

    A value present in both inputs is emitted once; both inputs advance.
    """
    a, b = iter(a), iter(b)
    ha, hb = next(a, None), next(b, None)
    while ha is not None and hb is not None:
        if ha < hb:
            yield ha
            ha = next(a, None)
        elif hb < ha:
            yield hb
            hb = next(b, None)
        else:
            yield ha
            ha, hb = next(a, None), next(b, None)
    while ha is not None:
        yield ha
        ha = next(a, None)
    while hb is not None:
        yield hb
        hb = next(b, None)


def union_many(streams: list[Iterable[int]]) -> MonotoneGenerator:
    """Right-fold of :func:`union2` over a nonempty list of streams."""
    if not streams:
        raise ValueError("union_many needs at least one input stream")
    result: Iterable[int] = streams[-1]
    for s in streams[-2::-1]:
        result = union2(s, result)
    return iter(result)


def union_left_biased(a: Iterable[int], b: Iterable[int]) -> MonotoneGenerator:
    """Union that emits a's first element without inspecting b.

    Caller obligation (not checkable locally without forcing b): head(a)
    must be <= every element of b.  This is the productivity-breaking
    primitive for self-referential definitions.
    """
    a, b = iter(a), iter(b)
    first = next(a, None)
    if first is None:
        yield from b
        return
    yield first
    yield from union2(a, b)


def minus(a: Iterable[int], b: Iterable[int]) -> MonotoneGenerator:
    """Elements of a not present in b, in order.

    b must eventually cover a's range of interest (unbounded, or bounded
    above it); a finite exhausted b excludes nothing further.
    """
    a, b = iter(a), iter(b)
    ha, hb = next(a, None), next(b, None)
    while ha is not None:
        if hb is None or ha < hb:
            yield ha
            ha = next(a, None)
        elif ha == hb:
            ha, hb = next(a, None), next(b, None)
        else:
            hb = next(b, None)


def all_products(a: Iterable[int], b: Iterable[int]) -> MonotoneGenerator:
    """Sorted set {x*z | x in a, z in b}, all elements >= 2.

    Realized as the row recursion: (a1 * b) left-bias-unioned with
    all_products(rest of a, b).  The left bias is sound because a1*b1 is
    strictly below every product of later rows (elements >= 2).

    Fully lazy: nothing is pulled from either input until the first value
    is requested, so the operands may be self-referential streams.
    """
    return _products_rows(iter(a), Replay(b))


def _products_rows(a: Iterator[int], b: Replay, depth: int = 0) -> MonotoneGenerator:
    x = next(a, None)
    if x is None:
        return
    if x < 2:
        raise ValueError("all_products requires all elements >= 2")
    _stack_headroom(depth)
    row = b.reader()
    z0 = next(row, None)
    if z0 is None:
        return  # exhausted second operand: every row is empty
    if z0 < 2:
        raise ValueError("all_products requires all elements >= 2")
    first_row = scaled(x, chain([z0], row))
    yield from union_left_biased(first_row, _products_rows(a, b, depth + 1))
