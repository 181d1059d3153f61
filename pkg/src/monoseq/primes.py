"""Three prime generators: trial division, and two stream sieves.

The two sieves exist for benchmark contrast: the minus-based one crosses
composites out with nested ordered differences (simple, slow), while the
composites-based one builds the stream of composite numbers exactly once
and takes a single difference against the naturals.
"""

import queue
import threading
from itertools import chain, count

from .streams import (
    MonotoneGenerator,
    Replay,
    _stack_headroom,
    checked_mul,
    minus,
    scaled,
    union2,
    union_left_biased,
    all_products,
)


def primes_trial_division() -> MonotoneGenerator:
    """Baseline: trial division against the retained primes up to sqrt(n)."""
    yield 2
    odd_primes: list[int] = []
    n = 3
    while True:
        is_prime = True
        for p in odd_primes:
            if p * p > n:
                break
            if n % p == 0:
                is_prime = False
                break
        if is_prime:
            odd_primes.append(n)
            yield n
        n += 2


_END = object()


def _on_big_stack(factory, stack_bytes: int = 1 << 28) -> MonotoneGenerator:
    """Run a generator on a worker thread with a large C stack.

    Nested stream onions resume one native frame per layer; past a few
    thousand layers that overflows the default thread stack (a hard crash,
    not a catchable RecursionError).  Values cross back over a bounded
    queue; an exception in the worker re-raises at the consumer.
    """
    q: queue.Queue = queue.Queue(maxsize=256)
    cancel = threading.Event()

    def work():
        try:
            for v in factory():
                while not cancel.is_set():
                    try:
                        q.put(v, timeout=0.1)
                        break
                    except queue.Full:
                        continue
                if cancel.is_set():
                    return
            q.put(_END)
        except BaseException as exc:  # noqa: BLE001 - forwarded, not swallowed
            q.put(exc)

    old = threading.stack_size(stack_bytes)
    try:
        worker = threading.Thread(target=work, daemon=True)
        worker.start()
    finally:
        threading.stack_size(old)
    try:
        while True:
            v = q.get()
            if v is _END:
                return
            if isinstance(v, BaseException):
                raise v
            yield v
    finally:
        cancel.set()


def primes_sieve_minus() -> MonotoneGenerator:
    """Sieve via nested differences: emit the head x, recurse on
    (rest minus x*(x : rest)).  Deliberately inefficient; every layer
    re-filters everything that survived the layers above.

    Onion depth grows with every prime emitted, so the pull loop runs on
    a big-stack worker thread."""

    def layers():
        s: MonotoneGenerator = count(2)
        depth = 0
        while True:
            x = next(s)
            yield x
            depth += 1
            _stack_headroom(depth)
            rest = Replay(s)
            s = minus(rest.reader(), scaled(x, chain([x], rest.reader())))

    return _on_big_stack(layers)


def composites_of_primes(p) -> MonotoneGenerator:
    """Every composite whose prime factors all lie in the stream p, each
    exactly once.

    Recursion on the head prime x: the powers of x beyond x itself, all
    products of those powers with (later primes union deeper composites),
    and the deeper composites.  The disjoint union construction is what
    guarantees single generation; it is not re-checked at runtime.
    """
    buf = Replay(p)
    _stack_headroom(64)
    return _composites_from(buf, 0)


def _composites_from(pbuf: Replay, i: int) -> MonotoneGenerator:
    x = next(pbuf.reader(i), None)
    if x is None:
        return
    later_primes = pbuf.reader(i + 1)
    deeper = Replay(_composites_from(pbuf, i + 1))
    yield from union_left_biased(
        union_left_biased(
            _powers_from_square(x),
            all_products(_powers(x), union2(later_primes, deeper.reader())),
        ),
        deeper.reader(),
    )


def _powers(x: int) -> MonotoneGenerator:
    v = x
    while True:
        yield v
        v = checked_mul(v, x)


def _powers_from_square(x: int) -> MonotoneGenerator:
    v = checked_mul(x, x)
    while True:
        yield v
        v = checked_mul(v, x)


def primes_sieve_composites() -> MonotoneGenerator:
    """Primes as 2, then naturals from 3 minus the composite stream built
    from this generator's own retained output (always ahead of the
    composites consumer, so the self-reference is productive)."""
    emitted: list[int] = []

    def own_output(i=0):
        while True:
            yield emitted[i]
            i += 1

    comps = composites_of_primes(own_output())
    emitted.append(2)
    yield 2
    for v in minus(count(3), comps):
        emitted.append(v)
        if len(emitted) % 4096 == 0:
            # onion depth grows with the number of engaged primes
            _stack_headroom(len(emitted) // 8)
        yield v
