"""Compiled block scan for the definitional closure filter.

The filter stays definitional (it enumerates every natural and divides
factors out); this kernel only batches that per-value test so the
reference route is usable as an oracle at hundreds of millions of values.
Only valid for all-prime bases, where greedy divide-out is exact.
"""

from numba import njit


@njit(cache=True)
def scan_block(lo, hi, factors, out):
    """Write every closure member in [lo, hi) to out; return the count."""
    m = 0
    for n in range(lo, hi):
        v = n
        for i in range(factors.shape[0]):
            f = factors[i]
            while v % f == 0:
                v //= f
        if v == 1:
            out[m] = n
            m += 1
    return m
