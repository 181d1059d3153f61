"""Shared test setup: trigger JIT compilation of the compiled kernels once,
so timed acceptance budgets measure the algorithms, not compiler startup."""

from itertools import islice

import pytest

from monoseq import hamming, ulam


@pytest.fixture(scope="session", autouse=True)
def warm_compiled_kernels():
    for factory in ulam.ulam_generators().values():
        list(islice(factory(), 40))
    list(islice(hamming.hamming_filter(hamming.FactorBase([2, 3, 5])), 10))
