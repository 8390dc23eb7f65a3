import time

import pytest

import twodist.lrs as lrs


@pytest.fixture(scope="session")
def full_table():
    """The 7..40 bound table computed cold, with its wall-clock time."""
    lrs.k_slice.cache_clear()
    t0 = time.perf_counter()
    rows = lrs.table(7, 40)
    elapsed = time.perf_counter() - t0
    return rows, elapsed
