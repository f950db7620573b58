import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from npcount import PrecisionContext, SlopeRange, bundled_zeros, count_series, refine_catalog


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(192)


@pytest.fixture(scope="session")
def catalog():
    return bundled_zeros()


@pytest.fixture(scope="session")
def zeros25(catalog, ctx):
    return refine_catalog(catalog[:25], ctx)


@pytest.fixture(scope="session")
def series_half_10k():
    """Exact [0,1) counts up to n = 10^4 (shared: this takes a few seconds)."""
    return count_series(SlopeRange.HALF_OPEN_01, 10_000)


@pytest.fixture(scope="session")
def series_halfrange_10k():
    """Exact [0,1/2] counts up to n = 10^4."""
    return count_series(SlopeRange.CLOSED_0_HALF, 10_000)
