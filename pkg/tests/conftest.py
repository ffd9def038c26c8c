import os
import sys
from collections import Counter

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from shared.characters import clear_memo  # noqa: E402
from shared.defaults import ENV_CACHE_DIR  # noqa: E402
from shared.partitions import Partition  # noqa: E402
from shared.vpoly import VPoly  # noqa: E402
from store.db import get_cache  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-size cross checks (deselect with -m 'not slow')")


@pytest.fixture
def cache(tmp_path, monkeypatch):
    """Fresh on-disk character cache, also exported through DESSIN_CACHE_DIR."""
    path = tmp_path / "chars"
    monkeypatch.setenv(ENV_CACHE_DIR, str(path))
    clear_memo()
    yield get_cache(str(path))
    clear_memo()


@st.composite
def partitions(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


@st.composite
def vpolys(draw, arity=2, max_terms=4, max_degree=3):
    exps = st.tuples(*[st.integers(min_value=0, max_value=max_degree)] * arity)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    terms = draw(st.dictionaries(exps, coeffs, max_size=max_terms))
    return VPoly(arity, terms)
