import functools
from pathlib import Path

import pytest

from cogpoly.census import enumerate_cogs

DATA = Path(__file__).resolve().parent.parent / "data"


@functools.lru_cache(maxsize=None)
def census(edges, connected_only=True, no_isolated=True):
    return tuple(enumerate_cogs(edges, connected_only, no_isolated))


@pytest.fixture(scope="session")
def data_dir():
    return DATA
