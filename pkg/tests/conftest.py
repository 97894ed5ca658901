import pytest

from rwlab.gd_builder import build_gd


@pytest.fixture(scope="session")
def gd():
    """Session-wide cache of built family members, keyed by depth."""
    cache = {}

    def get(d):
        if d not in cache:
            cache[d] = build_gd(d)
        return cache[d]

    return get
