import pytest

from thetapaths.lattice_paths import enumerate_paths
from thetapaths.tableaux import enumerate_tableaux

# Exhaustive property checks run over every n up to this bound.
N_PROPERTY = 6

_cache = {}


def _get(kind, n):
    if (kind, n) not in _cache:
        _cache[kind, n] = enumerate_paths(n) if kind == "path" else enumerate_tableaux(n)
    return _cache[kind, n]


@pytest.fixture(scope="session")
def paths_of():
    return lambda n: _get("path", n)


@pytest.fixture(scope="session")
def tableaux_of():
    return lambda n: _get("tableau", n)


@pytest.fixture(scope="session")
def family_cache():
    """Shared cache in the shape harness functions accept."""
    for n in range(N_PROPERTY + 1):
        _get("path", n)
        _get("tableau", n)
    return _cache
