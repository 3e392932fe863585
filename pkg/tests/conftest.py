import pytest

from metazeta import OracleLimits


@pytest.fixture(scope="session")
def limits():
    return OracleLimits(max_order=4096, max_subgroups=100_000)


def sweep_cells(p, max_order):
    """All (m, n) with p^(m+n) <= max_order, m, n >= 1."""
    out = []
    ell = 2
    while p**ell <= max_order:
        out.extend((m, ell - m) for m in range(1, ell))
        ell += 1
    return out
