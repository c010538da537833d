import pytest

from alphacrit.enumeration import connected_graphs_upto, packaged_corpus


@pytest.fixture(scope="session")
def corpus6():
    """Connected class representatives on 1..6 vertices (143 graphs)."""
    return list(connected_graphs_upto(6))


@pytest.fixture(scope="session")
def corpus7():
    """Connected class representatives on 1..7 vertices (996 graphs)."""
    return list(connected_graphs_upto(7))


@pytest.fixture(scope="session")
def graphs8():
    """All isomorphism classes on 8 vertices, from the packaged file."""
    return packaged_corpus("graphs8")


@pytest.fixture(scope="session")
def critical_corpus():
    """Connected alpha-critical classes on 1..9 vertices, from the packaged file."""
    return packaged_corpus("alpha_critical_upto9")
