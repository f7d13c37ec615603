import pytest

from potk2s import run_sweep


@pytest.fixture(scope="session")
def k25_sweeps():
    """Decider-vs-oracle classification of every graphic positive
    sequence of length 7, 8, 9."""
    return {n: run_sweep(n, target="k25", mode="both") for n in (7, 8, 9)}


@pytest.fixture(scope="session")
def k24_sweeps():
    return {n: run_sweep(n, target="k24", mode="both") for n in (6, 7, 8, 9)}
