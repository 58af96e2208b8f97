from pathlib import Path

import pytest

from matchcut import load_edge_file

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def fig1():
    """The 14-vertex fixture graph together with its 1-based labels."""
    return load_edge_file(str(FIXTURES / "fig1.edges"))


@pytest.fixture(scope="session")
def fig1_path():
    return str(FIXTURES / "fig1.edges")
