"""Test configuration and fixtures."""

import os
from pathlib import Path

import pytest
from fastapi.testclient import TestClient
from hypothesis import settings

# Set test environment variables before imports
os.environ["LOG_LEVEL"] = "WARNING"
os.environ.setdefault("VC_NODE_LIMIT", "5000")

from api.main import app
from graphs.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)

settings.register_profile("repo", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("repo")

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "instances"


@pytest.fixture
def test_client():
    """Create FastAPI test client."""
    return TestClient(app)


@pytest.fixture
def instances_dir():
    """Directory holding the sample instances."""
    return DATA_DIR


@pytest.fixture
def path3():
    """Path a-b-c as 0-1-2."""
    return path_graph(3)


@pytest.fixture
def path4():
    return path_graph(4)


@pytest.fixture
def triangle():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    """Cycle 0-1-2-3-0."""
    return cycle_graph(4)


@pytest.fixture
def star3():
    """K_{1,3} with the center at 0."""
    return star_graph(3)


@pytest.fixture
def star5():
    return star_graph(5)


@pytest.fixture
def single_edge():
    return Graph(2, [(0, 1)])


@pytest.fixture
def edgeless():
    return Graph(5)


@pytest.fixture
def petersen_text():
    """DIMACS text of the Petersen graph (minimum cover 6)."""
    return (DATA_DIR / "petersen.col").read_text()
