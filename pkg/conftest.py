"""Shared pytest setup: make src/ importable and provide common structures."""

import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from artin_groups.coxeter.graph import parse_graph  # noqa: E402
from artin_groups.garside.factory import get_garside_structure  # noqa: E402

GRAPHS_DIR = Path(__file__).parent / 'graphs'

collect_ignore = ['examples']


@pytest.fixture
def graphs_dir() -> Path:
    return GRAPHS_DIR


@pytest.fixture
def a2():
    return get_garside_structure(parse_graph("vertices s t\nedge s t 3\n"))


@pytest.fixture
def b2():
    return get_garside_structure(parse_graph("vertices s t\nedge s t 4\n"))


@pytest.fixture
def i2_5():
    return get_garside_structure(parse_graph("vertices s t\nedge s t 5\n"))


@pytest.fixture
def a3():
    return get_garside_structure(parse_graph("vertices s t r\nedge s t 3\nedge t r 3\n"))


@pytest.fixture
def b3():
    return get_garside_structure(parse_graph("vertices s t r\nedge s t 3\nedge t r 4\n"))


@pytest.fixture
def h3():
    return get_garside_structure(parse_graph("vertices s t r\nedge s t 5\nedge t r 3\n"))
