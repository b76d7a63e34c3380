import pytest
from unittest.mock import Mock

from src.benchmark.generators import GraphRecipe, generate_graph
from src.graph.graph import Graph
from src.utils.config import Config


@pytest.fixture
def path4():
    """Path 0-1-2-3."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def path3():
    """Path 0-1-2."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4():
    return generate_graph(GraphRecipe("complete", 4))


@pytest.fixture
def star4():
    """Center 0 with leaves 1..4."""
    return generate_graph(GraphRecipe("star", 5))


@pytest.fixture
def gnp_8_04_7():
    return generate_graph(GraphRecipe("gnp", 8, 0.4, 7))


@pytest.fixture
def mock_config():
    """Create a mock configuration object with library defaults."""
    config = Mock(spec=Config)
    config.log_level = "INFO"
    config.json_logs = False
    config.max_dict_entries = 0
    config.dictionary_backend = "hash"
    config.traversal = "bfs"
    config.flush_output = True
    config.oracle_max_n = 20
    config.bench_repeat = 1
    return config
