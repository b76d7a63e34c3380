from itertools import combinations

import networkx as nx
import pytest

from src.enumeration.oracle import iter_connected_subsets
from src.graph.graph import Graph
from src.graph.subgraph import (
    SubgraphAnalyzer,
    articulation_points,
    common_component_neighborhood,
    induced_components,
    is_connected_induced,
    make_vertex_set,
    set_neighborhood,
)
from src.utils.errors import ContractViolation
from tests.corpus import gnp_corpus


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def articulation_by_deletion(analyzer, s):
    """Definitional oracle: v is a cut vertex iff G[s - v] is disconnected."""
    if len(s) <= 2:
        return ()
    return tuple(
        v for v in s
        if not analyzer.is_connected_induced(tuple(u for u in s if u != v))
    )


class TestIsConnectedInduced:
    """Test cases for induced connectivity."""

    def test_path_endpoints(self, path3):
        assert not is_connected_induced(path3, (0, 2))

    def test_path_edge(self, path3):
        assert is_connected_induced(path3, (0, 1))

    def test_triangle(self, triangle):
        assert is_connected_induced(triangle, (0, 1, 2))

    def test_single_vertex(self, path3):
        assert is_connected_induced(path3, (2,))

    def test_empty_set_rejected(self, path3):
        with pytest.raises(ContractViolation):
            is_connected_induced(path3, ())


class TestArticulationPoints:
    """Test cases for restricted Tarjan articulation points."""

    def test_middle_of_path(self, path3):
        assert articulation_points(path3, (0, 1, 2)) == (1,)

    def test_triangle_has_none(self, triangle):
        assert articulation_points(triangle, (0, 1, 2)) == ()

    def test_star_center(self, star4):
        assert articulation_points(star4, (0, 1, 2, 3)) == (0,)

    def test_small_sets_have_none(self, path3):
        assert articulation_points(path3, (1,)) == ()
        assert articulation_points(path3, (0, 1)) == ()

    def test_disconnected_rejected(self, path3):
        with pytest.raises(ContractViolation):
            articulation_points(path3, (0, 2))

    def test_restricted_to_subset(self, path4):
        """Vertices outside s do not contribute to connectivity."""
        assert articulation_points(path4, (1, 2, 3)) == (2,)

    def test_analyzer_reuse_across_calls(self, gnp_8_04_7):
        """Version stamps keep repeated queries independent."""
        analyzer = SubgraphAnalyzer(gnp_8_04_7)
        subsets = list(iter_connected_subsets(gnp_8_04_7, 4))
        first = [analyzer.articulation_points(s) for s in subsets]
        second = [analyzer.articulation_points(s) for s in reversed(subsets)]

        assert first == list(reversed(second))

    def test_long_path_does_not_recurse(self):
        """Iterative traversal handles sets deeper than the recursion limit."""
        n = 5000
        g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

        assert len(articulation_points(g, tuple(range(n)))) == n - 2

    @pytest.mark.slow
    @pytest.mark.parametrize("label,g", gnp_corpus(2, 10, 3))
    def test_matches_deletion_oracle_and_networkx(self, label, g):
        """Every connected induced subset of size <= 7 agrees with both oracles."""
        analyzer = SubgraphAnalyzer(g)
        reference = to_networkx(g)
        for k in range(1, min(7, g.n) + 1):
            for s in iter_connected_subsets(g, k):
                found = analyzer.articulation_points(s)
                assert found == articulation_by_deletion(analyzer, s)
                if len(s) >= 3:
                    assert set(found) == set(nx.articulation_points(reference.subgraph(s)))
                if len(s) >= 2:
                    assert len(found) <= len(s) - 2


class TestNeighborhoods:
    """Test cases for set and common-component neighborhoods."""

    def test_set_neighborhood_path(self, path4):
        assert set_neighborhood(path4, (1, 2)) == (0, 3)

    def test_set_neighborhood_whole_component(self, path3):
        assert set_neighborhood(path3, (0, 1, 2)) == ()

    def test_set_neighborhood_leaf(self, star4):
        assert set_neighborhood(star4, (1,)) == (0,)

    def test_common_bridge_vertex(self, path3):
        assert common_component_neighborhood(path3, (0, 2)) == (1,)

    def test_common_none(self, path4):
        assert common_component_neighborhood(path4, (0, 3)) == ()

    def test_common_connected_set(self, triangle):
        assert common_component_neighborhood(triangle, (0, 1)) == (2,)

    def test_induced_components(self, path4):
        assert induced_components(path4, (0, 1, 3)) == [(0, 1), (3,)]

    @pytest.mark.parametrize("label,g", gnp_corpus(2, 9, 2))
    def test_common_neighborhood_matches_brute_force(self, label, g):
        """w is returned iff w is outside s, adjacent to s and s + w is connected."""
        analyzer = SubgraphAnalyzer(g)
        for size in range(1, min(4, g.n)):
            for s in combinations(range(g.n), size):
                expected = tuple(
                    w for w in range(g.n)
                    if w not in s
                    and any(g.has_edge(w, u) for u in s)
                    and analyzer.is_connected_induced(make_vertex_set(s + (w,)))
                )
                assert analyzer.common_component_neighborhood(s) == expected


class TestMakeVertexSet:
    """Test cases for canonical vertex sets."""

    def test_sorts(self):
        assert make_vertex_set([3, 1, 2]) == (1, 2, 3)

    def test_rejects_repeats(self):
        with pytest.raises(ContractViolation):
            make_vertex_set([1, 1])

    def test_rejects_out_of_range(self, path3):
        with pytest.raises(ContractViolation):
            make_vertex_set([0, 3], path3)
