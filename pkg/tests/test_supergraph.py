import pytest

from src.benchmark.generators import GraphRecipe, generate_graph
from src.graph.graph import Graph
from src.utils.errors import ConfigurationError, ContractViolation, OracleCapExceeded
from src.verification.supergraph import (
    Supergraph,
    build_supergraph,
    check_lemma1,
    check_operator_equivalence,
    is_neighbor_pair,
)
from tests.corpus import connected_corpus


def cycle(n):
    return generate_graph(GraphRecipe("cycle", n))


class TestBuildSupergraph:
    """Test cases for explicit supergraph construction."""

    def test_path3(self, path3):
        sg = build_supergraph(path3, 2)

        assert sg.nodes == ((0, 1), (1, 2))
        assert sg.adjacency == ((1,), (0,))

    def test_path4_no_edge_between_ends(self, path4):
        sg = build_supergraph(path4, 2)

        assert sg.nodes == ((0, 1), (1, 2), (2, 3))
        assert sg.neighbor_sets((0, 1)) == {(1, 2)}
        assert sg.edge_count == 2

    def test_k4_complete(self, k4):
        sg = build_supergraph(k4, 3)

        assert len(sg.nodes) == 4
        assert sg.edge_count == 6

    def test_disconnected_intersection_not_adjacent(self):
        """In C4, {0,1,2} and {0,2,3} share the non-adjacent pair {0,2}."""
        c4 = cycle(4)

        assert not is_neighbor_pair(c4, (0, 1, 2), (0, 2, 3))
        assert is_neighbor_pair(c4, (0, 1, 2), (0, 2, 3), operator="rwd")

    def test_rwd_operator_is_superset(self):
        c4 = cycle(4)
        irwd = build_supergraph(c4, 3)
        rwd = build_supergraph(c4, 3, operator="rwd")

        assert irwd.edge_count == 4
        assert rwd.edge_count == 6
        for node in irwd.nodes:
            assert irwd.neighbor_sets(node) <= rwd.neighbor_sets(node)

    def test_symmetric(self, gnp_8_04_7):
        assert build_supergraph(gnp_8_04_7, 4).is_symmetric()

    def test_unknown_operator(self, path3):
        with pytest.raises(ConfigurationError):
            build_supergraph(path3, 2, operator="plain")

    def test_cap(self):
        with pytest.raises(OracleCapExceeded):
            build_supergraph(generate_graph(GraphRecipe("path", 12)), 3, max_n=10)


class TestCheckLemma1:
    """Test cases for supergraph connectivity and diameter reports."""

    def test_path4(self, path4):
        report = check_lemma1(build_supergraph(path4, 2), 4, 2)

        assert report.connected
        assert report.diameter == 2
        assert report.bound == 2
        assert report.passed

    def test_k4(self, k4):
        report = check_lemma1(build_supergraph(k4, 3), 4, 3)

        assert report.diameter == 1
        assert report.passed

    def test_whole_graph(self):
        g = generate_graph(GraphRecipe("path", 5))
        report = check_lemma1(build_supergraph(g, 5), 5, 5)

        assert report.node_count == 1
        assert report.diameter == 0
        assert report.passed

    def test_cycle_exceeds_diameter_bound(self):
        """C6 with k=4: the supergraph is a 6-cycle of arcs, diameter 3 > n-k."""
        report = check_lemma1(build_supergraph(cycle(6), 4), 6, 4)

        assert report.connected
        assert report.diameter == 3
        assert report.bound == 2
        assert not report.diameter_within_bound
        assert not report.passed

    def test_c4_exceeds_diameter_bound(self):
        report = check_lemma1(build_supergraph(cycle(4), 3), 4, 3)

        assert report.connected
        assert report.diameter == 2
        assert not report.passed

    def test_disconnected_supergraph_reported(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        report = check_lemma1(build_supergraph(g, 2), 4, 2)

        assert not report.connected
        assert report.diameter is None
        assert not report.passed

    def test_empty_supergraph_rejected(self):
        with pytest.raises(ContractViolation):
            check_lemma1(Supergraph(3, "irwd", (), ()), 3, 3)

    def test_key_value_format(self, path4):
        text = check_lemma1(build_supergraph(path4, 2), 4, 2).to_key_value()
        pairs = dict(line.split("=", 1) for line in text.splitlines())

        assert pairs["connected"] == "true"
        assert pairs["diameter"] == "2"
        assert pairs["passed"] == "true"

    def test_text_format(self, path4):
        text = check_lemma1(build_supergraph(path4, 2), 4, 2).to_text()

        assert "result: PASS" in text
        assert "undirected connectivity" in text


class TestOperatorEquivalence:
    """Generated neighbors equal the definitional ones."""

    def test_irwd(self, gnp_8_04_7):
        assert check_operator_equivalence(gnp_8_04_7, build_supergraph(gnp_8_04_7, 4)) == []

    def test_rwd(self, gnp_8_04_7):
        sg = build_supergraph(gnp_8_04_7, 4, operator="rwd")

        assert check_operator_equivalence(gnp_8_04_7, sg) == []

    def test_needs_k2(self, path3):
        with pytest.raises(ContractViolation):
            check_operator_equivalence(path3, build_supergraph(path3, 1))


@pytest.mark.slow
@pytest.mark.parametrize("label,g", connected_corpus(10, 5))
def test_supergraph_connected_and_generator_exact(label, g):
    """Every connected corpus graph: the supergraph is connected, symmetric, and IRwD generates it."""
    for k in range(2, g.n + 1):
        sg = build_supergraph(g, k)
        report = check_lemma1(sg, g.n, k)

        assert report.connected
        assert report.symmetric
        assert check_operator_equivalence(g, sg) == []
