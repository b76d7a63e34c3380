import pytest

from src.benchmark.generators import GraphRecipe, generate_graph
from src.enumeration.irwd import enumerate_irwd
from src.enumeration.oracle import oracle_bruteforce
from src.enumeration.rwd import RwDEnumerator, enumerate_rwd
from src.enumeration.state import EnumerationStats
from tests.corpus import gnp_corpus


def collect(g, k, **options):
    solutions = []
    enumerate_rwd(g, k, solutions.append, **options)
    return solutions


class TestEnumerateRwD:
    """Test cases for the baseline RwD enumerator."""

    def test_path(self, path4):
        assert set(collect(path4, 2)) == {(0, 1), (1, 2), (2, 3)}

    def test_star(self, star4):
        solutions = collect(star4, 3)

        assert len(solutions) == 6
        assert all(0 in s for s in solutions)

    def test_matches_oracle(self, gnp_8_04_7):
        solutions = collect(gnp_8_04_7, 4)

        assert len(solutions) == len(set(solutions))
        assert set(solutions) == oracle_bruteforce(gnp_8_04_7, 4)

    def test_deletes_articulation_points_too(self):
        """From {0,1,2}, deleting the cut vertex 1 is allowed when a bridge exists."""
        g = generate_graph(GraphRecipe("cycle", 4))
        enumerator = RwDEnumerator(g, 3)

        assert (0, 2, 3) in set(enumerator.expand((0, 1, 2)))

    def test_candidates_connected(self, gnp_8_04_7):
        solutions = collect(gnp_8_04_7, 5, verify_candidates=True)

        assert set(solutions) == oracle_bruteforce(gnp_8_04_7, 5)

    def test_stats_record_common_neighborhood_only(self, gnp_8_04_7):
        stats = EnumerationStats()
        enumerate_rwd(gnp_8_04_7, 4, lambda s: None, stats=stats)

        assert stats.common_neighborhood_ns > 0
        assert stats.articulation_ns == 0

    @pytest.mark.parametrize("label,g", gnp_corpus(2, 10, 2))
    def test_same_output_set_as_irwd(self, label, g):
        for k in range(1, g.n + 1):
            irwd = []
            rwd = []
            enumerate_irwd(g, k, irwd.append)
            enumerate_rwd(g, k, rwd.append)

            assert sorted(irwd) == sorted(rwd)
