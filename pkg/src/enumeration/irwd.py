"""
Improved reverse search with dictionary.

Two connected k-sets are supergraph neighbors when they share k-1 vertices
and those shared vertices induce a connected subgraph. A solution S is
therefore expanded by deleting a vertex that is not an articulation point
of G[S] and adding any neighbor of what remains; no common-neighborhood
search over disconnected remainders is needed.
"""

from time import perf_counter_ns
from typing import Iterable, Iterator, Optional

from ..graph.graph import Graph, VertexSet
from ..graph.subgraph import SubgraphAnalyzer
from ..utils.errors import ContractViolation
from .base import ReverseSearchEnumerator, SolutionSink, exchange


def neighbors_in_supergraph(
    g: Graph,
    s: VertexSet,
    analyzer: Optional[SubgraphAnalyzer] = None,
    articulation: Optional[Iterable[int]] = None
) -> Iterator[VertexSet]:
    """
    Yield the sets (S - {v}) + {w} for non-articulation v and w adjacent to S - {v}.

    Args:
        g: Host graph
        s: Connected solution with |s| >= 2
        analyzer: Scratch-state owner to reuse; a fresh one if omitted
        articulation: Precomputed articulation points of G[s]

    Yields:
        Neighbor solutions; the same set may appear for different v
    """
    if len(s) < 2:
        raise ContractViolation("supergraph neighbors need |S| >= 2")
    if analyzer is None:
        analyzer = SubgraphAnalyzer(g)
    if articulation is None:
        articulation = analyzer.articulation_points(s)
    cuts = set(articulation)

    for i, v in enumerate(s):
        if v in cuts:
            continue
        rest = s[:i] + s[i + 1:]
        for w in analyzer.set_neighborhood(rest):
            if w != v:
                yield exchange(rest, w)


class IRwDEnumerator(ReverseSearchEnumerator):
    """Reverse search under the connected-intersection neighbor operator."""

    name = "irwd"

    def expand(self, s: VertexSet) -> Iterator[VertexSet]:
        stats = self.stats
        if stats is None:
            cuts = self.analyzer.articulation_points(s)
        else:
            started = perf_counter_ns()
            cuts = self.analyzer.articulation_points(s)
            stats.articulation_ns += perf_counter_ns() - started
        return neighbors_in_supergraph(self.graph, s, self.analyzer, cuts)


def enumerate_irwd(g: Graph, k: int, sink: SolutionSink, **options) -> int:
    """
    Enumerate all connected induced k-subgraphs with IRwD.

    Args:
        g: Host graph
        k: Order (>= 1)
        sink: Solution consumer
        **options: Forwarded to ``IRwDEnumerator`` (dictionary_backend,
            max_dict_entries, traversal, stats, verify_candidates)

    Returns:
        Total number of solutions
    """
    return IRwDEnumerator(g, k, **options).run(sink)
