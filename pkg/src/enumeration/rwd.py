"""
Baseline reverse search with dictionary.

Neighbors share k-1 vertices, connected or not. Every vertex of S is
deleted in turn and each vertex adjacent to all components of the
remainder is added. The common neighborhood is recomputed from scratch
for every deletion.
"""

from time import perf_counter_ns
from typing import Iterator

from ..graph.graph import Graph, VertexSet
from .base import ReverseSearchEnumerator, SolutionSink, exchange


class RwDEnumerator(ReverseSearchEnumerator):
    """Reverse search under the plain (k-1)-intersection neighbor operator."""

    name = "rwd"

    def expand(self, s: VertexSet) -> Iterator[VertexSet]:
        analyzer = self.analyzer
        stats = self.stats
        for i, v in enumerate(s):
            rest = s[:i] + s[i + 1:]
            if stats is None:
                common = analyzer.common_component_neighborhood(rest)
            else:
                started = perf_counter_ns()
                common = analyzer.common_component_neighborhood(rest)
                stats.common_neighborhood_ns += perf_counter_ns() - started
            for w in common:
                if w != v:
                    yield exchange(rest, w)


def enumerate_rwd(g: Graph, k: int, sink: SolutionSink, **options) -> int:
    """
    Enumerate all connected induced k-subgraphs with the baseline RwD.

    Same options as ``enumerate_irwd``.
    """
    return RwDEnumerator(g, k, **options).run(sink)
