"""
Reverse search with a dictionary over the supergraph of connected k-sets.

Each connected component is traversed from an initial solution; every
dequeued solution is emitted, then expanded into its supergraph neighbors,
and each neighbor not yet in the dictionary is recorded and queued. The
concrete enumerators differ only in how a solution is expanded.
"""

from abc import ABC, abstractmethod
from bisect import bisect_left
from collections import deque
from typing import Callable, Iterator, List, Optional

from ..graph.graph import Graph, VertexSet
from ..graph.subgraph import SubgraphAnalyzer
from ..utils.errors import ComponentTooSmall, ContractViolation, DictionaryCapExceeded
from ..utils.logging_config import get_logger
from .dictionary import create_dictionary
from .state import EnumerationState, EnumerationStats

SolutionSink = Callable[[VertexSet], None]


def initial_solution(g: Graph, component: VertexSet, k: int) -> VertexSet:
    """
    First k vertices in breadth-first order from the component's smallest id.

    Args:
        g: Host graph
        component: A connected component of g (sorted)
        k: Target order

    Returns:
        Connected k-subset of the component

    Raises:
        ComponentTooSmall: If the component has fewer than k vertices
    """
    if k < 1:
        raise ContractViolation(f"order k must be >= 1, got {k}")
    if len(component) < k:
        raise ComponentTooSmall(len(component), k)

    adjacency = g.adjacency
    root = component[0]
    picked = [root]
    seen = {root}
    queue = deque([root])
    while queue and len(picked) < k:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                picked.append(w)
                queue.append(w)
                if len(picked) == k:
                    break
    return tuple(sorted(picked))


def exchange(rest: VertexSet, w: int) -> VertexSet:
    """Insert ``w`` into the sorted tuple ``rest``."""
    i = bisect_left(rest, w)
    return rest[:i] + (w,) + rest[i:]


class ReverseSearchEnumerator(ABC):
    """Dictionary-based reverse search; subclasses supply the neighbor operator."""

    name = "reverse-search"

    def __init__(
        self,
        graph: Graph,
        k: int,
        dictionary_backend: str = "hash",
        max_dict_entries: int = 0,
        traversal: str = "bfs",
        stats: Optional[EnumerationStats] = None,
        verify_candidates: bool = False
    ):
        """
        Initialize the enumerator.

        Args:
            graph: Host graph
            k: Order of the enumerated subgraphs (>= 1)
            dictionary_backend: 'hash' or 'ordered'
            max_dict_entries: Dictionary entry cap, 0 for unlimited
            traversal: 'bfs' (default) or 'dfs'
            stats: Optional collector for counters and phase timings
            verify_candidates: Check every generated candidate is connected
        """
        if k < 1:
            raise ContractViolation(f"order k must be >= 1, got {k}")
        self.graph = graph
        self.k = k
        self.dictionary_backend = dictionary_backend
        self.max_dict_entries = max_dict_entries
        self.traversal = traversal
        self.stats = stats
        self.verify_candidates = verify_candidates
        self.analyzer = SubgraphAnalyzer(graph)
        self.state: Optional[EnumerationState] = None
        self.logger = get_logger(__name__).bind(algorithm=self.name)

    @abstractmethod
    def expand(self, s: VertexSet) -> Iterator[VertexSet]:
        """Yield the supergraph neighbors of solution ``s`` (duplicates allowed)."""

    def run(self, sink: SolutionSink) -> int:
        """
        Emit every connected induced k-subgraph exactly once.

        Args:
            sink: Receives each solution as a sorted tuple, in traversal order

        Returns:
            Number of solutions emitted

        Raises:
            DictionaryCapExceeded: If the dictionary outgrows its cap
        """
        g = self.graph
        self.logger.info(
            "Enumeration started",
            n=g.n, m=g.m, max_degree=g.max_degree, k=self.k, traversal=self.traversal
        )

        # no exchange step exists for single vertices
        if self.k == 1:
            for v in range(g.n):
                sink((v,))
            self.logger.info("Enumeration completed", solutions=g.n)
            return g.n

        state = EnumerationState(
            self.k,
            create_dictionary(self.dictionary_backend, self.max_dict_entries),
            self.traversal,
        )
        self.state = state
        stats = self.stats

        # one dictionary shared by all components; a cap hit aborts the whole run
        try:
            for component in g.connected_components():
                try:
                    start = initial_solution(g, component, self.k)
                except ComponentTooSmall:
                    self.logger.debug("Component skipped", size=len(component), k=self.k)
                    continue

                # emit at dequeue so each solution leaves the queue exactly once
                state.offer(start)
                while state.pending:
                    s = state.take()
                    state.emitted += 1
                    sink(s)

                    generated = 0
                    for candidate in self.expand(s):
                        generated += 1
                        if self.verify_candidates:
                            self._verify(candidate)
                        state.offer(candidate)

                    if stats is not None:
                        stats.expansions += 1
                        stats.candidates += generated
                        if generated > stats.max_candidates_per_expansion:
                            stats.max_candidates_per_expansion = generated
        except DictionaryCapExceeded as e:
            self.logger.error(
                "Dictionary cap exceeded", cap=e.cap, emitted=state.emitted, k=self.k
            )
            raise
        finally:
            # filled on every exit, including a cap hit
            if stats is not None:
                stats.dict_lookups = state.dictionary.lookups
                stats.peak_queue = state.peak_queue
                stats.peak_dictionary = len(state.dictionary)

        self.logger.info(
            "Enumeration completed",
            solutions=state.emitted,
            dictionary_size=len(state.dictionary),
            peak_queue=state.peak_queue,
        )
        return state.emitted

    def collect(self) -> List[VertexSet]:
        """Run to completion and return the solutions in emission order."""
        solutions: List[VertexSet] = []
        self.run(solutions.append)
        return solutions

    def _verify(self, candidate: VertexSet) -> None:
        if len(candidate) != self.k or not self.analyzer.is_connected_induced(candidate):
            raise ContractViolation(f"{self.name} generated invalid candidate {candidate}")
