from collections import deque
from dataclasses import dataclass
from typing import Deque

from ..graph.graph import VertexSet
from ..utils.errors import ConfigurationError
from .dictionary import SolutionDictionary


@dataclass
class EnumerationStats:
    """Counters and phase timings collected during one enumeration."""

    expansions: int = 0
    candidates: int = 0
    dict_lookups: int = 0
    articulation_ns: int = 0
    common_neighborhood_ns: int = 0
    max_candidates_per_expansion: int = 0
    peak_queue: int = 0
    peak_dictionary: int = 0

    @property
    def articulation_time(self) -> float:
        return self.articulation_ns / 1e9

    @property
    def common_neighborhood_time(self) -> float:
        return self.common_neighborhood_ns / 1e9


class EnumerationState:
    """Work queue plus dictionary driving the supergraph traversal."""

    def __init__(self, k: int, dictionary: SolutionDictionary, traversal: str = "bfs"):
        """
        Args:
            k: Target order
            dictionary: Solution dictionary shared by all components
            traversal: 'bfs' (FIFO queue) or 'dfs' (LIFO stack)
        """
        if traversal not in ("bfs", "dfs"):
            raise ConfigurationError(f"unknown traversal order {traversal!r}")
        self.k = k
        self.dictionary = dictionary
        self.traversal = traversal
        self.queue: Deque[VertexSet] = deque()
        self.emitted = 0
        self.peak_queue = 0
        self._take = self.queue.popleft if traversal == "bfs" else self.queue.pop

    def offer(self, s: VertexSet) -> bool:
        """Record ``s`` in the dictionary and queue it if it is new."""
        if not self.dictionary.add(s):
            return False
        self.queue.append(s)
        if len(self.queue) > self.peak_queue:
            self.peak_queue = len(self.queue)
        return True

    def take(self) -> VertexSet:
        return self._take()

    @property
    def pending(self) -> bool:
        return bool(self.queue)

    def is_consistent(self) -> bool:
        """Queue is a duplicate-free subset of the dictionary and counts add up."""
        queued = set(self.queue)
        return (
            len(queued) == len(self.queue)
            and queued <= set(self.dictionary)
            and self.emitted + len(self.queue) <= len(self.dictionary)
        )
