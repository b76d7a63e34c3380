from bisect import bisect_left
from typing import Iterator, List, Set

from ..graph.graph import VertexSet
from ..utils.errors import ConfigurationError, ContractViolation, DictionaryCapExceeded


class SolutionDictionary:
    """Hash-set dictionary keyed by canonical sorted vertex tuples."""

    backend = "hash"

    def __init__(self, max_entries: int = 0):
        """
        Args:
            max_entries: Entry cap; 0 disables it
        """
        if max_entries < 0:
            raise ContractViolation(f"dictionary cap must be >= 0, got {max_entries}")
        self.max_entries = max_entries
        self.lookups = 0
        self._entries: Set[VertexSet] = set()

    def __contains__(self, s: VertexSet) -> bool:
        self.lookups += 1
        return s in self._entries

    def add(self, s: VertexSet) -> bool:
        """
        Insert ``s`` unless present.

        Returns:
            True if ``s`` was new

        Raises:
            DictionaryCapExceeded: If inserting would pass ``max_entries``
        """
        self.lookups += 1
        if s in self._entries:
            return False
        self._check_capacity()
        self._entries.add(s)
        return True

    def _check_capacity(self) -> None:
        if self.max_entries and len(self) >= self.max_entries:
            raise DictionaryCapExceeded(self.max_entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self._entries)


class OrderedSolutionDictionary(SolutionDictionary):
    """
    Sorted-array dictionary with O(log |K|) binary-search lookups.

    Mirrors the ordered structure assumed by the delay analysis so the
    lookup cost can be measured against the hashed variant. Inserts shift
    the tail of the array.
    """

    backend = "ordered"

    def __init__(self, max_entries: int = 0):
        super().__init__(max_entries)
        self._keys: List[VertexSet] = []

    def _find(self, s: VertexSet) -> int:
        return bisect_left(self._keys, s)

    def __contains__(self, s: VertexSet) -> bool:
        self.lookups += 1
        i = self._find(s)
        return i < len(self._keys) and self._keys[i] == s

    def add(self, s: VertexSet) -> bool:
        self.lookups += 1
        i = self._find(s)
        if i < len(self._keys) and self._keys[i] == s:
            return False
        self._check_capacity()
        self._keys.insert(i, s)
        return True

    def __len__(self) -> int:
        return len(self._keys)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self._keys)


def create_dictionary(backend: str = "hash", max_entries: int = 0) -> SolutionDictionary:
    """Build a dictionary for the named backend ('hash' or 'ordered')."""
    if backend == "hash":
        return SolutionDictionary(max_entries)
    if backend == "ordered":
        return OrderedSolutionDictionary(max_entries)
    raise ConfigurationError(f"unknown dictionary backend {backend!r}")
