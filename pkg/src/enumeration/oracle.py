from itertools import combinations
from typing import Callable, Iterator, Set

from ..graph.graph import Graph, VertexSet
from ..utils.errors import ContractViolation, OracleCapExceeded

DEFAULT_ORACLE_MAX_N = 20


def _subset_is_connected(adjacency, subset: VertexSet) -> bool:
    inside = set(subset)
    reached = {subset[0]}
    frontier = [subset[0]]
    while frontier:
        u = frontier.pop()
        for w in adjacency[u]:
            if w in inside and w not in reached:
                reached.add(w)
                frontier.append(w)
    return len(reached) == len(inside)


def iter_connected_subsets(g: Graph, k: int, max_n: int = DEFAULT_ORACLE_MAX_N) -> Iterator[VertexSet]:
    """
    Yield connected k-subsets in lexicographic order.

    Raises:
        OracleCapExceeded: If g.n exceeds ``max_n``
    """
    if k < 1:
        raise ContractViolation(f"order k must be >= 1, got {k}")
    if g.n > max_n:
        raise OracleCapExceeded(f"brute force limited to n <= {max_n}, got n={g.n}")
    adjacency = g.adjacency
    for subset in combinations(range(g.n), k):
        if _subset_is_connected(adjacency, subset):
            yield subset


def oracle_bruteforce(g: Graph, k: int, max_n: int = DEFAULT_ORACLE_MAX_N) -> Set[VertexSet]:
    """Exactly the k-sets X with G[X] connected."""
    return set(iter_connected_subsets(g, k, max_n))


def enumerate_brute(
    g: Graph,
    k: int,
    sink: Callable[[VertexSet], None],
    max_n: int = DEFAULT_ORACLE_MAX_N
) -> int:
    """Stream the oracle's solutions to ``sink``; returns the count."""
    count = 0
    for subset in iter_connected_subsets(g, k, max_n):
        sink(subset)
        count += 1
    return count
