import math

from ..graph.graph import Graph
from ..utils.errors import ContractViolation, ExactSmallDegreeCase, UnknownAlgorithmError


def count_upper_bound(n: int, delta: int, k: int) -> float:
    """
    Upper bound n * (e * delta)^k / ((delta - 1) * k) on connected k-sets.

    Evaluated in log space; returns ``math.inf`` past float range.

    Raises:
        ExactSmallDegreeCase: For delta < 2, where the formula is singular
    """
    if delta < 2:
        raise ExactSmallDegreeCase(delta)
    if n == 0:
        return 0.0
    log_bound = math.log(n) + k * (1.0 + math.log(delta)) - math.log((delta - 1) * k)
    try:
        return math.exp(log_bound)
    except OverflowError:
        return math.inf


def exact_small_degree_count(g: Graph, k: int) -> int:
    """Exact count for graphs with max degree <= 1: vertices, edges, or nothing."""
    if g.max_degree > 1:
        raise ContractViolation("exact count only applies to max degree <= 1")
    if k == 1:
        return g.n
    if k == 2:
        return g.m
    return 0


def solution_count_bound(g: Graph, k: int) -> float:
    """The counting bound for ``g``, or the exact count when max degree < 2."""
    try:
        return count_upper_bound(g.n, g.max_degree, k)
    except ExactSmallDegreeCase:
        return float(exact_small_degree_count(g, k))


def neighborhood_size_bound(n: int, k: int, delta: int) -> int:
    """Largest possible supergraph neighborhood: k * min(n - k, k * delta)."""
    return k * min(n - k, k * delta)


def delay_bound(algorithm: str, n: int, k: int, delta: int) -> float:
    """
    Evaluate the asymptotic delay expression of a reverse-search enumerator.

    rwd:  k * min(n-k, k*delta) * (k * (delta + log k) + log n)
    irwd: k * min(n-k, k*delta) * (k * log delta + log n)

    Natural logarithms; each log term is clamped to at least 1 so tiny
    instances do not collapse to zero. Constants are not modelled.
    """
    neighborhood = max(neighborhood_size_bound(n, k, delta), 1)
    log_n = max(math.log(max(n, 1)), 1.0)
    if algorithm == "rwd":
        per_neighbor = k * (delta + max(math.log(max(k, 1)), 1.0)) + log_n
    elif algorithm == "irwd":
        per_neighbor = k * max(math.log(max(delta, 1)), 1.0) + log_n
    else:
        raise UnknownAlgorithmError(f"no delay bound for algorithm {algorithm!r}")
    return neighborhood * per_neighbor
