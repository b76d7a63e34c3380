"""
Explicit supergraph over all connected k-sets, for small instances.

Nodes are the connected k-sets of the host graph. Under the ``irwd``
operator two nodes are adjacent when they share k-1 vertices that induce a
connected subgraph; the ``rwd`` operator drops the connectivity condition.
Edges are computed pairwise from the definition, independently of the
enumerators' generators, so the two can be compared.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Set, Tuple

from ..enumeration.irwd import IRwDEnumerator
from ..enumeration.oracle import DEFAULT_ORACLE_MAX_N, oracle_bruteforce
from ..enumeration.rwd import RwDEnumerator
from ..graph.graph import Graph, VertexSet
from ..graph.subgraph import SubgraphAnalyzer
from ..utils.errors import ConfigurationError, ContractViolation
from ..utils.logging_config import get_logger

OPERATORS = ("irwd", "rwd")
_GENERATORS = {"irwd": IRwDEnumerator, "rwd": RwDEnumerator}

CONNECTIVITY_NOTE = "strong connectivity checked as undirected connectivity (neighbor relation is symmetric)"

logger = get_logger(__name__)


@dataclass(frozen=True)
class Supergraph:
    """Materialized supergraph: node list plus adjacency among node indices."""

    k: int
    operator: str
    nodes: Tuple[VertexSet, ...]
    adjacency: Tuple[Tuple[int, ...], ...]

    @cached_property
    def index(self) -> Dict[VertexSet, int]:
        return {node: i for i, node in enumerate(self.nodes)}

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def neighbor_sets(self, node: VertexSet) -> Set[VertexSet]:
        return {self.nodes[j] for j in self.adjacency[self.index[node]]}

    def is_symmetric(self) -> bool:
        rows = [set(row) for row in self.adjacency]
        return all(i in rows[j] for i, row in enumerate(rows) for j in row)


def is_neighbor_pair(
    g: Graph,
    x: VertexSet,
    y: VertexSet,
    operator: str = "irwd",
    analyzer: Optional[SubgraphAnalyzer] = None
) -> bool:
    """
    Definitional neighbor test between two connected k-sets.

    An empty intersection (k = 1) counts as connected.
    """
    if x == y:
        return False
    common = tuple(sorted(set(x).intersection(y)))
    if len(common) != len(x) - 1:
        return False
    if operator == "rwd" or not common:
        return True
    analyzer = analyzer or SubgraphAnalyzer(g)
    return analyzer.is_connected_induced(common)


def build_supergraph(
    g: Graph,
    k: int,
    operator: str = "irwd",
    max_n: int = DEFAULT_ORACLE_MAX_N
) -> Supergraph:
    """
    Materialize the supergraph of connected k-sets.

    Args:
        g: Host graph (within the oracle cap)
        k: Order
        operator: 'irwd' (connected intersection) or 'rwd' (any intersection)
        max_n: Oracle cap on the host graph size

    Returns:
        Supergraph with lexicographically ordered nodes

    Raises:
        OracleCapExceeded: If g is too large to enumerate by brute force
    """
    if operator not in OPERATORS:
        raise ConfigurationError(f"unknown neighbor operator {operator!r}")
    nodes = tuple(sorted(oracle_bruteforce(g, k, max_n)))
    analyzer = SubgraphAnalyzer(g)
    rows: List[List[int]] = [[] for _ in nodes]
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if is_neighbor_pair(g, nodes[i], nodes[j], operator, analyzer):
                rows[i].append(j)
                rows[j].append(i)

    supergraph = Supergraph(k, operator, nodes, tuple(tuple(row) for row in rows))
    logger.info(
        "Supergraph built",
        n=g.n, k=k, operator=operator, nodes=len(nodes), edges=supergraph.edge_count
    )
    return supergraph


@dataclass(frozen=True)
class Lemma1Report:
    """Connectivity and hop-diameter of a supergraph against the n - k bound."""

    operator: str
    n: int
    k: int
    node_count: int
    edge_count: int
    connected: bool
    symmetric: bool
    diameter: Optional[int]
    bound: int
    diameter_within_bound: bool
    passed: bool
    note: str = field(default=CONNECTIVITY_NOTE)

    def as_dict(self) -> Dict[str, object]:
        return {
            "operator": self.operator,
            "n": self.n,
            "k": self.k,
            "nodes": self.node_count,
            "edges": self.edge_count,
            "connected": self.connected,
            "symmetric": self.symmetric,
            "diameter": self.diameter if self.diameter is not None else "inf",
            "bound": self.bound,
            "diameter_within_bound": self.diameter_within_bound,
            "passed": self.passed,
            "note": self.note,
        }

    def to_key_value(self) -> str:
        lines = []
        for key, value in self.as_dict().items():
            if isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        diameter = self.diameter if self.diameter is not None else "infinite"
        return (
            f"Supergraph check ({self.operator} operator), n={self.n}, k={self.k}\n"
            f"  nodes: {self.node_count}, edges: {self.edge_count}\n"
            f"  connected: {'yes' if self.connected else 'no'}\n"
            f"  symmetric: {'yes' if self.symmetric else 'no'}\n"
            f"  diameter: {diameter} (bound n-k = {self.bound}, {'within' if self.diameter_within_bound else 'exceeded'})\n"
            f"  note: {self.note}\n"
            f"  result: {verdict}\n"
        )


def _eccentricity(adjacency: Tuple[Tuple[int, ...], ...], source: int) -> Tuple[int, int]:
    """Return (reached node count, largest hop distance) of a BFS from ``source``."""
    distance = {source: 0}
    queue = deque([source])
    farthest = 0
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in distance:
                distance[w] = distance[u] + 1
                farthest = max(farthest, distance[w])
                queue.append(w)
    return len(distance), farthest


def check_lemma1(sg: Supergraph, n: int, k: int) -> Lemma1Report:
    """
    Check the supergraph is connected with hop-diameter at most n - k.

    A path of l nodes spans l - 1 hops, so l <= n - k + 1 reads as
    diameter <= n - k. Connectivity and the diameter bound are reported
    separately: the bound does not hold on every instance (the cycle C6
    with k = 4 has a 6-cycle supergraph of diameter 3 > 2), while
    connectivity, which exhaustive enumeration relies on, does.

    Raises:
        ContractViolation: If the supergraph has no nodes
    """
    if not sg.nodes:
        raise ContractViolation("supergraph is empty; no connected k-set exists")

    reached, diameter = _eccentricity(sg.adjacency, 0)
    connected = reached == len(sg.nodes)
    if connected:
        for source in range(1, len(sg.nodes)):
            diameter = max(diameter, _eccentricity(sg.adjacency, source)[1])

    bound = n - k
    within_bound = connected and diameter <= bound
    report = Lemma1Report(
        operator=sg.operator,
        n=n,
        k=k,
        node_count=len(sg.nodes),
        edge_count=sg.edge_count,
        connected=connected,
        symmetric=sg.is_symmetric(),
        diameter=diameter if connected else None,
        bound=bound,
        diameter_within_bound=within_bound,
        passed=connected and within_bound,
    )
    log = logger.info if report.passed else logger.warning
    log("Supergraph checked", **report.as_dict())
    return report


def check_operator_equivalence(g: Graph, sg: Supergraph) -> List[VertexSet]:
    """
    Compare each node's generated neighbors against the definitional ones.

    The generator is the expansion step of the enumerator matching the
    supergraph's operator; duplicates are removed before comparing.

    Returns:
        Nodes whose neighbor sets differ (empty when the two agree)
    """
    if sg.k < 2:
        raise ContractViolation("neighbor generation needs k >= 2")
    enumerator = _GENERATORS[sg.operator](g, sg.k)
    mismatches = [
        node for node in sg.nodes
        if set(enumerator.expand(node)) != sg.neighbor_sets(node)
    ]
    if mismatches:
        logger.warning("Neighbor generator disagrees with definition", mismatches=len(mismatches))
    return mismatches
