"""
Immutable undirected simple graph in sorted adjacency-list form.

Vertices are dense integer ids in ``[0, n)``. Edge-list text may carry
arbitrary non-negative labels when parsed with ``relabel=True``; the label
table is kept on the graph so output can restore the originals.
"""

from bisect import bisect_left
from collections import deque
from typing import Iterable, List, Optional, Sequence, TextIO, Tuple, Union

from ..utils.errors import ContractViolation, GraphParseError, GraphValidationError
from ..utils.logging_config import get_logger

VertexId = int
VertexSet = Tuple[int, ...]

logger = get_logger(__name__)


class Graph:
    """Undirected simple graph; read-only after construction."""

    __slots__ = ("_adjacency", "_labels", "_m", "_max_degree")

    def __init__(
        self,
        adjacency: Sequence[Sequence[int]],
        labels: Optional[Sequence[int]] = None
    ):
        """
        Build a graph from already-validated adjacency lists.

        Use ``Graph.from_edges`` or ``parse_edge_list`` for untrusted input.

        Args:
            adjacency: Per-vertex neighbor ids (sorted, symmetric, no loops)
            labels: Optional external label per vertex; identity if omitted
        """
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(a) for a in adjacency)
        n = len(self._adjacency)
        if labels is not None and len(labels) != n:
            raise GraphValidationError(f"label table has {len(labels)} entries for {n} vertices")
        self._labels: Optional[Tuple[int, ...]] = tuple(labels) if labels is not None else None
        self._m = sum(len(a) for a in self._adjacency) // 2
        self._max_degree = max((len(a) for a in self._adjacency), default=0)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[int]] = None
    ) -> "Graph":
        """
        Build a graph from an edge iterable, collapsing duplicate edges.

        Args:
            n: Vertex count
            edges: Pairs of vertex ids in [0, n)
            labels: Optional external label per vertex

        Returns:
            The constructed Graph

        Raises:
            GraphValidationError: On self-loops, negative n or ids out of range
        """
        if n < 0:
            raise GraphValidationError(f"vertex count must be non-negative, got {n}")
        neighbor_sets: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) references a vertex outside [0, {n})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        return cls([sorted(s) for s in neighbor_sets], labels)

    @property
    def n(self) -> int:
        return len(self._adjacency)

    @property
    def m(self) -> int:
        return self._m

    @property
    def max_degree(self) -> int:
        return self._max_degree

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    @property
    def has_labels(self) -> bool:
        return self._labels is not None

    def label(self, v: VertexId) -> int:
        """External label of vertex ``v`` (the id itself without a label table)."""
        return self._labels[v] if self._labels is not None else v

    def degree(self, v: VertexId) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def neighbors(self, v: VertexId) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency[v]

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        """Adjacency test by binary search, O(log Δ)."""
        self._check_vertex(u)
        self._check_vertex(v)
        row = self._adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u, row in enumerate(self._adjacency) for v in row if u < v]

    def connected_components(self) -> List[VertexSet]:
        """
        Partition the vertices into maximal connected sets.

        Returns:
            Sorted components, ordered by smallest member
        """
        seen = [False] * self.n
        components: List[VertexSet] = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            members = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self._adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        members.append(w)
                        queue.append(w)
            components.append(tuple(sorted(members)))
        return components

    def to_edge_list(self) -> str:
        """Serialize as header plus sorted edge lines; re-parsing yields an equal graph."""
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def _check_vertex(self, v: VertexId) -> None:
        if not (0 <= v < self.n):
            raise ContractViolation(f"vertex {v} outside [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adjacency == other._adjacency and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._adjacency, self._labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


def _decode(text: Union[str, bytes, TextIO]) -> str:
    try:
        if isinstance(text, bytes):
            return text.decode("utf-8")
        if isinstance(text, str):
            return text
        return text.read()
    except UnicodeDecodeError as e:
        # line of the first undecodable byte within the chunk being decoded
        line_number = e.object[:e.start].count(b"\n") + 1
        raise GraphParseError(f"invalid UTF-8 byte 0x{e.object[e.start]:02x}", line_number) from e


def parse_edge_list(text: Union[str, bytes, TextIO], relabel: bool = False) -> Graph:
    """
    Parse edge-list text into a Graph.

    Each non-comment line holds two whitespace-separated non-negative vertex
    ids. Lines starting with '#' are comments. An optional header
    ``n <count>`` declares the vertex count (so trailing isolated vertices are
    representable) and must precede every edge line.

    Args:
        text: Edge-list text, UTF-8 bytes or a readable text stream (LF or CRLF)
        relabel: Remap arbitrary labels densely in ascending label order

    Returns:
        Parsed Graph

    Raises:
        GraphParseError: Malformed line, invalid UTF-8, duplicate or misplaced header
        GraphValidationError: Self-loop or id beyond the declared count
    """
    text = _decode(text)

    declared_n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    max_id = -1

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if tokens[0] == "n":
            if declared_n is not None:
                raise GraphParseError("duplicate 'n' header", line_number)
            if edges:
                raise GraphParseError("'n' header must precede edge lines", line_number)
            if len(tokens) != 2:
                raise GraphParseError(f"expected 'n <count>', got {line!r}", line_number)
            declared_n = _parse_id(tokens[1], line_number)
            continue

        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex ids, got {line!r}", line_number)
        u = _parse_id(tokens[0], line_number)
        v = _parse_id(tokens[1], line_number)
        if u == v:
            raise GraphValidationError(f"line {line_number}: self-loop on vertex {u}")
        if not relabel and declared_n is not None and max(u, v) >= declared_n:
            raise GraphValidationError(
                f"line {line_number}: vertex {max(u, v)} not below declared n={declared_n}"
            )
        edges.append((u, v))
        max_id = max(max_id, u, v)

    if relabel:
        graph = _relabelled_graph(edges, declared_n)
    else:
        n = declared_n if declared_n is not None else max_id + 1
        graph = Graph.from_edges(n, edges)

    logger.debug("Edge list parsed", n=graph.n, m=graph.m, max_degree=graph.max_degree)
    return graph


def _relabelled_graph(edges: List[Tuple[int, int]], declared_n: Optional[int]) -> Graph:
    labels = sorted({x for edge in edges for x in edge})
    if declared_n is not None:
        if declared_n < len(labels):
            raise GraphValidationError(
                f"declared n={declared_n} is below the {len(labels)} distinct labels"
            )
        # Extra isolated vertices take fresh labels above the largest seen.
        next_label = labels[-1] + 1 if labels else 0
        labels.extend(range(next_label, next_label + declared_n - len(labels)))
    index = {label: i for i, label in enumerate(labels)}
    return Graph.from_edges(
        len(labels),
        ((index[u], index[v]) for u, v in edges),
        labels=labels,
    )


def _parse_id(token: str, line_number: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise GraphParseError(f"invalid vertex id {token!r}", line_number)
    return int(token)


def neighbors(g: Graph, v: VertexId) -> Tuple[int, ...]:
    """Sorted neighbor list of ``v``."""
    return g.neighbors(v)


def connected_components(g: Graph) -> List[VertexSet]:
    """Connected components of ``g``, each sorted, ordered by smallest member."""
    return g.connected_components()
