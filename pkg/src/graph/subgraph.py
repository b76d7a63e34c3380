"""
Queries on induced subgraphs G[S].

``SubgraphAnalyzer`` keeps version-stamped mark arrays of length n so that
membership tests during restricted traversals are O(1) and nothing has to
be cleared between calls. An analyzer belongs to one enumeration; the
module-level functions build a throwaway analyzer per call.
"""

from typing import Dict, Iterable, List, Optional

from .graph import Graph, VertexSet
from ..utils.errors import ContractViolation


def make_vertex_set(members: Iterable[int], graph: Optional[Graph] = None) -> VertexSet:
    """
    Canonicalize an iterable of vertex ids into a sorted tuple.

    Args:
        members: Vertex ids
        graph: When given, ids are range-checked against it

    Returns:
        Strictly ascending tuple

    Raises:
        ContractViolation: On repeated or out-of-range ids
    """
    s = tuple(sorted(members))
    for a, b in zip(s, s[1:]):
        if a == b:
            raise ContractViolation(f"vertex {a} repeated in vertex set")
    if graph is not None and s and (s[0] < 0 or s[-1] >= graph.n):
        raise ContractViolation(f"vertex set {s} not within [0, {graph.n})")
    return s


class SubgraphAnalyzer:
    """Restricted traversals over induced subgraphs of one host graph."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self._adjacency = graph.adjacency
        n = graph.n
        self._member = [0] * n
        self._visited = [0] * n
        self._disc = [0] * n
        self._low = [0] * n
        self._stamp = 0

    def _next_stamp(self) -> int:
        self._stamp += 1
        return self._stamp

    def _mark_members(self, s: VertexSet) -> int:
        stamp = self._next_stamp()
        member = self._member
        for u in s:
            member[u] = stamp
        return stamp

    def is_connected_induced(self, s: VertexSet) -> bool:
        """True iff G[s] is connected."""
        if not s:
            raise ContractViolation("connectivity of the empty set is undefined")
        member = self._member
        visited = self._visited
        adjacency = self._adjacency
        in_s = self._mark_members(s)
        seen = self._next_stamp()

        root = s[0]
        visited[root] = seen
        reached = 1
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adjacency[u]:
                if member[w] == in_s and visited[w] != seen:
                    visited[w] = seen
                    reached += 1
                    stack.append(w)
        return reached == len(s)

    def articulation_points(self, s: VertexSet) -> VertexSet:
        """
        Cut vertices of the connected induced subgraph G[s].

        Single iterative depth-first traversal with discovery/low-link
        indices restricted to ``s``.

        Args:
            s: Non-empty vertex set inducing a connected subgraph

        Returns:
            Sorted articulation points (empty for |s| <= 2)

        Raises:
            ContractViolation: If s is empty or G[s] is disconnected
        """
        if not s:
            raise ContractViolation("articulation points of the empty set are undefined")
        member = self._member
        visited = self._visited
        disc = self._disc
        low = self._low
        adjacency = self._adjacency
        in_s = self._mark_members(s)
        seen = self._next_stamp()

        root = s[0]
        visited[root] = seen
        disc[root] = low[root] = 0
        timer = 1
        root_children = 0
        cuts = set()
        # explicit stack of (vertex, parent, adjacency iterator)
        stack = [(root, -1, iter(adjacency[root]))]

        while stack:
            u, parent, pending = stack[-1]
            descended = False
            for w in pending:
                if member[w] != in_s:
                    continue
                # tree edge: descend
                if visited[w] != seen:
                    visited[w] = seen
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adjacency[w])))
                    descended = True
                    break
                # back edge
                if w != parent and disc[w] < low[u]:
                    low[u] = disc[w]
            if descended:
                continue

            # u finished: propagate low to its parent
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            # root is a cut vertex only with two or more DFS children
            if len(stack) == 1:
                root_children += 1
            elif low[u] >= disc[p]:
                cuts.add(p)

        if timer != len(s):
            raise ContractViolation(f"G[S] is disconnected for S={s}")
        if root_children > 1:
            cuts.add(root)
        return tuple(sorted(cuts))

    def set_neighborhood(self, s: VertexSet) -> VertexSet:
        """All vertices outside ``s`` adjacent to some member of ``s``, sorted."""
        member = self._member
        visited = self._visited
        adjacency = self._adjacency
        in_s = self._mark_members(s)
        seen = self._next_stamp()

        found: List[int] = []
        for u in s:
            for w in adjacency[u]:
                if member[w] != in_s and visited[w] != seen:
                    visited[w] = seen
                    found.append(w)
        found.sort()
        return tuple(found)

    def induced_components(self, s: VertexSet) -> List[VertexSet]:
        """Connected components of G[s], each sorted, ordered by smallest member."""
        return self._components(s, self._mark_members(s))

    def _components(self, s: VertexSet, in_s: int) -> List[VertexSet]:
        member = self._member
        visited = self._visited
        adjacency = self._adjacency
        seen = self._next_stamp()

        components: List[VertexSet] = []
        for root in s:
            if visited[root] == seen:
                continue
            visited[root] = seen
            part = [root]
            stack = [root]
            while stack:
                u = stack.pop()
                for w in adjacency[u]:
                    if member[w] == in_s and visited[w] != seen:
                        visited[w] = seen
                        part.append(w)
                        stack.append(w)
            part.sort()
            components.append(tuple(part))
        return components

    def common_component_neighborhood(self, s: VertexSet) -> VertexSet:
        """
        Vertices outside ``s`` adjacent to every connected component of G[s].

        Adding any returned vertex to ``s`` yields a connected induced
        subgraph.

        Args:
            s: Non-empty vertex set, possibly inducing a disconnected subgraph

        Returns:
            Sorted common neighborhood
        """
        if not s:
            raise ContractViolation("common neighborhood of the empty set is undefined")
        member = self._member
        adjacency = self._adjacency
        in_s = self._mark_members(s)
        components = self._components(s, in_s)

        hits: Dict[int, int] = {}
        last_component: Dict[int, int] = {}
        for index, component in enumerate(components):
            for u in component:
                for w in adjacency[u]:
                    if member[w] != in_s and last_component.get(w) != index:
                        last_component[w] = index
                        hits[w] = hits.get(w, 0) + 1

        wanted = len(components)
        return tuple(sorted(w for w, count in hits.items() if count == wanted))


def is_connected_induced(g: Graph, s: VertexSet) -> bool:
    return SubgraphAnalyzer(g).is_connected_induced(s)


def articulation_points(g: Graph, s: VertexSet) -> VertexSet:
    return SubgraphAnalyzer(g).articulation_points(s)


def set_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    return SubgraphAnalyzer(g).set_neighborhood(s)


def induced_components(g: Graph, s: VertexSet) -> List[VertexSet]:
    return SubgraphAnalyzer(g).induced_components(s)


def common_component_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    return SubgraphAnalyzer(g).common_component_neighborhood(s)
