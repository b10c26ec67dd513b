"""Immutable simple undirected graphs and the degree machinery built on them.

Vertices are addressed by index; index order is declaration order, which is
also the tie-break order used everywhere else in the package. Labels exist
only at the boundary (parsing, reporting).
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateLabel,
    GraphBuildError,
    IndexOutOfRange,
    SelfLoop,
    UnknownEndpoint,
)

__all__ = [
    "Graph",
    "Bipartition",
    "ComponentDecomposition",
    "build_graph",
    "degree",
    "restricted_degree",
    "connected_components",
    "bipartition",
    "find_odd_cycle",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: unique labels, no loops, no parallel edges.

    ``adjacency[v]`` is the sorted tuple of neighbor indices of ``v``.
    Instances are immutable and safe to share across threads.
    """

    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.labels)}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.adjacency[v])

    def check_index(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(v, self.n)

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices`` (kept in the given order).

        Returns the subgraph and the tuple mapping new index -> old index.
        """
        old_order = tuple(vertices)
        new_index = {old: new for new, old in enumerate(old_order)}
        adjacency = []
        m2 = 0
        for old in old_order:
            nbrs = sorted(new_index[w] for w in self.adjacency[old] if w in new_index)
            m2 += len(nbrs)
            adjacency.append(tuple(nbrs))
        return (
            Graph(
                labels=tuple(self.labels[old] for old in old_order),
                adjacency=tuple(adjacency),
                m=m2 // 2,
            ),
            old_order,
        )

    @staticmethod
    def from_index_edges(
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a graph directly from index pairs, bypassing label lookup.

        Still rejects self-loops, duplicate edges and out-of-range indices.
        """
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphBuildError(f"{len(labels)} labels for {n} vertices")
        adjacency: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(u if not 0 <= u < n else v, n)
            if u == v:
                raise SelfLoop(labels[u])
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(labels[key[0]], labels[key[1]])
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
            m += 1
        g = Graph(labels=labels, adjacency=tuple(tuple(sorted(a)) for a in adjacency), m=m)
        _assert_handshake(g)
        return g


@dataclass(frozen=True)
class Bipartition:
    """A two-coloring: every edge has one end in ``side_a``, one in ``side_b``."""

    side_a: frozenset[int]
    side_b: frozenset[int]


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components as vertex-index sets, ordered by smallest member."""

    components: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.components)


def _assert_handshake(g: Graph) -> None:
    # Degree sum equals twice the edge count in every well-formed graph;
    # a mismatch means construction itself is broken.
    total = sum(g.degrees)
    if total != 2 * g.m:
        raise GraphBuildError(
            f"degree sum {total} != 2*m = {2 * g.m}; adjacency structure is corrupt"
        )


def build_graph(
    vertex_labels: Sequence[str], edges: Iterable[tuple[str, str]]
) -> Graph:
    """Build a graph from labels (declaration order fixes indices) and label pairs.

    Raises DuplicateLabel, UnknownEndpoint, SelfLoop or DuplicateEdge, naming
    the offending token.
    """
    labels = tuple(vertex_labels)
    index: dict[str, int] = {}
    for name in labels:
        if name in index:
            raise DuplicateLabel(name)
        index[name] = len(index)
    index_edges = []
    for a, b in edges:
        if a not in index:
            raise UnknownEndpoint(a)
        if b not in index:
            raise UnknownEndpoint(b)
        if a == b:
            raise SelfLoop(a)
        index_edges.append((index[a], index[b]))
    return Graph.from_index_edges(len(labels), index_edges, labels)


def degree(g: Graph, v: int) -> int:
    """Number of neighbors of ``v``."""
    g.check_index(v)
    return len(g.adjacency[v])


def restricted_degree(g: Graph, v: int, a: Iterable[int]) -> int:
    """Number of neighbors of ``v`` that lie inside the vertex set ``a``."""
    g.check_index(v)
    a = set(a)
    for w in a:
        g.check_index(w)
    return sum(1 for w in g.adjacency[v] if w in a)


def connected_components(g: Graph) -> ComponentDecomposition:
    """Breadth-first decomposition into connected components."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        components.append(frozenset(comp))
    return ComponentDecomposition(components=tuple(components))


def _two_color(g: Graph) -> tuple[list[int], tuple[int, ...] | None]:
    """BFS 2-coloring. Returns (colors, odd_cycle) where colors[v] in {0, 1}.

    The component root (its lowest index) always gets color 0. When the graph
    is not two-colorable, ``odd_cycle`` is a witness cycle of odd length and
    the colors are meaningless.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return color, _cycle_through(parent, u, w)
    return color, None


def _cycle_through(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    # Walk both BFS-tree paths to the root and join at the lowest common
    # ancestor; (u, w) closes the odd cycle.
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_w = [w]
    while parent[path_w[-1]] != -1:
        path_w.append(parent[path_w[-1]])
    on_u = {v: i for i, v in enumerate(path_u)}
    for j, v in enumerate(path_w):
        if v in on_u:
            return tuple(path_u[: on_u[v] + 1]) + tuple(reversed(path_w[:j]))
    raise AssertionError("BFS tree paths must meet")


def bipartition(g: Graph) -> Bipartition | None:
    """Two-color the graph, or return None if it contains an odd cycle.

    Per component, the lowest-index vertex lands in ``side_a``.
    """
    color, odd = _two_color(g)
    if odd is not None:
        return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(side_a=side_a, side_b=side_b)


def find_odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """A witness odd cycle (as a vertex sequence), or None if bipartite."""
    _, odd = _two_color(g)
    return odd
