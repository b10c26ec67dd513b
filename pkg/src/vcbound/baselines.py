"""Classical bound algorithms to compare the enter-exit greedy against.

Both constructions are deliberately deterministic: the matching scans edges
in lexicographic index order, the clique partition seeds each clique with
the highest-degree unassigned vertex. The bounds they certify hold for any
maximal matching / clique partition, so fixing one costs nothing and makes
the outputs testable.
"""

from dataclasses import dataclass
from math import ceil

from .errors import ZeroMaxDegreeWithEdges
from .graph import Graph
from .eega import degree_ordering

__all__ = [
    "MatchingBounds",
    "CliquePartitionBounds",
    "matching_bounds",
    "clique_partition_bounds",
    "ceiling_lower_bound",
]


@dataclass(frozen=True)
class MatchingBounds:
    """A maximal matching M: |M| <= beta(G) <= 2|M|, endpoints form a cover."""

    matching: tuple[tuple[int, int], ...]
    lower: int
    upper: int
    cover: frozenset[int]


@dataclass(frozen=True)
class CliquePartitionBounds:
    """A partition of V into k cliques: n - k <= beta(G).

    The cover is the union of the cliques with at least two vertices.
    """

    cliques: tuple[frozenset[int], ...]
    lower: int
    cover: frozenset[int]


def matching_bounds(g: Graph) -> MatchingBounds:
    """Greedy maximal matching over edges in lexicographic index order."""
    matched = [False] * g.n
    matching = []
    for u, v in g.edges():
        if not matched[u] and not matched[v]:
            matched[u] = True
            matched[v] = True
            matching.append((u, v))
    cover = frozenset(v for pair in matching for v in pair)
    return MatchingBounds(
        matching=tuple(matching),
        lower=len(matching),
        upper=2 * len(matching),
        cover=cover,
    )


def clique_partition_bounds(g: Graph) -> CliquePartitionBounds:
    """Greedy clique partition seeded by degree order.

    Repeatedly take the first unassigned vertex in degree order and grow a
    clique by scanning the remaining unassigned vertices in the same order,
    adding each one adjacent to every current member.
    """
    order = degree_ordering(g).order
    assigned = [False] * g.n
    adj = g.adjacency_sets
    cliques = []
    for seed in order:
        if assigned[seed]:
            continue
        assigned[seed] = True
        clique = [seed]
        for v in order:
            if not assigned[v] and all(v in adj[u] for u in clique):
                assigned[v] = True
                clique.append(v)
        cliques.append(frozenset(clique))
    cover = frozenset(v for c in cliques if len(c) >= 2 for v in c)
    return CliquePartitionBounds(
        cliques=tuple(cliques),
        lower=g.n - len(cliques),
        cover=cover,
    )


def ceiling_lower_bound(m: int, max_degree: int) -> int:
    """ceil(m / max_degree): every cover vertex retires at most max_degree edges."""
    if m == 0:
        return 0
    if max_degree == 0:
        raise ZeroMaxDegreeWithEdges(m)
    return ceil(m / max_degree)
