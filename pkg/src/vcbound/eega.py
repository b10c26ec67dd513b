"""Two-phase enter-exit greedy bounds for the vertex cover number.

Phase 1 sorts vertices by non-ascending degree and returns the shortest
prefix whose degree sum reaches the edge count; no vertex cover can be
smaller, so that prefix length is a lower bound L.

Phase 2 starts from the first L vertices of the ordering as a candidate
cover S and alternates two loops:

* enter loop: while some outside vertex still touches an uncovered edge,
  the first such vertex (in degree order) moves into S. When the loop
  stops, everything outside S is independent, so S is a vertex cover.
* exit loop: while some member of S has no neighbor outside, the last
  such member (in degree order) moves out. When the loop stops every
  member covers an edge privately, so S is a *minimal* cover.

The reported upper bound U is |S|, improved to min(|S|, n - |S|) when S
itself turned out independent, and to the smaller color class when the
graph is bipartite. Whatever refinement wins, the reported cover is the
set that realizes U and it is always a minimal vertex cover.
"""

from dataclasses import dataclass

from .errors import PreconditionViolation, VcboundError
from .graph import Graph, bipartition, connected_components

__all__ = [
    "DegreeOrdering",
    "CoverState",
    "TraceEvent",
    "BoundsResult",
    "degree_ordering",
    "phase1_lower_bound",
    "phase2_upper_bound",
    "run_eega",
]

PHASE2_SET = "phase2-set"
COMPLEMENT_SET = "complement-set"
BIPARTITE_SIDE = "bipartite-side"


@dataclass(frozen=True)
class DegreeOrdering:
    """Vertices sorted by non-ascending degree; ties keep declaration order."""

    order: tuple[int, ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class TraceEvent:
    """One step of phase 2. ``snapshot_sizes`` is (|S|, |V-S|) after the step."""

    kind: str  # "enter" | "exit" | "finalize"
    vertex: int | None
    snapshot_sizes: tuple[int, int]


@dataclass(frozen=True)
class BoundsResult:
    lower: int
    upper: int
    cover: frozenset[int]
    upper_source: str
    trace: tuple[TraceEvent, ...] | None = None


class CoverState:
    """Mutable (S, V-S) partition with maintained outside degrees.

    ``outside_degree[v]`` is the number of neighbors of ``v`` currently
    outside the cover; moves update the neighbors' counts by one instead of
    recounting. Not safe to share across threads.
    """

    def __init__(self, g: Graph, initial_cover: set[int]):
        self.g = g
        self.in_cover = [v in initial_cover for v in range(g.n)]
        self.cover_size = len(initial_cover)
        self.outside_degree = [
            sum(1 for w in g.adjacency[v] if not self.in_cover[w]) for v in range(g.n)
        ]

    def enter(self, v: int) -> None:
        assert not self.in_cover[v]
        self.in_cover[v] = True
        self.cover_size += 1
        for w in self.g.adjacency[v]:
            self.outside_degree[w] -= 1

    def exit(self, v: int) -> None:
        assert self.in_cover[v]
        self.in_cover[v] = False
        self.cover_size -= 1
        for w in self.g.adjacency[v]:
            self.outside_degree[w] += 1

    def cover(self) -> frozenset[int]:
        return frozenset(v for v in range(self.g.n) if self.in_cover[v])

    def recount_outside_degrees(self) -> list[int]:
        """Outside degrees recomputed from scratch; for consistency checks."""
        return [
            sum(1 for w in self.g.adjacency[v] if not self.in_cover[w])
            for v in range(self.g.n)
        ]

    def check_consistent(self) -> None:
        if self.outside_degree != self.recount_outside_degrees():
            raise VcboundError("incremental outside degrees diverged from recount")
        if self.cover_size != sum(self.in_cover):
            raise VcboundError("cover size counter diverged")


def degree_ordering(g: Graph) -> DegreeOrdering:
    """Sort vertices by non-ascending degree, declaration index breaking ties."""
    degs = g.degrees
    order = sorted(range(g.n), key=lambda v: -degs[v])
    return DegreeOrdering(order=tuple(order), degrees=tuple(degs[v] for v in order))


def phase1_lower_bound(ordering: DegreeOrdering, m: int) -> int:
    """Shortest prefix of the ordering whose degree sum reaches ``m``.

    Any vertex cover has degree sum at least ``m``, and no set beats the
    degree sum of an equally sized prefix, so the prefix length bounds the
    cover number from below. Returns 0 for an edgeless graph.
    """
    if m == 0:
        return 0
    total = 0
    for i, d in enumerate(ordering.degrees):
        total += d
        if total >= m:
            return i + 1
    raise VcboundError("degree sum below edge count; graph data is corrupt")


def phase2_upper_bound(
    g: Graph,
    ordering: DegreeOrdering,
    lower: int,
    *,
    trace: bool = False,
    validate: bool = False,
) -> BoundsResult:
    """Grow then prune a candidate cover; report a certified minimal cover.

    Requires a connected graph with at least one edge (run_eega decomposes
    arbitrary graphs). ``validate`` re-derives every incrementally maintained
    quantity from scratch after each step and cross-checks the scan choices
    against a naive rescan; it exists for tests and costs a factor of n.
    """
    if g.m == 0:
        raise PreconditionViolation("phase 2 requires at least one edge")
    if len(connected_components(g)) != 1:
        raise PreconditionViolation("phase 2 requires a connected graph")

    order = ordering.order
    state = CoverState(g, set(order[:lower]))
    events: list[TraceEvent] = [] if trace else None  # type: ignore[assignment]

    def record(kind: str, vertex: int | None) -> None:
        if events is not None:
            events.append(
                TraceEvent(
                    kind=kind,
                    vertex=vertex,
                    snapshot_sizes=(state.cover_size, g.n - state.cover_size),
                )
            )

    # Enter loop. Outside degrees only drop while vertices enter, so a vertex
    # skipped at its turn never becomes eligible again and the scan pointer
    # can advance monotonically over the ordering.
    pos = 0
    while pos < g.n:
        v = order[pos]
        if not state.in_cover[v] and state.outside_degree[v] > 0:
            if validate:
                _check_first_choice(state, order, v)
            state.enter(v)
            record("enter", v)
            if validate:
                state.check_consistent()
        else:
            pos += 1

    # Exit loop. Outside degrees only grow while vertices leave, so the
    # candidate set (members with no outside neighbor) only shrinks and the
    # backward pointer is monotone as well.
    pos = g.n - 1
    while pos >= 0:
        v = order[pos]
        if state.in_cover[v] and state.outside_degree[v] == 0:
            if validate:
                _check_last_choice(state, order, v)
            state.exit(v)
            record("exit", v)
            if validate:
                state.check_consistent()
                _check_outside_independent(state)
        pos -= 1

    cover = state.cover()
    upper = len(cover)
    source = PHASE2_SET

    # A member whose outside degree equals its degree has no neighbor inside
    # S; if that holds for all of S, both sides are independent and the
    # smaller one is also a minimal cover.
    degs = g.degrees
    s_independent = all(state.outside_degree[v] == degs[v] for v in cover)
    if s_independent and g.n - len(cover) < upper:
        cover = frozenset(v for v in range(g.n) if not state.in_cover[v])
        upper = len(cover)
        source = COMPLEMENT_SET

    parts = bipartition(g)
    if parts is not None:
        for side in (parts.side_a, parts.side_b):
            if len(side) < upper:
                cover = side
                upper = len(side)
                source = BIPARTITE_SIDE

    if events is not None:
        events.append(
            TraceEvent(kind="finalize", vertex=None, snapshot_sizes=(upper, g.n - upper))
        )

    if upper < lower:
        raise VcboundError(f"upper bound {upper} fell below lower bound {lower}")
    return BoundsResult(
        lower=lower,
        upper=upper,
        cover=cover,
        upper_source=source,
        trace=tuple(events) if events is not None else None,
    )


def _check_first_choice(state: CoverState, order: tuple[int, ...], chosen: int) -> None:
    for v in order:
        if not state.in_cover[v] and state.outside_degree[v] > 0:
            if v != chosen:
                raise VcboundError(f"enter scan picked {chosen}, rescan says {v}")
            return
    raise VcboundError("enter scan picked a vertex but rescan found none")


def _check_last_choice(state: CoverState, order: tuple[int, ...], chosen: int) -> None:
    for v in reversed(order):
        if state.in_cover[v] and state.outside_degree[v] == 0:
            if v != chosen:
                raise VcboundError(f"exit scan picked {chosen}, rescan says {v}")
            return
    raise VcboundError("exit scan picked a vertex but rescan found none")


def _check_outside_independent(state: CoverState) -> None:
    g = state.g
    for v in range(g.n):
        if not state.in_cover[v]:
            if any(not state.in_cover[w] for w in g.adjacency[v]):
                raise VcboundError("outside set stopped being independent after an exit")


def run_eega(g: Graph, *, trace: bool = False, validate: bool = False) -> BoundsResult:
    """Run both phases per connected component and sum the bounds.

    Isolated vertices contribute nothing; edge-bearing components each get
    the full two-phase treatment on their induced subgraph. For a connected
    input this equals phase2_upper_bound on the whole graph.
    """
    comps = connected_components(g)
    lower = 0
    upper = 0
    cover: set[int] = set()
    events: list[TraceEvent] = []
    sources: set[str] = set()
    for comp in comps:
        if len(comp) == 1:
            continue
        sub, old_index = g.subgraph(sorted(comp))
        ordering = degree_ordering(sub)
        sub_lower = phase1_lower_bound(ordering, sub.m)
        result = phase2_upper_bound(sub, ordering, sub_lower, trace=trace, validate=validate)
        lower += result.lower
        upper += result.upper
        cover.update(old_index[v] for v in result.cover)
        sources.add(result.upper_source)
        if trace and result.trace is not None:
            for ev in result.trace:
                events.append(
                    TraceEvent(
                        kind=ev.kind,
                        vertex=None if ev.vertex is None else old_index[ev.vertex],
                        snapshot_sizes=ev.snapshot_sizes,
                    )
                )
    source = sources.pop() if len(sources) == 1 else PHASE2_SET
    return BoundsResult(
        lower=lower,
        upper=upper,
        cover=frozenset(cover),
        upper_source=source,
        trace=tuple(events) if trace else None,
    )
