"""Exact minimum splits into a disjoint union of cycles.

Exclusive variant: solvable iff every degree is even and positive, and then
the minimum is m - n.  The certificate peels the graph into edge-disjoint
cycles and desplits that decomposition.

Inclusive variant: solvable iff no vertex is isolated.  Per component the
minimum closed walk covering all edges (route inspection) has some length L,
and opening that walk costs exactly L - n splits, which is optimal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .decomposition import CYCLES, Decomposition, decomposition_to_splits
from .errors import (
    CoverageGap,
    Disconnected,
    IsolatedVertex,
    NoEdges,
    OddDegreeVertex,
    TooManyOddVertices,
    WalkInvalid,
    WalkTooShort,
)
from .graph import CYCLE_GRAPH, Graph, Multigraph, components, edge_key, is_connected
from .result import SolveResult
from .splits import EXCLUSIVE, INCLUSIVE, SplitSequence, check_variant
from .walkopen import open_closed_walk


@dataclass(frozen=True)
class ClosedWalk:
    """A closed walk in `host`: steps[0] == steps[-1], consecutive adjacent."""

    host: Graph
    steps: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.steps) - 1


def _check_closed_walk(host: Graph, steps: Sequence[str], *, cover: bool) -> None:
    if len(steps) < 2 or steps[0] != steps[-1]:
        raise WalkInvalid("walk must be closed and non-empty")
    for a, b in zip(steps, steps[1:]):
        if not host.has_edge(a, b):
            raise WalkInvalid(f"walk step {a!r}-{b!r} is not an edge")
    if cover:
        walked = {edge_key(a, b) for a, b in zip(steps, steps[1:])}
        missing = host.edges - walked
        if missing:
            raise CoverageGap(f"walk misses edges {sorted(missing)[:5]}")
        if set(steps) != set(host.vertices):
            raise WalkInvalid("walk does not visit every vertex")


def cycle_decomposition(g: Graph) -> Decomposition:
    """Peel g into edge-disjoint cycles (requires all degrees even, none zero).

    The walk always extends from the smallest usable vertex along its smallest
    fresh neighbor and extracts a cycle at the first vertex repetition, so the
    result is deterministic.
    """
    for v in g.sorted_vertices:
        d = g.degree(v)
        if d == 0:
            raise IsolatedVertex(f"vertex {v!r} is isolated")
        if d % 2:
            raise OddDegreeVertex(f"vertex {v!r} has odd degree {d}")
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    parts = []
    while True:
        start = next((v for v in sorted(adj) if adj[v]), None)
        if start is None:
            break
        trail = [start]
        index = {start: 0}
        trail_edges: set[tuple[str, str]] = set()
        cur = start
        while True:
            nxt = min(
                w for w in adj[cur] if edge_key(cur, w) not in trail_edges
            )
            trail_edges.add(edge_key(cur, nxt))
            if nxt in index:
                cycle = trail[index[nxt]:]
                part = {
                    edge_key(a, b) for a, b in zip(cycle, cycle[1:])
                }
                part.add(edge_key(cycle[-1], cycle[0]))
                for a, b in part:
                    adj[a].discard(b)
                    adj[b].discard(a)
                parts.append(frozenset(part))
                break
            trail.append(nxt)
            index[nxt] = len(trail) - 1
            cur = nxt
    return Decomposition(g, tuple(parts), CYCLES)


def solve_exclusive(g: Graph) -> SolveResult:
    """Minimum exclusive splits to a cycle graph: m - n, or infeasible."""
    for v in g.sorted_vertices:
        d = g.degree(v)
        if d == 0:
            return SolveResult(
                CYCLE_GRAPH, EXCLUSIVE, False, None, None,
                reason=f"vertex {v!r} is isolated",
            )
        if d % 2:
            return SolveResult(
                CYCLE_GRAPH, EXCLUSIVE, False, None, None,
                reason=f"vertex {v!r} has odd degree {d}",
            )
    dec = cycle_decomposition(g)
    seq = decomposition_to_splits(dec)
    k = len(seq.steps)
    return SolveResult(
        CYCLE_GRAPH, EXCLUSIVE, True, k, seq, provenance=("desplit",) * k
    )


def _bfs_parents(g: Graph, source: str) -> tuple[dict[str, int], dict[str, str]]:
    dist = {source: 0}
    parent: dict[str, str] = {}
    frontier = [source]
    while frontier:
        nxt: list[str] = []
        for v in frontier:
            for w in g.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt
    return dist, parent


def _min_weight_pairing(
    items: Sequence[str], dist: dict[str, dict[str, int]]
) -> list[tuple[str, str]]:
    """Minimum-total-distance perfect pairing of an even item list (bitmask DP)."""
    k = len(items)
    full = (1 << k) - 1
    INF = float("inf")
    dp = [INF] * (1 << k)
    dp[0] = 0
    choice: list[tuple[int, int] | None] = [None] * (1 << k)
    for mask in range(1 << k):
        if dp[mask] == INF:
            continue
        i = next(t for t in range(k) if not mask >> t & 1) if mask != full else None
        if i is None:
            continue
        for j in range(i + 1, k):
            if mask >> j & 1:
                continue
            nm = mask | 1 << i | 1 << j
            cost = dp[mask] + dist[items[i]][items[j]]
            if cost < dp[nm]:
                dp[nm] = cost
                choice[nm] = (i, j)
    pairs = []
    mask = full
    while mask:
        i, j = choice[mask]
        pairs.append((items[i], items[j]))
        mask &= ~(1 << i | 1 << j)
    pairs.reverse()
    return pairs


def chinese_postman(g_component: Graph, odd_cap: int = 20) -> ClosedWalk:
    """A minimum-length closed walk covering every edge of the component.

    Odd-degree vertices are matched up along shortest paths (exact bitmask DP,
    capped at `odd_cap` odd vertices) and the duplicated edges make the
    multigraph Eulerian.
    """
    if g_component.m == 0:
        raise NoEdges("component has no edges")
    if not is_connected(g_component):
        raise Disconnected("route inspection needs a connected component")
    odd = [v for v in g_component.sorted_vertices if g_component.degree(v) % 2]
    mg = Multigraph(g_component.vertices)
    for u, v in g_component.edges:
        mg.add_edge(u, v)
    if odd:
        if len(odd) > odd_cap:
            raise TooManyOddVertices(
                f"{len(odd)} odd-degree vertices exceed the cap {odd_cap}"
            )
        dist: dict[str, dict[str, int]] = {}
        parents: dict[str, dict[str, str]] = {}
        for s in odd:
            dist[s], parents[s] = _bfs_parents(g_component, s)
        for a, b in _min_weight_pairing(odd, dist):
            path = [b]
            while path[-1] != a:
                path.append(parents[a][path[-1]])
            for u, v in zip(path, path[1:]):
                mg.add_edge(u, v)
    circuit = mg.euler_circuit(g_component.sorted_vertices[0])
    return ClosedWalk(g_component, tuple(circuit))


def walk_to_cycle(
    g_component: Graph,
    walk: ClosedWalk,
    *,
    reserved_names: Iterable[str] = (),
) -> SplitSequence:
    """Open a covering closed walk of length >= 3 into a single simple cycle.

    Exactly length - n splits are emitted; replaying them on the component
    yields one cycle through all the walk's visits.
    """
    if walk.host != g_component:
        raise WalkInvalid("walk host differs from the component")
    if walk.length == 2:
        raise WalkTooShort("closed walks of length 2 cannot become a cycle")
    _check_closed_walk(g_component, walk.steps, cover=True)
    if walk.length < 3:
        raise WalkTooShort(f"walk length {walk.length} is too short")
    positions = list(walk.steps[:-1])
    used = set(g_component.vertices) | set(reserved_names)
    records, _ = open_closed_walk(positions, [True] * len(positions), used)
    return SplitSequence(g_component, tuple(records))


def merge_closed_walks(
    g_component: Graph, walks: Sequence[ClosedWalk]
) -> ClosedWalk:
    """Combine closed walks that jointly cover the component into one.

    A single input walk is returned unchanged; otherwise the walks' edge
    visits form an even multigraph whose Euler circuit is the merged walk.
    """
    if g_component.m == 0:
        raise NoEdges("component has no edges")
    if not is_connected(g_component):
        raise Disconnected("cannot merge walks of a disconnected graph")
    if not walks:
        raise CoverageGap("no walks supplied")
    covered: set[tuple[str, str]] = set()
    for w in walks:
        if w.host != g_component:
            raise WalkInvalid("walk host differs from the component")
        _check_closed_walk(g_component, w.steps, cover=False)
        covered |= {edge_key(a, b) for a, b in zip(w.steps, w.steps[1:])}
    missing = g_component.edges - covered
    if missing:
        raise CoverageGap(f"walks miss edges {sorted(missing)[:5]}")
    if len(walks) == 1:
        return walks[0]
    mg = Multigraph(g_component.vertices)
    for w in walks:
        for a, b in zip(w.steps, w.steps[1:]):
            mg.add_edge(a, b)
    circuit = mg.euler_circuit(g_component.sorted_vertices[0])
    return ClosedWalk(g_component, tuple(circuit))


def solve_inclusive(g: Graph, odd_cap: int = 20) -> SolveResult:
    """Minimum inclusive splits to a cycle graph.

    Infeasible exactly when some vertex is isolated.  Components with one edge
    walk it back and forth (length 4); every other component uses its optimal
    covering walk.  The total is the sum of length - n over components.
    """
    iso = g.isolated_vertices()
    if iso:
        return SolveResult(
            CYCLE_GRAPH, INCLUSIVE, False, None, None,
            reason=f"vertex {iso[0]!r} is isolated",
        )
    records: list = []
    reserved = set(g.vertices)
    total = 0
    for comp in components(g):
        if comp.m == 1:
            x, y = comp.sorted_vertices
            walk = ClosedWalk(comp, (x, y, x, y, x))
        else:
            walk = chinese_postman(comp, odd_cap=odd_cap)
        seq = walk_to_cycle(comp, walk, reserved_names=reserved)
        records.extend(seq.steps)
        for r in seq.steps:
            reserved.update((r.descendant_a, r.descendant_b))
        total += walk.length - comp.n
    cert = SplitSequence(g, tuple(records))
    return SolveResult(
        CYCLE_GRAPH, INCLUSIVE, True, total, cert,
        provenance=("walk-opening",) * total,
    )


def solve(g: Graph, variant: str, odd_cap: int = 20) -> SolveResult:
    check_variant(variant)
    if variant == EXCLUSIVE:
        return solve_exclusive(g)
    return solve_inclusive(g, odd_cap=odd_cap)
