"""Exact minimum splits into a linear forest (disjoint union of paths).

Per connected component the answer is m - n + t where t = max(odd/2, 1) is
the minimum number of edge-disjoint trails covering the component (odd being
the count of odd-degree vertices).  Both variants agree.  The certificate
pairs up odd vertices with virtual edges, walks an Euler circuit of the
augmented component, and opens that walk; the virtual edges never contribute
neighbors, so cutting them leaves exactly t paths.  Eulerian components open
their single covering cycle and then cut it once.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CoverageGap,
    Disconnected,
    InvalidSequence,
    NoEdges,
    SplitError,
    WalkInvalid,
)
from .graph import LINEAR_FOREST, Graph, components, edge_key, is_connected, is_member
from .result import SolveResult
from .splits import (
    EXCLUSIVE,
    SplitSequence,
    apply_split,
    check_variant,
    fresh_descendants,
    make_record,
)
from .walkopen import open_closed_walk


@dataclass(frozen=True)
class TrailCover:
    """Edge-disjoint trails jointly covering a connected host.

    `odd_count` is the host's number of odd-degree vertices; `min_trails` is
    max(odd_count/2, 1) and equals len(trails).  For an Eulerian host the one
    trail is closed (first == last vertex).
    """

    host: Graph
    trails: tuple[tuple[str, ...], ...]
    odd_count: int
    min_trails: int


def _euler_with_virtual(
    component: Graph, pairs: Sequence[tuple[str, str]]
) -> tuple[list[str], list[bool]]:
    """Euler circuit of the component plus one virtual edge per pair.

    Returns the cyclic position array and per-slot flags (True = real edge).
    Parallel choices prefer the smaller neighbor, real copies first.
    """
    edges: list[tuple[str, str, bool]] = [
        (u, v, True) for u, v in sorted(component.edges)
    ]
    edges.extend((a, b, False) for a, b in pairs)
    adj: dict[str, list[int]] = {v: [] for v in component.vertices}
    for eid, (u, v, _real) in enumerate(edges):
        adj[u].append(eid)
        adj[v].append(eid)

    def other(eid: int, v: str) -> str:
        u, w, _ = edges[eid]
        return w if v == u else u

    for v in adj:
        adj[v].sort(key=lambda eid: (other(eid, v), edges[eid][2] is False))
    used = [False] * len(edges)
    ptr = {v: 0 for v in adj}
    start = component.sorted_vertices[0]
    stack: list[tuple[str, int | None]] = [(start, None)]
    out: list[tuple[str, int | None]] = []
    while stack:
        v, ein = stack[-1]
        lst = adj[v]
        i = ptr[v]
        while i < len(lst) and used[lst[i]]:
            i += 1
        ptr[v] = i
        if i == len(lst):
            out.append(stack.pop())
        else:
            eid = lst[i]
            used[eid] = True
            stack.append((other(eid, v), eid))
    if not all(used):
        raise Disconnected("edges do not form one connected block")
    out.reverse()
    positions = [v for v, _ in out[:-1]]
    real = [edges[out[t + 1][1]][2] for t in range(len(out) - 1)]
    return positions, real


def min_trail_cover(g_component: Graph) -> TrailCover:
    """A minimum set of edge-disjoint trails covering the component.

    Odd-degree vertices are paired in sorted order by virtual edges; cutting
    the augmented Euler circuit at the virtual slots yields the trails.
    """
    if g_component.m == 0:
        raise NoEdges("component has no edges")
    if not is_connected(g_component):
        raise Disconnected("trail cover needs a connected component")
    odd = [v for v in g_component.sorted_vertices if g_component.degree(v) % 2]
    pairs = [(odd[i], odd[i + 1]) for i in range(0, len(odd), 2)]
    positions, real = _euler_with_virtual(g_component, pairs)
    l = len(positions)
    if not pairs:
        trails = (tuple(positions + [positions[0]]),)
    else:
        f = real.index(False)
        k = (f + 1) % l
        pos2 = positions[k:] + positions[:k]
        real2 = real[k:] + real[:k]
        cut: list[tuple[str, ...]] = []
        cur = [pos2[0]]
        for j in range(l):
            nxt = pos2[(j + 1) % l]
            if real2[j]:
                cur.append(nxt)
            else:
                cut.append(tuple(cur))
                cur = [nxt]
        trails = tuple(cut)
    return TrailCover(
        g_component, trails, len(odd), max(len(odd) // 2, 1)
    )


def _validate_trail_cover(component: Graph, tc: TrailCover) -> None:
    if component.m == 0:
        raise NoEdges("component has no edges")
    if not is_connected(component):
        raise Disconnected("trail cover needs a connected component")
    if tc.host != component:
        raise WalkInvalid("trail cover host differs from the component")
    odd = sum(1 for v in component.vertices if component.degree(v) % 2)
    if tc.odd_count != odd:
        raise WalkInvalid(f"odd_count {tc.odd_count} but the component has {odd}")
    expected = max(odd // 2, 1)
    if tc.min_trails != expected or len(tc.trails) != expected:
        raise WalkInvalid(f"expected exactly {expected} trails")
    seen: set[tuple[str, str]] = set()
    for trail in tc.trails:
        if len(trail) < 2:
            raise WalkInvalid("a trail needs at least one edge")
        for a, b in zip(trail, trail[1:]):
            if not component.has_edge(a, b):
                raise WalkInvalid(f"trail step {a!r}-{b!r} is not an edge")
            e = edge_key(a, b)
            if e in seen:
                raise WalkInvalid(f"edge {e} is used twice")
            seen.add(e)
    missing = component.edges - seen
    if missing:
        raise CoverageGap(f"trails miss edges {sorted(missing)[:5]}")
    if tc.odd_count == 0:
        trail = tc.trails[0]
        if trail[0] != trail[-1]:
            raise WalkInvalid("an Eulerian component needs a closed trail")
    else:
        t = len(tc.trails)
        for i in range(t):
            if tc.trails[i][-1] == tc.trails[(i + 1) % t][0]:
                raise WalkInvalid("consecutive trail boundaries coincide")


def trails_to_splits(
    g_component: Graph,
    tc: TrailCover,
    *,
    reserved_names: Iterable[str] = (),
) -> SplitSequence:
    """Splits that turn the component into exactly `min_trails` disjoint paths.

    The trails are rejoined into the augmented circuit (virtual slots between
    consecutive trails), the circuit is opened, and an Eulerian component gets
    one extra exclusive split that cuts its final cycle open.  Every emitted
    record is exclusive because each real edge is walked exactly once.
    """
    _validate_trail_cover(g_component, tc)
    if tc.odd_count == 0:
        closed = tc.trails[0]
        positions = list(closed[:-1])
        real = [True] * len(positions)
    else:
        positions = [v for trail in tc.trails for v in trail]
        real = []
        for trail in tc.trails:
            real.extend([True] * (len(trail) - 1))
            real.append(False)
    used = set(g_component.vertices) | set(reserved_names)
    records, final = open_closed_walk(positions, real, used)
    for r in records:
        used.update((r.descendant_a, r.descendant_b))
    if tc.odd_count == 0:
        v0 = final[0]
        a, b = fresh_descendants(v0, used)
        records.append(
            make_record(v0, {final[-1]}, {final[1]}, EXCLUSIVE, a, b)
        )
    return SplitSequence(g_component, tuple(records))


def solve(g: Graph, variant: str) -> SolveResult:
    """Minimum splits (either variant) taking g to a disjoint union of paths."""
    check_variant(variant)
    isolated = g.isolated_vertices()
    core = g.without_vertices(isolated)
    records: list = []
    provenance: list[str] = []
    reserved = set(g.vertices)
    for comp in components(core):
        tc = min_trail_cover(comp)
        seq = trails_to_splits(comp, tc, reserved_names=reserved)
        records.extend(seq.steps)
        for r in seq.steps:
            reserved.update((r.descendant_a, r.descendant_b))
        tags = ["trail-opening"] * len(seq.steps)
        if tc.odd_count == 0 and tags:
            tags[-1] = "cycle-opening"
        provenance.extend(tags)
    cert = SplitSequence(g, tuple(records))
    return SolveResult(
        LINEAR_FOREST,
        variant,
        True,
        len(records),
        cert,
        provenance=tuple(provenance),
        isolated_vertices=isolated,
    )


def exclusivize_sequence(g: Graph, s: SplitSequence) -> SplitSequence:
    """Rewrite a valid inclusive sequence ending in a linear forest as an
    exclusive sequence of the same length ending in a linear forest.

    Both sequences are replayed side by side: a neighbor both sides share is
    kept only on the first side, and neighbors that the rewritten graph has
    already lost are dropped.  Already-exclusive sequences come back unchanged.
    """
    if s.base != g:
        raise InvalidSequence("sequence base differs from the given graph")
    cur_in = g
    cur_ex = g
    out = []
    for i, r in enumerate(s.steps, 1):
        try:
            nxt_in = apply_split(cur_in, r)
        except SplitError as exc:
            raise InvalidSequence(f"step {i}: {exc}") from exc
        nbrs_ex = set(cur_ex.neighbors(r.target))
        side_a = set(r.side_a) & nbrs_ex
        side_b = (set(r.side_b) & nbrs_ex) - set(r.side_a)
        r2 = make_record(
            r.target, side_a, side_b, EXCLUSIVE, r.descendant_a, r.descendant_b
        )
        cur_ex = apply_split(cur_ex, r2)
        cur_in = nxt_in
        out.append(r2)
    if not is_member(cur_in, LINEAR_FOREST):
        raise InvalidSequence("the sequence does not end in a linear forest")
    return SplitSequence(g, tuple(out))
