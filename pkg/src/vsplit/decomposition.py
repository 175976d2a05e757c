"""Edge decompositions into stars or cycles, their weight, and desplitting.

A decomposition partitions the host's edge set into connected parts drawn from
one family (all stars, or all cycles).  Its weight is the sum over vertices of
the number of parts touching that vertex.  A graph whose weight equals its
vertex count is exactly a disjoint union of family members; while the weight
exceeds n, some vertex sits in two or more parts and can be desplit: one
exclusive split that hands one part its own copy of the vertex.  Each desplit
step preserves the weight and adds one vertex, so weight - n steps always
reach the disjoint form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DecompositionError,
    EdgeCoveredTwice,
    EdgeNotCovered,
    IsolatedVertexInHost,
    PartNotConnected,
    PartNotInFamily,
)
from .graph import Graph, edge_key
from .splits import (
    EXCLUSIVE,
    SplitRecord,
    SplitSequence,
    apply_split,
    fresh_descendants,
    make_record,
)

STARS = "stars"
CYCLES = "cycles"
FAMILIES = (STARS, CYCLES)

Part = frozenset  # an edge set


@dataclass(frozen=True)
class Decomposition:
    host: Graph
    parts: tuple[frozenset[tuple[str, str]], ...]
    family: str

    @staticmethod
    def build(host: Graph, parts: Iterable[Iterable], family: str) -> "Decomposition":
        norm = tuple(frozenset(edge_key(u, v) for u, v in part) for part in parts)
        return Decomposition(host, norm, family)


@dataclass
class WeightReport:
    total: int
    per_vertex: dict[str, int]


def _part_vertices(part: frozenset[tuple[str, str]]) -> set[str]:
    return {x for e in part for x in e}


def _is_star(part: frozenset[tuple[str, str]]) -> bool:
    # every edge shares one common vertex
    common = None
    for e in part:
        ends = set(e)
        common = ends if common is None else common & ends
        if not common:
            return False
    return common is not None


def _is_cycle(part: frozenset[tuple[str, str]], verts: set[str]) -> bool:
    deg: dict[str, int] = {v: 0 for v in verts}
    for u, v in part:
        deg[u] += 1
        deg[v] += 1
    return all(d == 2 for d in deg.values())


def _connected_edges(part: frozenset[tuple[str, str]], verts: set[str]) -> bool:
    adj: dict[str, list[str]] = {v: [] for v in verts}
    for u, v in part:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts


def validate_and_weigh(d: Decomposition) -> WeightReport:
    """Check the full decomposition contract and return its weight."""
    if d.family not in FAMILIES:
        raise DecompositionError(f"unknown family {d.family!r}")
    host = d.host
    if host.isolated_vertices():
        raise IsolatedVertexInHost(
            f"host has isolated vertices {list(host.isolated_vertices())}"
        )
    seen_edges: set[tuple[str, str]] = set()
    per_vertex: dict[str, int] = {v: 0 for v in host.vertices}
    for i, part in enumerate(d.parts):
        if not part:
            raise PartNotInFamily(f"part {i} is empty")
        for e in part:
            if e not in host.edges:
                raise DecompositionError(f"part {i} uses unknown edge {e}")
            if e in seen_edges:
                raise EdgeCoveredTwice(f"edge {e} appears in two parts")
            seen_edges.add(e)
        verts = _part_vertices(part)
        if not _connected_edges(part, verts):
            raise PartNotConnected(f"part {i} is not connected")
        if d.family == STARS and not _is_star(part):
            raise PartNotInFamily(f"part {i} is not a star")
        if d.family == CYCLES and not _is_cycle(part, verts):
            raise PartNotInFamily(f"part {i} is not a cycle")
        for v in verts:
            per_vertex[v] += 1
    missing = host.edges - seen_edges
    if missing:
        raise EdgeNotCovered(f"edges not covered: {sorted(missing)[:5]}")
    return WeightReport(sum(per_vertex.values()), per_vertex)


@dataclass(frozen=True)
class DesplitStep:
    graph: Graph
    decomposition: Decomposition
    record: SplitRecord


def desplit_step(
    d: Decomposition,
    *,
    vertex: str | None = None,
    part_index: int | None = None,
    reserved_names: Iterable[str] = (),
) -> DesplitStep | None:
    """Split one shared vertex off into the part that keeps it.

    Returns None when the parts are already pairwise disjoint.  By default the
    smallest vertex lying in two or more parts is chosen, and among its parts
    the one whose smallest edge is smallest keeps the first descendant; both
    choices can be overridden.  The split is exclusive: the first descendant
    receives the neighbors reached through the chosen part's edges, the second
    receives all others.  Weight is preserved and the vertex count grows by 1.
    """
    validate_and_weigh(d)
    member_of: dict[str, list[int]] = {}
    for i, part in enumerate(d.parts):
        for v in _part_vertices(part):
            member_of.setdefault(v, []).append(i)
    shared = sorted(v for v, ids in member_of.items() if len(ids) > 1)
    if not shared:
        return None
    u = shared[0] if vertex is None else vertex
    if u not in member_of or len(member_of[u]) < 2:
        raise DecompositionError(f"vertex {u!r} does not lie in two parts")
    containing = member_of[u]
    if part_index is None:
        part_index = min(containing, key=lambda i: min(d.parts[i]))
    elif part_index not in containing:
        raise DecompositionError(f"part {part_index} does not contain {u!r}")
    part_in = d.parts[part_index]
    inside = {v if w == u else w for (w, v) in part_in if u in (w, v)}
    outside = set(d.host.neighbors(u)) - inside
    used = set(d.host.vertices) | set(reserved_names)
    u_in, u_out = fresh_descendants(u, used)
    rec = make_record(u, inside, outside, EXCLUSIVE, u_in, u_out)
    new_host = apply_split(d.host, rec)

    def relabel(part: frozenset, repl: str) -> frozenset:
        return frozenset(
            edge_key(repl if a == u else a, repl if b == u else b) for a, b in part
        )

    new_parts = []
    for i, part in enumerate(d.parts):
        if u not in _part_vertices(part):
            new_parts.append(part)
        elif i == part_index:
            new_parts.append(relabel(part, u_in))
        else:
            new_parts.append(relabel(part, u_out))
    new_d = Decomposition(new_host, tuple(new_parts), d.family)
    return DesplitStep(new_host, new_d, rec)


def decomposition_to_splits(
    d: Decomposition, *, reserved_names: Iterable[str] = ()
) -> SplitSequence:
    """Iterate desplitting until the parts are disjoint family members.

    The returned sequence has exactly weight(d) - n(host) exclusive steps, and
    replaying it on the host yields the disjoint union of the parts.
    """
    expected = validate_and_weigh(d).total - d.host.n
    reserved = set(reserved_names)
    records = []
    cur = d
    while True:
        step = desplit_step(cur, reserved_names=reserved)
        if step is None:
            break
        records.append(step.record)
        reserved.update((step.record.descendant_a, step.record.descendant_b))
        cur = step.decomposition
        if len(records) > expected:
            raise AssertionError("desplitting failed to terminate on schedule")
    return SplitSequence(d.host, tuple(records))
