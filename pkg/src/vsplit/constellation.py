"""Exact minimum splits into a constellation (disjoint union of stars).

The minimum equals m + vc(G) - n for both split variants, where vc is the
minimum vertex cover size of the graph with isolated vertices set aside.  The
certificate comes from turning an optimal cover into a star decomposition and
desplitting it; the reverse mapping (star centers form a cover, and star
decompositions can be pulled back through a split without weight increase)
gives the matching lower bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .decomposition import (
    STARS,
    Decomposition,
    decomposition_to_splits,
    validate_and_weigh,
)
from .errors import (
    BudgetExceeded,
    InconsistentSplit,
    IsolatedVertexInHost,
    NotACover,
)
from .graph import CONSTELLATION, Graph, edge_key
from .result import SolveResult
from .splits import SplitRecord, SplitSequence, apply_split, check_variant


@dataclass(frozen=True)
class VertexCoverResult:
    cover: frozenset[str]
    size: int
    optimal: bool


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetExceeded(f"vertex cover search exceeded {self.limit} nodes")


def _greedy_matching_size(adj: dict[str, set[str]]) -> int:
    taken: set[str] = set()
    size = 0
    for v in sorted(adj):
        if v in taken:
            continue
        for w in sorted(adj[v]):
            if w not in taken:
                taken.add(v)
                taken.add(w)
                size += 1
                break
    return size


def _drop(adj: dict[str, set[str]], v: str) -> None:
    for w in adj[v]:
        adj[w].discard(v)
    del adj[v]


def _cover_exists(adj: dict[str, set[str]], k: int, budget: _Budget) -> bool:
    """Decision search: does `adj` admit a vertex cover of size <= k?"""
    budget.spend()
    adj = {v: set(ns) for v, ns in adj.items()}
    while True:
        if k < 0:
            return False
        for v in [v for v, ns in adj.items() if not ns]:
            del adj[v]
        if not adj:
            return True
        if k == 0:
            return False
        deg1 = next((v for v in sorted(adj) if len(adj[v]) == 1), None)
        if deg1 is not None:
            w = min(adj[deg1])  # covering the neighbor is never worse
            _drop(adj, w)
            k -= 1
            continue
        break
    if max(len(ns) for ns in adj.values()) <= 2:
        # only cycles remain after the degree-1 rule; cost is known exactly
        need = 0
        seen: set[str] = set()
        for v in adj:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            need += (len(comp) + 1) // 2
        return need <= k
    if _greedy_matching_size(adj) > k:
        return False
    v = max(sorted(adj), key=lambda x: len(adj[x]))
    left = {x: set(ns) for x, ns in adj.items()}
    _drop(left, v)
    if _cover_exists(left, k - 1, budget):
        return True
    right = {x: set(ns) for x, ns in adj.items()}
    nbrs = sorted(right[v])
    for w in nbrs:
        _drop(right, w)
    del right[v]
    return _cover_exists(right, k - len(nbrs), budget)


def _feasible_with(
    g: Graph, size: int, chosen: set[str], excluded: set[str], budget: _Budget
) -> bool:
    """Is there a cover of exactly `size` vertices containing `chosen` and
    avoiding `excluded`?"""
    forced = set(chosen)
    for v in excluded:
        for w in g.neighbors(v):
            if w in excluded:
                return False
            forced.add(w)
    if forced & excluded:
        return False
    if len(forced) > size:
        return False
    rest = g.vertices - forced - excluded
    adj = {
        v: {w for w in g.neighbors(v) if w in rest}
        for v in rest
    }
    return _cover_exists(adj, size - len(forced), budget)


def exact_vertex_cover(g: Graph, node_limit: int = 10**8) -> VertexCoverResult:
    """The lexicographically least minimum vertex cover of g.

    Branch-and-bound on a maximum-degree vertex with degree-0/1 reductions;
    raises BudgetExceeded past `node_limit` search nodes.
    """
    budget = _Budget(node_limit)
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    size = 0
    while not _cover_exists(adj, size, budget):
        size += 1
    chosen: list[str] = []
    excluded: set[str] = set()
    for v in g.sorted_vertices:
        if len(chosen) == size:
            break
        if _feasible_with(g, size, set(chosen) | {v}, excluded, budget):
            chosen.append(v)
        else:
            excluded.add(v)
    return VertexCoverResult(frozenset(chosen), size, True)


def vc_to_star_decomposition(g: Graph, cover: Sequence[str]) -> Decomposition:
    """Stars rooted at the cover vertices, in the given order.

    Each cover vertex takes its not-yet-claimed incident edges as one star;
    empty stars are dropped.  With a minimum cover none are empty and the
    decomposition weight is exactly m + |cover|.
    """
    if g.isolated_vertices():
        raise IsolatedVertexInHost(
            f"isolated vertices {list(g.isolated_vertices())}"
        )
    cover_list = list(cover)
    cover_set = set(cover_list)
    if len(cover_list) != len(cover_set):
        raise NotACover("cover contains duplicates")
    unknown = cover_set - g.vertices
    if unknown:
        raise NotACover(f"unknown vertices {sorted(unknown)}")
    for u, v in g.edges:
        if u not in cover_set and v not in cover_set:
            raise NotACover(f"edge {(u, v)} has no endpoint in the cover")
    claimed: set[tuple[str, str]] = set()
    parts = []
    for v in cover_list:
        star = {
            edge_key(v, w)
            for w in g.neighbors(v)
            if edge_key(v, w) not in claimed
        }
        if star:
            claimed |= star
            parts.append(frozenset(star))
    return Decomposition(g, tuple(parts), STARS)


def star_decomposition_to_vc(d: Decomposition) -> VertexCoverResult:
    """The star centers of a valid star decomposition, which cover every edge.

    Single-edge stars designate their lexicographically smaller endpoint.  The
    returned set has at most weight - m vertices (centers can coincide).
    """
    if d.family != STARS:
        raise NotACover("decomposition family is not stars")
    validate_and_weigh(d)
    centers: set[str] = set()
    for part in d.parts:
        if len(part) == 1:
            centers.add(min(next(iter(part))))
            continue
        common: set[str] | None = None
        for e in part:
            common = set(e) if common is None else common & set(e)
        centers.add(next(iter(common)))
    return VertexCoverResult(frozenset(centers), len(centers), False)


def merge_star_decomposition_through_split(
    g: Graph,
    g_split: Graph,
    record: SplitRecord,
    d_split: Decomposition,
) -> Decomposition:
    """Pull a star decomposition of the split graph back onto g.

    Both descendants collapse to the split target in every part; edges merged
    onto the same pair are deduplicated (first part in order keeps the edge)
    and parts emptied by the merge are dropped.  The result is again a star
    decomposition and its weight never exceeds the input's.
    """
    if apply_split(g, record) != g_split:
        raise InconsistentSplit("g_split is not apply_split(g, record)")
    if d_split.host != g_split:
        raise InconsistentSplit("decomposition host is not the split graph")
    if d_split.family != STARS:
        raise InconsistentSplit("decomposition family is not stars")
    validate_and_weigh(d_split)
    back = {record.descendant_a: record.target, record.descendant_b: record.target}

    def pull(x: str) -> str:
        return back.get(x, x)

    seen: set[tuple[str, str]] = set()
    parts = []
    for part in d_split.parts:
        merged = set()
        for a, b in part:
            e = edge_key(pull(a), pull(b))
            if e not in seen:
                seen.add(e)
                merged.add(e)
        if merged:
            parts.append(frozenset(merged))
    result = Decomposition(g, tuple(parts), STARS)
    validate_and_weigh(result)
    return result


def solve(g: Graph, variant: str, node_limit: int = 10**8) -> SolveResult:
    """Minimum splits (either variant) taking g to a disjoint union of stars."""
    check_variant(variant)
    isolated = g.isolated_vertices()
    core = g.without_vertices(isolated)
    if core.m == 0:
        return SolveResult(
            CONSTELLATION, variant, True, 0, SplitSequence(g, ()),
            provenance=(), isolated_vertices=isolated,
        )
    vc = exact_vertex_cover(core, node_limit=node_limit)
    dec = vc_to_star_decomposition(core, sorted(vc.cover))
    seq = decomposition_to_splits(dec, reserved_names=g.vertices)
    k = len(seq.steps)
    return SolveResult(
        CONSTELLATION,
        variant,
        True,
        k,
        SplitSequence(g, seq.steps),
        provenance=("desplit",) * k,
        isolated_vertices=isolated,
    )
