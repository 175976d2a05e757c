"""Exact minimum splits to a bipartite graph.

The minimum for both variants equals the size of a minimum odd cycle
transversal (OCT): deleting S leaves a 2-colorable rest, and each vertex of S
can instead be split once, sending its neighbors on each color side to a
different copy; conversely the base ancestors of a bipartizing sequence's
targets form an OCT no larger than the sequence.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BudgetExceeded,
    FinalGraphNotBipartite,
    InvalidOct,
    InvalidSequence,
)
from .graph import BIPARTITE, Graph, components, two_coloring
from .result import SolveResult
from .splits import (
    EXCLUSIVE,
    SplitSequence,
    apply_sequence,
    apply_split,
    check_variant,
    fresh_descendants,
    make_record,
)


@dataclass(frozen=True)
class OctResult:
    """An odd cycle transversal plus a proper 2-coloring of what remains."""

    deletion_set: tuple[str, ...]
    side_1: frozenset[str]
    side_2: frozenset[str]


def _shortest_odd_cycle(adj: dict[str, tuple[str, ...] | list[str]]) -> list[str] | None:
    """Vertices of a shortest odd cycle, or None if the graph is bipartite.

    Parity-layered BFS from every start; the globally shortest odd closed walk
    is a simple cycle.
    """
    best: tuple[int, str] | None = None
    best_path: list[str] | None = None
    for s in sorted(adj):
        dist: dict[tuple[str, int], int] = {(s, 0): 0}
        parent: dict[tuple[str, int], tuple[str, int]] = {}
        frontier = [(s, 0)]
        goal = (s, 1)
        while frontier and goal not in dist:
            nxt = []
            for state in frontier:
                v, p = state
                for w in adj[v]:
                    ns = (w, 1 - p)
                    if ns not in dist:
                        dist[ns] = dist[state] + 1
                        parent[ns] = state
                        nxt.append(ns)
            frontier = nxt
        if goal not in dist:
            continue
        if best is None or dist[goal] < best[0]:
            best = (dist[goal], s)
            path = [goal]
            while path[-1] != (s, 0):
                path.append(parent[path[-1]])
            best_path = [v for v, _ in reversed(path)]
    if best_path is None:
        return None
    seen: set[str] = set()
    cycle = []
    for v in best_path[:-1]:
        if v not in seen:
            seen.add(v)
            cycle.append(v)
    return cycle


def _oct_branch(adj: dict[str, list[str]], k: int) -> list[str] | None:
    cycle = _shortest_odd_cycle(adj)
    if cycle is None:
        return []
    if k == 0:
        return None
    for v in cycle:
        rest = {
            x: [w for w in ws if w != v] for x, ws in adj.items() if x != v
        }
        sol = _oct_branch(rest, k - 1)
        if sol is not None:
            return [v] + sol
    return None


def exact_oct(g: Graph, max_k: int = 12) -> OctResult:
    """A minimum odd cycle transversal, solved per component by iterative
    deepening with branching on a shortest odd cycle.

    Raises BudgetExceeded when the minimum exceeds `max_k`.
    """
    chosen: list[str] = []
    budget = max_k
    for comp in components(g):
        adj = {v: list(comp.adjacency[v]) for v in comp.vertices}
        sol = None
        for k in range(budget + 1):
            sol = _oct_branch(adj, k)
            if sol is not None:
                break
        if sol is None:
            raise BudgetExceeded(
                f"odd cycle transversal needs more than {max_k} deletions"
            )
        chosen.extend(sol)
        budget -= len(sol)
    deletion = tuple(sorted(chosen))
    sides = two_coloring(g.without_vertices(deletion))
    assert sides is not None
    return OctResult(deletion, sides[0], sides[1])


def _validate_oct(g: Graph, o: OctResult) -> None:
    s = set(o.deletion_set)
    if len(s) != len(o.deletion_set):
        raise InvalidOct("deletion set contains duplicates")
    if not s <= g.vertices:
        raise InvalidOct("deletion set contains unknown vertices")
    if o.side_1 & o.side_2:
        raise InvalidOct("the two sides overlap")
    if (o.side_1 | o.side_2) != g.vertices - s:
        raise InvalidOct("the sides do not partition the remaining vertices")
    for u, v in g.edges:
        if u in s or v in s:
            continue
        if (u in o.side_1) == (v in o.side_1):
            raise InvalidOct(f"edge {(u, v)} lies inside one side")


def oct_to_splits(
    g: Graph, o: OctResult, *, reserved_names: Iterable[str] = ()
) -> SplitSequence:
    """One exclusive split per deletion vertex, in the given order.

    The first copy of v takes its neighbors on side 2 plus the not yet split
    deletion vertices; the second copy takes side-1 neighbors plus the first
    copies made so far.  The final graph is bipartite with side 1 plus all
    first copies against side 2 plus all second copies.
    """
    _validate_oct(g, o)
    order = list(o.deletion_set)
    cur = g
    used = set(g.vertices) | set(reserved_names)
    first_copies: set[str] = set()
    records = []
    for i, v in enumerate(order):
        later = set(order[i + 1:])
        nbrs = set(cur.neighbors(v))
        c1, c2 = fresh_descendants(v, used)
        used.update((c1, c2))
        side_first = (nbrs & o.side_2) | (nbrs & later)
        side_second = (nbrs & o.side_1) | (nbrs & first_copies)
        if side_first | side_second != nbrs:
            raise InvalidOct(
                f"neighbors of {v!r} stray outside the construction"
            )
        rec = make_record(v, side_first, side_second, EXCLUSIVE, c1, c2)
        cur = apply_split(cur, rec)
        records.append(rec)
        first_copies.add(c1)
    return SplitSequence(g, tuple(records))


def splits_to_oct(g: Graph, s: SplitSequence) -> OctResult:
    """Collapse a bipartizing sequence to the targets' base ancestors.

    The distinct ancestors form an odd cycle transversal of g no larger than
    the number of steps.
    """
    if s.base != g:
        raise InvalidSequence("sequence base differs from the given graph")
    final = apply_sequence(s)
    if two_coloring(final) is None:
        raise FinalGraphNotBipartite("the sequence does not end bipartite")
    anc = s.ancestry
    deletion = tuple(sorted({anc[r.target] for r in s.steps}))
    sides = two_coloring(g.without_vertices(deletion))
    assert sides is not None
    return OctResult(deletion, sides[0], sides[1])


def solve(g: Graph, variant: str, max_k: int = 12) -> SolveResult:
    """Minimum splits (either variant) making g bipartite."""
    check_variant(variant)
    o = exact_oct(g, max_k=max_k)
    seq = oct_to_splits(g, o)
    k = len(seq.steps)
    return SolveResult(
        BIPARTITE, variant, True, k, seq, provenance=("oct-construction",) * k
    )
