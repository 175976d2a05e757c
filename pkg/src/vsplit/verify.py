"""Independent certificate checking and a brute-force minimum-splits oracle.

The checker replays a split sequence from scratch, trusting nothing but the
graph model, and reports violations instead of raising.  The oracle does
breadth-first search over all splits up to a depth bound, pruning isomorphic
states via a canonical labeling, and is deliberately independent of every
solver so the two can cross-check each other.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError, OracleExceeded, StateBudgetExceeded
from .graph import (
    BIPARTITE,
    CONSTELLATION,
    CYCLE_GRAPH,
    GRAPH_CLASSES,
    LINEAR_FOREST,
    Graph,
    is_member,
)
from .splits import EXCLUSIVE, SplitSequence, apply_split, check_variant


@dataclass
class CheckReport:
    """Replay outcome: violations abort the replay, warnings do not.

    Step indices are 1-based; index 0 marks problems with the certificate as a
    whole (base graph mismatch).  `valid` means no violations and a final
    graph inside the target class.
    """

    valid: bool
    steps_checked: int
    violations: list[tuple[int, str]] = field(default_factory=list)
    warnings: list[tuple[int, str]] = field(default_factory=list)
    final_class_membership: bool = False


def check_certificate(
    g: Graph, s: SplitSequence, variant: str, graph_class: str
) -> CheckReport:
    """Validate a split-sequence certificate against graph, variant, class."""
    check_variant(variant)
    if graph_class not in GRAPH_CLASSES:
        raise GraphError(f"unknown graph class {graph_class!r}")
    violations: list[tuple[int, str]] = []
    warnings: list[tuple[int, str]] = []
    if s.base != g:
        return CheckReport(False, 0, [(0, "BaseMismatch")], [], False)
    cur = g
    steps_checked = 0
    for i, r in enumerate(s.steps, 1):
        if r.target not in cur.vertices:
            violations.append((i, "UnknownVertex"))
            break
        a, b = set(r.side_a), set(r.side_b)
        nbrs = set(cur.neighbors(r.target))
        ok = True
        if a | b != nbrs:
            violations.append((i, "CoverageViolation"))
            ok = False
        if a & b and (r.variant == EXCLUSIVE or variant == EXCLUSIVE):
            violations.append((i, "OverlapViolation"))
            ok = False
        if (
            r.descendant_a == r.descendant_b
            or r.descendant_a in cur.vertices
            or r.descendant_b in cur.vertices
        ):
            violations.append((i, "DuplicateDescendantId"))
            ok = False
        if not ok:
            break
        if not a or not b:
            warnings.append((i, "EmptySide"))
        cur = apply_split(cur, r)
        steps_checked += 1
    completed = steps_checked == len(s.steps)
    membership = completed and is_member(cur, graph_class)
    return CheckReport(
        valid=not violations and membership,
        steps_checked=steps_checked,
        violations=violations,
        warnings=warnings,
        final_class_membership=membership,
    )


# --- canonical labeling -----------------------------------------------------

def _refined_colors(masks: Sequence[int]) -> list[int]:
    n = len(masks)
    colors = [bin(m).count("1") for m in masks]
    while True:
        sigs = []
        for v in range(n):
            nbr_colors = sorted(colors[w] for w in range(n) if masks[v] >> w & 1)
            sigs.append((colors[v], tuple(nbr_colors)))
        lookup = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [lookup[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_key(masks: Sequence[int]) -> tuple[int, ...]:
    """A complete isomorphism invariant for adjacency-bitmask graphs.

    Vertices are ordered class-by-class (refinement classes are invariant
    sets); within that constraint, backtracking finds the vertex order whose
    prefix-adjacency rows are lexicographically least.  Two graphs get the
    same key exactly when they are isomorphic.
    """
    n = len(masks)
    if n == 0:
        return ()
    colors = _refined_colors(masks)
    classes: dict[int, list[int]] = defaultdict(list)
    for v, c in enumerate(colors):
        classes[c].append(v)
    class_order = [classes[c] for c in sorted(classes)]
    best: list[int] | None = None
    placed: list[int] = []
    rows: list[int] = []

    def rec(ci: int) -> None:
        nonlocal best
        while ci < len(class_order) and not class_order[ci]:
            ci += 1
        if ci == len(class_order):
            if best is None or rows < best:
                best = list(rows)
            return
        depth = len(placed)
        group = class_order[ci]
        for v in list(group):
            row = 0
            for d, u in enumerate(placed):
                if masks[v] >> u & 1:
                    row |= 1 << d
            if best is not None:
                rows.append(row)
                worse = rows > best[: depth + 1]
                rows.pop()
                if worse:
                    continue
            group.remove(v)
            placed.append(v)
            rows.append(row)
            rec(ci)
            rows.pop()
            placed.pop()
            group.append(v)

    rec(0)
    assert best is not None
    return tuple(best)


# --- brute-force search over split sequences --------------------------------

def _graph_to_masks(g: Graph) -> tuple[int, ...]:
    index = {v: i for i, v in enumerate(g.sorted_vertices)}
    masks = [0] * g.n
    for u, v in g.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return tuple(masks)


def _mask_components(masks: Sequence[int]) -> list[int]:
    n = len(masks)
    unseen = (1 << n) - 1
    comps = []
    while unseen:
        seed = unseen & -unseen
        comp = seed
        frontier = seed
        while frontier:
            grown = comp
            v = 0
            f = frontier
            while f:
                if f & 1:
                    grown |= masks[v]
                f >>= 1
                v += 1
            frontier = grown & ~comp
            comp = grown
        comps.append(comp)
        unseen &= ~comp
    return comps


def _member_masks(masks: Sequence[int], graph_class: str) -> bool:
    n = len(masks)
    degs = [bin(m).count("1") for m in masks]
    if graph_class == CYCLE_GRAPH:
        return all(d == 2 for d in degs)
    if graph_class == LINEAR_FOREST:
        if any(d > 2 for d in degs):
            return False
        ncomp = len(_mask_components(masks))
        return sum(degs) // 2 == n - ncomp
    if graph_class == CONSTELLATION:
        if n and sum(degs) // 2 >= n:
            return False  # has a cycle, so it is no forest of stars
        for comp in _mask_components(masks):
            members = [v for v in range(n) if comp >> v & 1]
            nc = len(members)
            mc = sum(degs[v] for v in members) // 2
            if mc != nc - 1:
                return False
            if nc > 1 and max(degs[v] for v in members) != nc - 1:
                return False
        return True
    if graph_class == BIPARTITE:
        color = {}
        for s in range(n):
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                w = 0
                mv = masks[v]
                while mv:
                    if mv & 1:
                        if w not in color:
                            color[w] = 1 - color[v]
                            stack.append(w)
                        elif color[w] == color[v]:
                            return False
                    mv >>= 1
                    w += 1
        return True
    raise GraphError(f"unknown graph class {graph_class!r}")


def _split_moves(nb: int, exclusive_only: bool) -> list[tuple[int, int]]:
    """Unordered side pairs (as neighbor bitmasks) for one target vertex."""
    pairs: list[tuple[int, int]] = []
    if exclusive_only:
        low = nb & -nb
        a = (nb - 1) & nb
        while a:
            if a & low:
                pairs.append((a, nb ^ a))
            a = (a - 1) & nb
        return pairs
    seen = set()
    a = nb
    while a:
        rest = nb ^ a
        c = a
        while True:
            b = rest | c
            if b:
                key = (a, b) if a <= b else (b, a)
                if key not in seen:
                    seen.add(key)
                    pairs.append(key)
            if c == 0:
                break
            c = (c - 1) & a
        a = (a - 1) & nb
    return pairs


def _apply_mask_split(
    masks: Sequence[int], i: int, side_a: int, side_b: int
) -> tuple[int, ...]:
    n = len(masks)
    out = []
    for k in range(n):
        if k == i:
            out.append(side_a)
            continue
        m = masks[k] & ~(1 << i)
        if side_a >> k & 1:
            m |= 1 << i
        if side_b >> k & 1:
            m |= 1 << n
        out.append(m)
    out.append(side_b)
    return tuple(out)


def _successors(masks: Sequence[int], exclusive_only: bool):
    for i in range(len(masks)):
        nb = masks[i]
        if nb == 0:
            continue
        for a, b in _split_moves(nb, exclusive_only):
            yield _apply_mask_split(masks, i, a, b)


_UNREACHABLE = 1 << 30


def _min_splits_lower_bound(masks: Sequence[int], graph_class: str) -> int:
    """Cheap lower bound on the splits needed to reach ``graph_class``.

    Two facts make the bounds safe for both variants.  Splitting never
    removes an edge, so ``m`` only ever grows while ``n`` grows by exactly
    one per split; a target with ``m_final <= n_final - 1`` (any forest)
    therefore needs at least ``m - n + 1`` splits, and a cycle graph
    (``m_final == n_final``) needs at least ``m - n``.  Second, a vertex of
    degree ``d`` must end up spread over at least ``ceil(d / 2)`` copies
    whenever the target caps degrees at two, which forces at least
    ``sum(ceil(d / 2)) - n`` splits.  Both quantities shrink by at most one
    per split, so ``depth + bound > k_max`` soundly prunes a search state.
    """
    if graph_class == BIPARTITE:
        return 0
    n = len(masks)
    degs = [nb.bit_count() for nb in masks]
    m = sum(degs) // 2
    lower = 0
    if graph_class in (CYCLE_GRAPH, LINEAR_FOREST):
        lower = max(lower, sum((d + 1) // 2 for d in degs) - n)
    if graph_class == CYCLE_GRAPH:
        if any(d == 0 for d in degs):
            return _UNREACHABLE  # an isolated vertex never gains edges
        lower = max(lower, m - n)
    elif m > 0:  # constellation / linear forest: the target is a forest
        lower = max(lower, m - n + 1)
    return lower


def brute_force_profile(
    g: Graph,
    variant: str,
    k_max: int,
    classes: Iterable[str] = GRAPH_CLASSES,
    state_limit: int = 2_000_000,
) -> dict[str, int | None]:
    """Minimum split counts up to k_max for several target classes at once.

    One breadth-first search answers every class; classes not reachable
    within k_max map to None.  Splits onto an empty side are never tried:
    such a split only relabels and adds an isolated vertex, which never
    helps any of the four target classes.
    """
    check_variant(variant)
    wanted = list(classes)
    for c in wanted:
        if c not in GRAPH_CLASSES:
            raise GraphError(f"unknown graph class {c!r}")
    exclusive_only = variant == EXCLUSIVE
    start = _graph_to_masks(g)
    found: dict[str, int | None] = {c: None for c in wanted}
    open_classes = set(wanted)
    for c in wanted:
        if _member_masks(start, c):
            found[c] = 0
            open_classes.discard(c)
        elif _min_splits_lower_bound(start, c) > k_max:
            open_classes.discard(c)
    if not open_classes or k_max == 0:
        return found
    visited = {canonical_key(start)}
    frontier = [start]
    for depth in range(1, k_max + 1):
        last = depth == k_max
        nxt: list[tuple[int, ...]] = []
        budget = k_max - depth
        for state in frontier:
            for succ in _successors(state, exclusive_only):
                if not last:
                    # A member of any open class has lower bound zero, so
                    # pruning here can never hide a solution.
                    if all(
                        _min_splits_lower_bound(succ, c) > budget
                        for c in open_classes
                    ):
                        continue
                    key = canonical_key(succ)
                    if key in visited:
                        continue
                    visited.add(key)
                    if len(visited) > state_limit:
                        raise StateBudgetExceeded(
                            f"oracle exceeded {state_limit} states"
                        )
                    nxt.append(succ)
                for c in list(open_classes):
                    if _member_masks(succ, c):
                        found[c] = depth
                        open_classes.discard(c)
                if not open_classes:
                    return found
        frontier = nxt
        if not frontier:
            break
    return found


def brute_force_min_splits(
    g: Graph,
    graph_class: str,
    variant: str,
    k_max: int,
    state_limit: int = 2_000_000,
) -> int:
    """The exact minimum number of splits, by exhaustive search.

    Raises OracleExceeded if no sequence of at most k_max splits reaches the
    class, and StateBudgetExceeded past `state_limit` stored states.
    """
    res = brute_force_profile(
        g, variant, k_max, classes=(graph_class,), state_limit=state_limit
    )
    ans = res[graph_class]
    if ans is None:
        raise OracleExceeded(k_max)
    return ans
