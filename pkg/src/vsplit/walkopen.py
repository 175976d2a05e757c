"""Turn a covering closed walk into splits, one visit per vertex.

The walk is held as a cyclic position array: positions[j] is the vertex
currently standing at walk position j, and slot j is the walk edge between
positions j and j+1 (indices mod the walk length).  Slots flagged as not real
are virtual pairing edges; they keep the walk closed but contribute no
neighbors to any emitted split.

Scanning the positions once, every vertex still occupying two or more
positions is split when first reached: one descendant keeps just that visit
(its at most two flanking real neighbors), the other inherits every remaining
visit.  Each such split shortens the multiplicity by one, so after the scan
all positions hold pairwise distinct vertices and the real slots form the
edges of the final graph.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .splits import EXCLUSIVE, INCLUSIVE, SplitRecord, fresh_descendants, make_record


def open_closed_walk(
    positions: Sequence[str],
    real_slot: Sequence[bool],
    used_names: Iterable[str],
) -> tuple[list[SplitRecord], list[str]]:
    """Emit the splits and the final (pairwise distinct) position array.

    A split's record is marked exclusive exactly when the two sides are
    disjoint; with a simple walk edge set they always are.
    """
    l = len(positions)
    if len(real_slot) != l:
        raise ValueError("one slot flag per position is required")
    pos = list(positions)
    occ: dict[str, set[int]] = {}
    for j, v in enumerate(pos):
        occ.setdefault(v, set()).add(j)
    used = set(used_names)
    records: list[SplitRecord] = []
    for j in range(l):
        v = pos[j]
        spots = occ[v]
        if j == l - 1 or len(spots) == 1:
            continue
        keep, rest = fresh_descendants(v, used)
        used.update((keep, rest))
        side_keep: set[str] = set()
        if real_slot[(j - 1) % l]:
            side_keep.add(pos[(j - 1) % l])
        if real_slot[j]:
            side_keep.add(pos[(j + 1) % l])
        side_rest: set[str] = set()
        for p in spots:
            if p == j:
                continue
            if real_slot[(p - 1) % l]:
                side_rest.add(pos[(p - 1) % l])
            if real_slot[p]:
                side_rest.add(pos[(p + 1) % l])
        variant = INCLUSIVE if side_keep & side_rest else EXCLUSIVE
        records.append(make_record(v, side_keep, side_rest, variant, keep, rest))
        for p in spots:
            pos[p] = keep if p == j else rest
        occ[keep] = {j}
        occ[rest] = spots - {j}
        del occ[v]
    return records, pos
