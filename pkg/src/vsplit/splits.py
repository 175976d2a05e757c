"""Vertex-split records, split sequences, and their application to graphs.

Splitting a vertex v replaces it by two descendants whose neighborhoods
together reproduce N(v).  An inclusive split may hand a neighbor to both
descendants; an exclusive split must partition the neighborhood.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    CoverageViolation,
    DuplicateDescendantId,
    OverlapViolation,
    SplitError,
    UnknownVertex,
)
from .graph import Graph

INCLUSIVE = "inclusive"
EXCLUSIVE = "exclusive"
VARIANTS = (INCLUSIVE, EXCLUSIVE)


def check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise SplitError(f"unknown split variant {variant!r}")
    return variant


@dataclass(frozen=True)
class SplitRecord:
    """One vertex split: the target, the two neighbor sides, and the names of
    the descendants that replace the target."""

    target: str
    side_a: tuple[str, ...]
    side_b: tuple[str, ...]
    variant: str
    descendant_a: str
    descendant_b: str


def make_record(
    target: str,
    side_a: Iterable[str],
    side_b: Iterable[str],
    variant: str,
    descendant_a: str,
    descendant_b: str,
) -> SplitRecord:
    """Build a record with both sides stored in sorted order."""
    return SplitRecord(
        target,
        tuple(sorted(set(side_a))),
        tuple(sorted(set(side_b))),
        check_variant(variant),
        descendant_a,
        descendant_b,
    )


def fresh_descendants(target: str, used: Iterable[str]) -> tuple[str, str]:
    """Deterministic descendant names for a split of `target`.

    The first free pair target#i / target#i+1 (odd i) is chosen, so repeated
    splits of the same lineage yield a#1, a#2, then a#1#1, a#1#2, and so on.
    """
    taken = set(used)
    i = 1
    while f"{target}#{i}" in taken or f"{target}#{i + 1}" in taken:
        i += 2
    return f"{target}#{i}", f"{target}#{i + 1}"


def apply_split(g: Graph, record: SplitRecord) -> Graph:
    """Apply one split record, validating it against g first."""
    t = record.target
    if t not in g.vertices:
        raise UnknownVertex(f"target {t!r} is not a vertex")
    nbrs = set(g.neighbors(t))
    a = set(record.side_a)
    b = set(record.side_b)
    if a | b != nbrs:
        missing = sorted(nbrs - (a | b))
        extra = sorted((a | b) - nbrs)
        raise CoverageViolation(
            f"sides of {t!r} do not cover its neighborhood"
            f" (missing {missing}, extraneous {extra})"
        )
    check_variant(record.variant)
    if record.variant == EXCLUSIVE and a & b:
        raise OverlapViolation(f"exclusive split of {t!r} shares {sorted(a & b)}")
    da, db = record.descendant_a, record.descendant_b
    if da == db:
        raise DuplicateDescendantId(f"descendants of {t!r} are both named {da!r}")
    for d in (da, db):
        if d in g.vertices:
            raise DuplicateDescendantId(f"descendant {d!r} already exists")
    verts = (g.vertices - {t}) | {da, db}
    edges = [e for e in g.edges if t not in e]
    edges.extend((da, x) for x in a)
    edges.extend((db, x) for x in b)
    return Graph.build(verts, edges)


@dataclass(frozen=True)
class SplitSequence:
    """A base graph plus an ordered list of splits applied to it.

    Each step adds exactly one vertex, so a sequence of k steps certifies a
    k-split transformation of the base graph.
    """

    base: Graph
    steps: tuple[SplitRecord, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @cached_property
    def ancestry(self) -> dict[str, str]:
        """Map every vertex that ever appears back to its base ancestor."""
        anc = {v: v for v in self.base.vertices}
        for r in self.steps:
            root = anc.get(r.target, r.target)
            anc[r.descendant_a] = root
            anc[r.descendant_b] = root
        return anc

    @cached_property
    def final_graph(self) -> Graph:
        return apply_sequence(self)

    def graphs(self):
        """Yield the base graph and every intermediate graph in order."""
        cur = self.base
        yield cur
        for r in self.steps:
            cur = apply_split(cur, r)
            yield cur


def apply_sequence(seq: SplitSequence) -> Graph:
    """Replay all steps; validation errors carry the 1-based step index."""
    cur = seq.base
    for i, r in enumerate(seq.steps, 1):
        try:
            cur = apply_split(cur, r)
        except SplitError as exc:
            raise type(exc)(f"step {i}: {exc}") from exc
    return cur
