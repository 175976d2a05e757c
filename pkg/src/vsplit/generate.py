"""Seeded graph generators for tests, benchmarks, and the CLI.

All generators are deterministic functions of their parameters and seed.
Vertex labels are v00, v01, ... so lexicographic and numeric order agree.
"""
from __future__ import annotations

import random
from itertools import combinations

from .errors import GraphError
from .graph import Graph, edge_key

KINDS = (
    "gnp",
    "even-union-of-cycles",
    "bipartite-plus-noise",
    "complete",
    "cycle",
    "star",
    "path",
)


def _labels(n: int) -> list[str]:
    width = max(2, len(str(max(n - 1, 0))))
    return [f"v{i:0{width}d}" for i in range(n)]


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = random.Random(seed)
    labels = _labels(n)
    edges = [
        (u, v) for u, v in combinations(labels, 2) if rng.random() < p
    ]
    return Graph.build(labels, edges)


def even_union_of_cycles(n: int, cycles: int, seed: int) -> Graph:
    """An edge-disjoint union of cycles on at most n vertices.

    Every degree is even by construction.  Cycles whose edges would collide
    with earlier ones are re-drawn a bounded number of times and dropped if
    unlucky, so the result may have fewer than `cycles` cycles but is never
    degenerate (at least one cycle, provided n >= 3).
    """
    if n < 3:
        raise GraphError("need n >= 3 for at least one cycle")
    rng = random.Random(seed)
    labels = _labels(n)
    edges: set[tuple[str, str]] = set()
    made = 0
    for _ in range(cycles):
        for _attempt in range(200):
            size = rng.randint(3, n)
            verts = rng.sample(labels, size)
            cand = {edge_key(a, b) for a, b in zip(verts, verts[1:])}
            cand.add(edge_key(verts[-1], verts[0]))
            if len(cand) == size and not cand & edges:
                edges |= cand
                made += 1
                break
        if made == 0 and _ == cycles - 1:
            raise GraphError("could not place any cycle")
    return Graph.build((), edges)


def bipartite_plus_noise(n: int, p: float, noise: int, seed: int) -> Graph:
    """A random bipartite graph plus `noise` same-side edges.

    Deleting one endpoint per noise edge restores bipartiteness, so the odd
    cycle transversal number is at most `noise`.
    """
    rng = random.Random(seed)
    labels = _labels(n)
    half = n // 2
    side_a, side_b = labels[:half], labels[half:]
    edges = {
        edge_key(u, v)
        for u in side_a
        for v in side_b
        if rng.random() < p
    }
    candidates = [
        edge_key(u, v)
        for side in (side_a, side_b)
        for u, v in combinations(side, 2)
        if edge_key(u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:noise])
    return Graph.build(labels, edges)


def complete(n: int) -> Graph:
    labels = _labels(n)
    return Graph.build(labels, combinations(labels, 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs n >= 3")
    labels = _labels(n)
    edges = list(zip(labels, labels[1:])) + [(labels[-1], labels[0])]
    return Graph.build(labels, edges)


def star(n: int) -> Graph:
    """The star on n vertices: one center adjacent to n - 1 leaves."""
    if n < 1:
        raise GraphError("a star needs n >= 1")
    labels = _labels(n)
    return Graph.build(labels, [(labels[0], v) for v in labels[1:]])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs n >= 1")
    labels = _labels(n)
    return Graph.build(labels, zip(labels, labels[1:]))


def generate(kind: str, n: int, *, p: float = 0.5, cycles: int = 2,
             noise: int = 2, seed: int = 0) -> Graph:
    """Dispatch by kind name (as used by the command line)."""
    if kind == "gnp":
        return gnp(n, p, seed)
    if kind == "even-union-of-cycles":
        return even_union_of_cycles(n, cycles, seed)
    if kind == "bipartite-plus-noise":
        return bipartite_plus_noise(n, p, noise, seed)
    if kind == "complete":
        return complete(n)
    if kind == "cycle":
        return cycle(n)
    if kind == "star":
        return star(n)
    if kind == "path":
        return path(n)
    raise GraphError(f"unknown generator kind {kind!r}")
