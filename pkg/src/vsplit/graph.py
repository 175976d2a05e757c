"""Immutable simple graphs, a small multigraph, and target-class membership."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import GraphError

CONSTELLATION = "constellation"
CYCLE_GRAPH = "cycle-graph"
LINEAR_FOREST = "linear-forest"
BIPARTITE = "bipartite"
GRAPH_CLASSES = (CONSTELLATION, CYCLE_GRAPH, LINEAR_FOREST, BIPARTITE)


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Canonical form of an undirected edge: both endpoints, ascending."""
    if u == v:
        raise GraphError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with string vertex labels.

    Instances are immutable; every operation that changes the graph returns a
    new one.  Edges are stored canonically (endpoints ascending), so two graphs
    compare equal exactly when they have the same vertices and edges.
    """

    vertices: frozenset[str]
    edges: frozenset[tuple[str, str]]

    @staticmethod
    def build(vertices: Iterable[str] = (), edges: Iterable = ()) -> "Graph":
        """Construct a graph; edge endpoints are added to the vertex set."""
        es = frozenset(edge_key(u, v) for u, v in edges)
        vs = frozenset(vertices) | {x for e in es for x in e}
        return Graph(vs, es)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices))

    @cached_property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        if u == v:
            return False
        return edge_key(u, v) in self.edges

    def isolated_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.sorted_vertices if not self.adjacency[v])

    def subgraph(self, keep: Iterable[str]) -> "Graph":
        """Induced subgraph on the given vertices."""
        ks = frozenset(keep)
        unknown = ks - self.vertices
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)}")
        return Graph(ks, frozenset(e for e in self.edges if e[0] in ks and e[1] in ks))

    def without_vertices(self, drop: Iterable[str]) -> "Graph":
        return self.subgraph(self.vertices - frozenset(drop))


def components(g: Graph) -> list[Graph]:
    """Connected components as induced subgraphs, ordered by smallest vertex."""
    out = []
    seen: set[str] = set()
    for start in g.sorted_vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(g.subgraph(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def two_coloring(g: Graph) -> tuple[frozenset[str], frozenset[str]] | None:
    """A proper 2-coloring (side containing each component's smallest vertex
    first), or None if some component carries an odd cycle."""
    color: dict[str, int] = {}
    for start in g.sorted_vertices:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = frozenset(v for v, c in color.items() if c == 0)
    return side0, g.vertices - side0


def _component_vertex_sets(g: Graph) -> list[set[str]]:
    comps = []
    seen: set[str] = set()
    for start in g.sorted_vertices:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def is_member(g: Graph, graph_class: str, *, strict_paths: bool = False) -> bool:
    """Whether g belongs to the given target class.

    For "linear-forest" the default is lenient: single-vertex components count
    as (trivial) paths.  Pass strict_paths=True to require every component to
    have at least one edge.
    """
    if graph_class == BIPARTITE:
        return two_coloring(g) is not None
    if graph_class not in GRAPH_CLASSES:
        raise GraphError(f"unknown graph class {graph_class!r}")
    for comp in _component_vertex_sets(g):
        nc = len(comp)
        degs = [len(g.adjacency[v]) for v in comp]
        mc = sum(degs) // 2
        if graph_class == CONSTELLATION:
            # a star: spanning center vertex, no other edges
            if not (mc == nc - 1 and (nc == 1 or max(degs) == nc - 1)):
                return False
        elif graph_class == CYCLE_GRAPH:
            if any(d != 2 for d in degs):
                return False
        elif graph_class == LINEAR_FOREST:
            if not (mc == nc - 1 and max(degs) <= 2):
                return False
            if strict_paths and nc < 2:
                return False
    return True


class Multigraph:
    """A small mutable multigraph, used to assemble covering closed walks."""

    def __init__(self, vertices: Iterable[str] = ()):
        self._adj: dict[str, Counter[str]] = {v: Counter() for v in vertices}

    def add_vertex(self, v: str) -> None:
        self._adj.setdefault(v, Counter())

    def add_edge(self, u: str, v: str, copies: int = 1) -> None:
        if u == v:
            raise GraphError(f"self-loop at {u!r}")
        self.add_vertex(u)
        self.add_vertex(v)
        self._adj[u][v] += copies
        self._adj[v][u] += copies

    def degree(self, v: str) -> int:
        return sum(self._adj[v].values())

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in self._adj) // 2

    def vertices(self) -> list[str]:
        return sorted(self._adj)

    def euler_circuit(self, start: str | None = None) -> list[str]:
        """A closed walk using every edge copy exactly once (Hierholzer).

        Requires every degree to be even and all edges to sit in one connected
        block containing `start`.  Neighbors are consumed in sorted order, so
        the result is deterministic.
        """
        if self.edge_count() == 0:
            raise GraphError("multigraph has no edges")
        for v in self._adj:
            if self.degree(v) % 2:
                raise GraphError(f"odd degree at {v!r}")
        if start is None:
            start = min(v for v in self._adj if self.degree(v) > 0)
        adj = {v: Counter(c) for v, c in self._adj.items()}
        stack = [start]
        circuit: list[str] = []
        while stack:
            v = stack[-1]
            nbrs = adj[v]
            nxt = min((w for w, c in nbrs.items() if c > 0), default=None)
            if nxt is None:
                circuit.append(stack.pop())
            else:
                nbrs[nxt] -= 1
                adj[nxt][v] -= 1
                stack.append(nxt)
        circuit.reverse()
        if len(circuit) != self.edge_count() + 1:
            raise GraphError("multigraph edges are not connected")
        return circuit
