"""JSON / edge-list / DOT serialization for graphs, certificates, and reports.

Graph JSON:          {"vertices": ["a", "b"], "edges": [["a", "b"]]}
Certificate JSON:    {"base": <graph>, "steps": [{"target": ..., "side_a":
                     [...], "side_b": [...], "variant": ..., "descendant_a":
                     ..., "descendant_b": ...}, ...]}
Decomposition JSON:  {"family": "stars", "parts": [[["a","b"], ["b","c"]]]}

Descendant names may be omitted in certificate steps; they are then derived
deterministically while parsing, the same way the solvers name them.
Edge-list text has one "u v" pair per line and bare "u" for an isolated
vertex.  DOT is export-only.
"""
from __future__ import annotations

import json
from typing import Any

from .decomposition import Decomposition
from .errors import GraphError
from .graph import Graph
from .result import SolveResult
from .splits import SplitSequence, fresh_descendants, make_record
from .verify import CheckReport


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {
        "vertices": list(g.sorted_vertices),
        "edges": [list(e) for e in sorted(g.edges)],
    }


def graph_from_dict(data: Any) -> Graph:
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    verts = data.get("vertices", [])
    edges = data.get("edges", [])
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise GraphError("'vertices' and 'edges' must be lists")
    for v in verts:
        if not isinstance(v, str):
            raise GraphError(f"vertex {v!r} is not a string")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2):
            raise GraphError(f"edge {e!r} is not a pair")
        pairs.append((e[0], e[1]))
    return Graph.build(verts, pairs)


def graph_to_edgelist(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in sorted(g.edges)]
    lines.extend(g.isolated_vertices())
    return "\n".join(lines) + ("\n" if lines else "")


def graph_from_edgelist(text: str) -> Graph:
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            verts.append(tokens[0])
        elif len(tokens) == 2:
            edges.append((tokens[0], tokens[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v' or 'u'")
    return Graph.build(verts, edges)


def graph_to_dot(g: Graph, name: str = "G") -> str:
    def q(v: str) -> str:
        return '"' + v.replace('"', '\\"') + '"'

    lines = [f"graph {name} {{"]
    lines.extend(f"  {q(v)};" for v in g.isolated_vertices())
    lines.extend(f"  {q(u)} -- {q(v)};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def sequence_to_dict(s: SplitSequence) -> dict[str, Any]:
    return {
        "base": graph_to_dict(s.base),
        "steps": [
            {
                "target": r.target,
                "side_a": list(r.side_a),
                "side_b": list(r.side_b),
                "variant": r.variant,
                "descendant_a": r.descendant_a,
                "descendant_b": r.descendant_b,
            }
            for r in s.steps
        ],
    }


def sequence_from_dict(data: Any) -> SplitSequence:
    if not isinstance(data, dict) or "base" not in data:
        raise GraphError("certificate JSON must be an object with a 'base'")
    base = graph_from_dict(data["base"])
    steps = data.get("steps", [])
    if not isinstance(steps, list):
        raise GraphError("'steps' must be a list")
    used = set(base.vertices)
    records = []
    for i, step in enumerate(steps, 1):
        if not isinstance(step, dict):
            raise GraphError(f"step {i} is not an object")
        try:
            target = step["target"]
            side_a = step["side_a"]
            side_b = step["side_b"]
            variant = step["variant"]
        except KeyError as exc:
            raise GraphError(f"step {i} is missing {exc}") from None
        da = step.get("descendant_a")
        db = step.get("descendant_b")
        if da is None or db is None:
            da, db = fresh_descendants(target, used)
        used.update((da, db))
        records.append(make_record(target, side_a, side_b, variant, da, db))
    return SplitSequence(base, tuple(records))


def decomposition_to_dict(d: Decomposition) -> dict[str, Any]:
    return {
        "family": d.family,
        "parts": [[list(e) for e in sorted(part)] for part in d.parts],
    }


def decomposition_from_dict(host: Graph, data: Any) -> Decomposition:
    if not isinstance(data, dict) or "parts" not in data:
        raise GraphError("decomposition JSON must be an object with 'parts'")
    family = data.get("family")
    parts = data["parts"]
    if not isinstance(parts, list):
        raise GraphError("'parts' must be a list")
    return Decomposition.build(host, [[(e[0], e[1]) for e in part] for part in parts], family)


def result_to_dict(res: SolveResult) -> dict[str, Any]:
    return {
        "class": res.graph_class,
        "variant": res.variant,
        "feasible": res.feasible,
        "min_splits": res.min_splits,
        "certificate": None if res.certificate is None else sequence_to_dict(res.certificate),
        "provenance": list(res.provenance),
        "isolated_vertices": list(res.isolated_vertices),
        "reason": res.reason,
    }


def report_to_dict(report: CheckReport) -> dict[str, Any]:
    return {
        "valid": report.valid,
        "steps_checked": report.steps_checked,
        "violations": [{"step": i, "kind": k} for i, k in report.violations],
        "warnings": [{"step": i, "kind": k} for i, k in report.warnings],
        "final_class_membership": report.final_class_membership,
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
