"""JSON, edge-list, and DOT serialization."""
import pytest

import vsplit
from shapes import BOWTIE, K4, P3, TRIANGLE, graph
from vsplit.cyclegraph import cycle_decomposition
from vsplit.errors import GraphError
from vsplit.graph import (
    BIPARTITE,
    CONSTELLATION,
    CYCLE_GRAPH,
    LINEAR_FOREST,
    Graph,
)
from vsplit.serialize import (
    decomposition_from_dict,
    decomposition_to_dict,
    dumps,
    graph_from_dict,
    graph_from_edgelist,
    graph_to_dict,
    graph_to_dot,
    graph_to_edgelist,
    report_to_dict,
    result_to_dict,
    sequence_from_dict,
    sequence_to_dict,
)
from vsplit.splits import EXCLUSIVE, INCLUSIVE
from vsplit.verify import check_certificate


class TestGraphJson:
    def test_dict_shape(self):
        assert graph_to_dict(P3) == {
            "vertices": ["a", "b", "c"],
            "edges": [["a", "b"], ["b", "c"]],
        }

    def test_round_trip(self):
        for g in (BOWTIE, K4, Graph.build(["z"]), Graph.build()):
            assert graph_from_dict(graph_to_dict(g)) == g

    def test_rejects_malformed_input(self):
        with pytest.raises(GraphError):
            graph_from_dict([1, 2])
        with pytest.raises(GraphError):
            graph_from_dict({"vertices": "abc", "edges": []})
        with pytest.raises(GraphError):
            graph_from_dict({"vertices": [1], "edges": []})
        with pytest.raises(GraphError):
            graph_from_dict({"vertices": [], "edges": [["a", "b", "c"]]})


class TestEdgelist:
    def test_writes_edges_then_isolated(self):
        g = graph(("b", "c"), ("a", "b"), vertices=["z"])
        assert graph_to_edgelist(g) == "a b\nb c\nz\n"

    def test_empty_graph(self):
        assert graph_to_edgelist(Graph.build()) == ""
        assert graph_from_edgelist("") == Graph.build()

    def test_round_trip(self):
        for g in (BOWTIE, graph(("a", "b"), vertices=["q", "z"])):
            assert graph_from_edgelist(graph_to_edgelist(g)) == g

    def test_comments_and_blank_lines(self):
        text = "# heading\n\na b\n  # indented comment\nz\n"
        assert graph_from_edgelist(text) == graph(("a", "b"), vertices=["z"])

    def test_rejects_wide_lines(self):
        with pytest.raises(GraphError, match="line 3"):
            graph_from_edgelist("a b\nb c\na b c\n")


class TestDot:
    def test_snapshot(self):
        g = graph(("a", "b"), ('we"ird', "x"), vertices=["lone"])
        assert graph_to_dot(g) == (
            "graph G {\n"
            '  "lone";\n'
            '  "a" -- "b";\n'
            '  "we\\"ird" -- "x";\n'
            "}\n"
        )

    def test_custom_name(self):
        assert graph_to_dot(Graph.build(), name="Empty") == "graph Empty {\n}\n"


class TestSequenceJson:
    def test_round_trip(self):
        seq = vsplit.solve(K4, LINEAR_FOREST, EXCLUSIVE).certificate
        parsed = sequence_from_dict(sequence_to_dict(seq))
        assert parsed.base == seq.base and parsed.steps == seq.steps

    def test_descendants_are_derived_when_omitted(self):
        seq = vsplit.solve(BOWTIE, CONSTELLATION, INCLUSIVE).certificate
        data = sequence_to_dict(seq)
        for step in data["steps"]:
            del step["descendant_a"], step["descendant_b"]
        parsed = sequence_from_dict(data)
        assert parsed.steps == seq.steps

    def test_rejects_malformed_input(self):
        with pytest.raises(GraphError, match="base"):
            sequence_from_dict({"steps": []})
        with pytest.raises(GraphError, match="step 1"):
            sequence_from_dict(
                {"base": graph_to_dict(P3), "steps": [{"target": "b"}]}
            )
        with pytest.raises(GraphError, match="list"):
            sequence_from_dict({"base": graph_to_dict(P3), "steps": 7})


class TestDecompositionJson:
    def test_round_trip(self):
        d = cycle_decomposition(BOWTIE)
        data = decomposition_to_dict(d)
        assert data["family"] == "cycles"
        back = decomposition_from_dict(BOWTIE, data)
        assert back.parts == d.parts and back.family == d.family

    def test_rejects_malformed_input(self):
        with pytest.raises(GraphError):
            decomposition_from_dict(BOWTIE, {"family": "cycles"})
        with pytest.raises(GraphError):
            decomposition_from_dict(BOWTIE, {"family": "cycles", "parts": 3})


class TestResultJson:
    def test_solved(self):
        res = vsplit.solve(TRIANGLE, CONSTELLATION, INCLUSIVE)
        data = result_to_dict(res)
        assert data["class"] == CONSTELLATION and data["variant"] == INCLUSIVE
        assert data["feasible"] is True and data["min_splits"] == 2
        assert data["provenance"] == ["desplit", "desplit"]
        assert data["reason"] is None
        assert len(data["certificate"]["steps"]) == 2

    def test_infeasible(self):
        res = vsplit.solve(P3, CYCLE_GRAPH, EXCLUSIVE)
        data = result_to_dict(res)
        assert data["feasible"] is False
        assert data["min_splits"] is None and data["certificate"] is None
        assert "odd degree" in data["reason"]


class TestReportJson:
    def test_shape(self):
        seq = vsplit.solve(TRIANGLE, BIPARTITE, INCLUSIVE).certificate
        report = check_certificate(TRIANGLE, seq, INCLUSIVE, BIPARTITE)
        data = report_to_dict(report)
        assert data == {
            "valid": True,
            "steps_checked": 1,
            "violations": [],
            "warnings": [],
            "final_class_membership": True,
        }

    def test_violations_are_objects(self):
        from vsplit.splits import SplitSequence, make_record

        r = make_record("b", ["a"], ["a"], INCLUSIVE, "b#1", "b#2")
        report = check_certificate(P3, SplitSequence(P3, (r,)), INCLUSIVE, CONSTELLATION)
        data = report_to_dict(report)
        assert data["violations"] == [{"step": 1, "kind": "CoverageViolation"}]


class TestDumps:
    def test_formatting(self):
        assert dumps({"b": 1, "a": [1, 2]}) == (
            '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
        )
