"""Acceptance suite: one test per shipping criterion.

Each test records a single PASS/FAIL line (with its runtime) that the
shared terminal-summary hook prints after the run.  All checks are exact;
the timings are informational only.
"""
import random
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

import conftest

import vsplit
from shapes import BOWTIE, C5, EDGE, K4, K13, P3, P5, TRIANGLE, graph
from vsplit.bipartite import exact_oct, oct_to_splits
from vsplit.constellation import (
    exact_vertex_cover,
    star_decomposition_to_vc,
    vc_to_star_decomposition,
)
from vsplit.cyclegraph import cycle_decomposition
from vsplit.decomposition import (
    decomposition_to_splits,
    desplit_step,
    validate_and_weigh,
)
from vsplit.errors import OracleExceeded
from vsplit.generate import bipartite_plus_noise, even_union_of_cycles, gnp
from vsplit.graph import (
    BIPARTITE,
    CONSTELLATION,
    CYCLE_GRAPH,
    GRAPH_CLASSES,
    LINEAR_FOREST,
    Graph,
    components,
    is_member,
)
from vsplit.linearforest import exclusivize_sequence
from vsplit.splits import EXCLUSIVE, INCLUSIVE, SplitSequence, apply_sequence, make_record
from vsplit.verify import brute_force_min_splits, canonical_key, check_certificate

K_MAX = 4
VARIANTS = (INCLUSIVE, EXCLUSIVE)


@contextmanager
def criterion(num, description):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        _report(num, description, "FAIL", time.perf_counter() - t0)
        raise
    _report(num, description, "PASS", time.perf_counter() - t0)


def _report(num, description, status, elapsed):
    line = f"CRITERION {num}: {status} - {description} ({elapsed:.1f}s)"
    print(line)
    conftest.CRITERION_LINES.append(line)


def _connected_graphs_up_to_iso(max_n):
    """One representative per isomorphism class of connected graphs."""
    reps = []
    for n in range(1, max_n + 1):
        labels = [f"v{i}" for i in range(n)]
        pairs = list(combinations(range(n), 2))
        seen = set()
        for bits in range(1 << len(pairs)):
            masks = [0] * n
            edges = []
            for t, (i, j) in enumerate(pairs):
                if bits >> t & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                    edges.append((labels[i], labels[j]))
            reach = 1
            frontier = 1
            while frontier:
                grown = reach
                for v in range(n):
                    if frontier >> v & 1:
                        grown |= masks[v]
                frontier = grown & ~reach
                reach = grown
            if reach != (1 << n) - 1:
                continue
            key = canonical_key(masks)
            if key in seen:
                continue
            seen.add(key)
            reps.append(Graph.build(labels, edges))
    return reps


def test_criterion_1_solver_matches_oracle_on_all_small_connected_graphs():
    with criterion(1, "solver = oracle on all connected graphs with n <= 5"):
        reps = _connected_graphs_up_to_iso(5)
        assert len(reps) == 31
        for g in reps:
            for cls in GRAPH_CLASSES:
                for variant in VARIANTS:
                    res = vsplit.solve(g, cls, variant)
                    if res.feasible and res.min_splits <= K_MAX:
                        assert (
                            brute_force_min_splits(g, cls, variant, K_MAX)
                            == res.min_splits
                        ), (sorted(g.edges), cls, variant)
                        report = check_certificate(g, res.certificate, variant, cls)
                        assert report.valid, (sorted(g.edges), cls, variant)
                    else:
                        with pytest.raises(OracleExceeded):
                            brute_force_min_splits(g, cls, variant, K_MAX)


def test_criterion_2_cycle_graph_exclusive_formula_on_even_unions():
    with criterion(2, "exclusive cycle-graph minimum is m - n on even unions"):
        for s in range(200):
            g = even_union_of_cycles(10 + (s * 7) % 51, 1 + s % 3, s)
            res = vsplit.solve(g, CYCLE_GRAPH, EXCLUSIVE)
            assert res.feasible and res.min_splits == g.m - g.n
            assert len(res.certificate.steps) == res.min_splits
            report = check_certificate(g, res.certificate, EXCLUSIVE, CYCLE_GRAPH)
            assert report.valid, report.violations
            pendant = Graph.build(
                g.vertices | {"pendant"},
                list(g.edges) + [(g.sorted_vertices[0], "pendant")],
            )
            assert not vsplit.solve(pendant, CYCLE_GRAPH, EXCLUSIVE).feasible


def test_criterion_3_cycle_graph_inclusive_fixed_points():
    with criterion(3, "inclusive cycle-graph minima on the four reference graphs"):
        for g, k in ((EDGE, 2), (P3, 1), (TRIANGLE, 0), (K4, 4)):
            res = vsplit.solve(g, CYCLE_GRAPH, INCLUSIVE)
            assert res.feasible and res.min_splits == k
            report = check_certificate(g, res.certificate, INCLUSIVE, CYCLE_GRAPH)
            assert report.valid, report.violations


def test_criterion_4_linear_forest_formula_and_component_counts():
    with criterion(4, "linear-forest minimum is m - n + sum(max(odd/2, 1))"):
        for g, k in ((TRIANGLE, 1), (K13, 1), (K4, 4), (P5, 0)):
            for variant in VARIANTS:
                assert vsplit.solve(g, LINEAR_FOREST, variant).min_splits == k
        done = 0
        s = 0
        while done < 200:
            s += 1
            n = 5 + (s * 7) % 56
            raw = gnp(n, (1.5 + s % 4) / n, s)
            core = raw.without_vertices(raw.isolated_vertices())
            if core.m == 0:
                continue
            done += 1
            expected = 0
            parts = 0
            for comp in components(core):
                odd = sum(1 for v in comp.vertices if comp.degree(v) % 2)
                t = max(odd // 2, 1)
                expected += comp.m - comp.n + t
                parts += t
            results = {v: vsplit.solve(core, LINEAR_FOREST, v) for v in VARIANTS}
            assert (
                results[INCLUSIVE].min_splits
                == results[EXCLUSIVE].min_splits
                == expected
            )
            for variant, res in results.items():
                assert len(res.certificate.steps) == expected
                report = check_certificate(core, res.certificate, variant, LINEAR_FOREST)
                assert report.valid, report.violations
            final = apply_sequence(results[EXCLUSIVE].certificate)
            assert is_member(final, LINEAR_FOREST)
            assert len(components(final)) == parts
            if done <= 20:
                seq = results[INCLUSIVE].certificate
                rewritten = exclusivize_sequence(core, seq)
                assert len(rewritten.steps) == len(seq.steps)
                assert is_member(apply_sequence(rewritten), LINEAR_FOREST)


def test_criterion_5_constellation_weights_and_cover_equivalence():
    with criterion(5, "constellation minimum is m + min-vertex-cover - n"):
        for g, k in ((TRIANGLE, 2), (BOWTIE, 4)):
            for variant in VARIANTS:
                assert vsplit.solve(g, CONSTELLATION, variant).min_splits == k
            assert brute_force_min_splits(g, CONSTELLATION, INCLUSIVE, K_MAX) == k
        done = 0
        s = 0
        while done < 100:
            s += 1
            n = 4 + (s * 13) % 27
            raw = gnp(n, (2.0 + s % 5) / n, s)
            core = raw.without_vertices(raw.isolated_vertices())
            if core.m == 0:
                continue
            done += 1
            vc = exact_vertex_cover(core)
            d = vc_to_star_decomposition(core, sorted(vc.cover))
            assert validate_and_weigh(d).total == core.m + vc.size
            centers = star_decomposition_to_vc(d).cover
            assert all(u in centers or v in centers for u, v in core.edges)
            expected = core.m + vc.size - core.n
            for variant in VARIANTS:
                res = vsplit.solve(raw, CONSTELLATION, variant)
                assert res.min_splits == expected
                report = check_certificate(raw, res.certificate, variant, CONSTELLATION)
                assert report.valid, report.violations


def _min_oct_size_by_subsets(g, cap):
    verts = g.sorted_vertices
    index = {v: i for i, v in enumerate(verts)}
    masks = [0] * g.n
    for u, v in g.edges:
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]

    def bipartite_without(removed):
        color = {}
        for start in range(g.n):
            if removed >> start & 1 or start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                nb = masks[v] & ~removed
                w = 0
                while nb:
                    if nb & 1:
                        if w not in color:
                            color[w] = 1 - color[v]
                            stack.append(w)
                        elif color[w] == color[v]:
                            return False
                    nb >>= 1
                    w += 1
        return True

    for size in range(cap + 1):
        for sub in combinations(range(g.n), size):
            if bipartite_without(sum(1 << i for i in sub)):
                return size
    return None


def test_criterion_6_bipartite_minimum_matches_subset_transversals():
    with criterion(6, "bipartite minimum = exhaustive odd-cycle-transversal size"):
        for g, k in ((C5, 1), (K4, 2)):
            for variant in VARIANTS:
                assert vsplit.solve(g, BIPARTITE, variant).min_splits == k
        for s in range(100):
            g = bipartite_plus_noise(6 + (s * 5) % 15, 0.35, s % 7, s)
            brute = _min_oct_size_by_subsets(g, 6)
            assert brute is not None
            o = exact_oct(g)
            assert len(o.deletion_set) == brute
            for variant in VARIANTS:
                assert vsplit.solve(g, BIPARTITE, variant).min_splits == brute
            seq = oct_to_splits(g, o)
            final = apply_sequence(seq)
            left = set(o.side_1) | {r.descendant_a for r in seq.steps}
            right = set(o.side_2) | {r.descendant_b for r in seq.steps}
            assert left | right == final.vertices and not left & right
            assert all((u in left) != (v in left) for u, v in final.edges)


def _certificate_battery():
    """(graph, certificate, variant, class) across every solver."""
    battery = []
    for s in range(25):
        raw = gnp(8, 0.35, s)
        core = raw.without_vertices(raw.isolated_vertices())
        for cls in (CONSTELLATION, LINEAR_FOREST, BIPARTITE):
            res = vsplit.solve(raw, cls, INCLUSIVE)
            battery.append((raw, res.certificate, INCLUSIVE, cls))
        if core.m:
            res = vsplit.solve(core, CYCLE_GRAPH, INCLUSIVE)
            battery.append((core, res.certificate, INCLUSIVE, CYCLE_GRAPH))
        even = even_union_of_cycles(9 + s % 8, 1 + s % 2, s)
        res = vsplit.solve(even, CYCLE_GRAPH, EXCLUSIVE)
        battery.append((even, res.certificate, EXCLUSIVE, CYCLE_GRAPH))
    return battery


def test_criterion_7_certificates_verify_and_mutations_fail():
    with criterion(7, "all emitted certificates verify; mutated ones do not"):
        battery = _certificate_battery()
        assert len(battery) >= 100
        for g, seq, variant, cls in battery:
            report = check_certificate(g, seq, variant, cls)
            assert report.valid and not report.violations, (cls, report.violations)
        rng = random.Random(20260823)
        mutable = [item for item in battery if item[1].steps]
        assert len(mutable) >= 50
        for g, seq, variant, cls in rng.sample(mutable, 50):
            i = rng.randrange(len(seq.steps))
            r = seq.steps[i]
            droppable = [x for x in r.side_a if x not in r.side_b]
            if droppable and rng.random() < 0.5:
                new_a = [x for x in r.side_a if x != droppable[0]]
            else:
                new_a = list(r.side_a) + [r.target]
            tampered = make_record(
                r.target, new_a, r.side_b, r.variant, r.descendant_a, r.descendant_b
            )
            mutated = SplitSequence(
                seq.base, seq.steps[:i] + (tampered,) + seq.steps[i + 1:]
            )
            report = check_certificate(g, mutated, variant, cls)
            assert not report.valid
            assert any(kind == "CoverageViolation" for _, kind in report.violations)


def test_criterion_8_desplitting_conserves_weight():
    with criterion(8, "desplits keep decomposition weight while adding a vertex"):
        decompositions = []
        s = 0
        while len(decompositions) < 50:
            s += 1
            raw = gnp(7 + s % 6, 0.4, s)
            core = raw.without_vertices(raw.isolated_vertices())
            if core.m == 0:
                continue
            cover = sorted(exact_vertex_cover(core).cover)
            decompositions.append(vc_to_star_decomposition(core, cover))
        for s in range(50):
            g = even_union_of_cycles(8 + s % 10, 1 + s % 3, 1000 + s)
            decompositions.append(cycle_decomposition(g))
        assert len(decompositions) == 100
        for d in decompositions:
            weight = validate_and_weigh(d).total
            chain = 0
            cur = d
            while True:
                step = desplit_step(cur)
                if step is None:
                    break
                chain += 1
                assert step.graph.n == cur.host.n + 1
                assert validate_and_weigh(step.decomposition).total == weight
                cur = step.decomposition
            assert chain == weight - d.host.n
            assert len(decomposition_to_splits(d).steps) == chain
