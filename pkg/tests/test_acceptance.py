"""Acceptance criteria.

One test per criterion, each printing an ``ACCEPTANCE <name>: PASS`` line
(visible with ``pytest -rA``).  Criterion 1 carries one strict-xfail
companion: the block sets the 19-vertex showcase graph was originally
documented with are contradicted by its own arc list.  The arc list is the
normative fixture here; the historical values are asserted verbatim in the
xfail test, and the independently verified values (definitional oracle plus
a max-flow cross-check) are asserted in the passing test.
"""
import json
import time

import pytest

from twinblocks import (GeneratorConfig, oracle_tscc,
                        oracle_two_edge_twinless_blocks, parse_edge_list,
                        random_digraph, remove_arcs, serialize,
                        strong_bridges, tetb_alg1_matrix, tetb_alg2_refine,
                        twinless_bridges,
                        twinless_strongly_connected_components,
                        two_edge_blocks, two_edge_twinless_blocks,
                        k_edge_twinless_blocks_bruteforce, partition_meet,
                        Partition, strongly_connected_components)
from twinblocks.cli import run
from twinblocks.fixtures import (C3, DEMO19_EDGE_TEXT, G_DEMO19, G_GADGET,
                                 K3B, P2)

from helpers import any_instances, label_blocks, label_classes, tsc_instances


def _report(name: str, note: str = "") -> None:
    suffix = f"  [{note}]" if note else ""
    print(f"ACCEPTANCE {name}: PASS{suffix}")


def test_criterion_1_showcase_reproduction():
    """Criterion 1: showcase fixture reproduced exactly in under 1 s."""
    started = time.perf_counter()
    g = parse_edge_list(DEMO19_EDGE_TEXT)
    assert g == G_DEMO19 and (g.n, g.m) == (19, 27)

    two_eb = label_blocks(g, two_edge_blocks(g))
    results = {
        "alg1": label_blocks(g, tetb_alg1_matrix(g)),
        "alg2-safe": label_blocks(g, tetb_alg2_refine(g, "safe")),
        "oracle": label_blocks(g, oracle_two_edge_twinless_blocks(g)),
    }
    # verified exact values for this arc list (definitional oracle plus an
    # independent max-flow cross-check; the historical sets are the xfail
    # companion below)
    assert two_eb == {frozenset({"2", "5", "7"}), frozenset({"12", "18"})}
    for name, got in results.items():
        assert got == {frozenset({"2", "5"}), frozenset({"12", "18"})}, name
    assert all(r == results["oracle"] for r in results.values())

    cut = g.arc_id(g.vertex("3"), g.vertex("8"))
    p = twinless_strongly_connected_components(remove_arcs(g, {cut}))
    assert not p.same_class(g.vertex("2"), g.vertex("7"))
    assert twinless_strongly_connected_components(g).num_classes == 1
    assert len(label_classes(g, twinless_strongly_connected_components(g))
               .pop()) == 19

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    _report("criterion-1 showcase reproduction", f"{elapsed:.2f}s")


@pytest.mark.xfail(
    strict=True,
    reason="the historically documented block sets contradict the fixture's "
           "own arc list: vertex 5 is 2-edge-connected to both 2 and 7 "
           "(lambda = 2 each way), so the blocks are {2,5,7}/{12,18} and the "
           "twinless blocks are {2,5}/{12,18}; verified by the definitional "
           "oracle and an independent max-flow check")
def test_criterion_1_historical_block_sets():
    """Criterion 1 (as stated): originally documented block sets."""
    g = parse_edge_list(DEMO19_EDGE_TEXT)
    assert label_blocks(g, two_edge_blocks(g)) == \
        {frozenset({"2", "7"}), frozenset({"12", "18"})}
    assert label_blocks(g, tetb_alg2_refine(g, "safe")) == \
        {frozenset({"12", "18"})}


def test_criterion_2_oracle_equivalence():
    """Criterion 2: >= 500 random TSC graphs, exact oracle equivalence."""
    started = time.perf_counter()
    graphs = tsc_instances(500, n_range=(3, 8), m_range=(3, 18),
                           max_twin_pairs=8)
    assert len(graphs) == 500
    for g in graphs:
        assert twinless_strongly_connected_components(g) == oracle_tscc(g)
        a1 = tetb_alg1_matrix(g)
        a2 = tetb_alg2_refine(g, "safe")
        orc = oracle_two_edge_twinless_blocks(g)
        assert a1 == a2 == orc
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _report("criterion-2 oracle equivalence",
            f"500 instances, {elapsed:.1f}s")


def test_criterion_3_hypothesis_gap_regression():
    """Criterion 3: the strong-bridge skip is unsound in general but exact
    on 2-edge-connected inputs."""
    oracle = oracle_two_edge_twinless_blocks(G_GADGET)
    safe = tetb_alg2_refine(G_GADGET, "safe")
    faithful = tetb_alg2_refine(G_GADGET, "faithful")
    assert safe == oracle
    assert not any({"x", "y"} <= b for b in label_blocks(G_GADGET, oracle))
    assert any({"x", "y"} <= b for b in label_blocks(G_GADGET, faithful))
    assert faithful != oracle

    checked = 0
    seed = 0
    while checked < 200:
        g = random_digraph(GeneratorConfig(
            n_range=(4, 8), m_range=(10, 24), twin_density=0.25,
            seed=seed, shape="twinless-strongly-connected"))
        seed += 1
        if strong_bridges(g):
            continue
        checked += 1
        assert tetb_alg2_refine(g, "faithful") == tetb_alg2_refine(g, "safe")
    _report("criterion-3 hypothesis-gap regression",
            f"gadget + {checked} bridge-free graphs")


def _all_arc_scc_meet(g) -> Partition:
    part = Partition.single_class(g.n)
    for a in g.arcs:
        part = partition_meet(
            part, strongly_connected_components(remove_arcs(g, {a.arc_id})))
    return part


def _all_arc_tscc_meet(g) -> Partition:
    part = twinless_strongly_connected_components(g)
    for a in g.arcs:
        part = partition_meet(
            part,
            twinless_strongly_connected_components(remove_arcs(g, {a.arc_id})))
    return part


def test_criterion_4_structural_properties():
    """Criterion 4: structural invariants over every generated graph."""
    tsc = tsc_instances(120, m_range=(3, 18))
    mixed = tsc + any_instances(80, m_range=(0, 16)) + \
        [C3, P2, K3B, G_DEMO19, G_GADGET]
    for g in mixed:
        tetb = two_edge_twinless_blocks(g)
        seen: set[int] = set()
        for b in tetb.blocks:  # disjoint
            assert not (b & seen)
            seen |= b
        tscc = twinless_strongly_connected_components(g)
        p2e = _all_arc_scc_meet(g)
        for b in tetb.blocks:
            assert len({tscc.class_of[v] for v in b}) == 1  # inside a TSCC
            assert len({p2e.class_of[v] for v in b}) == 1  # inside a 2eb
        assert k_edge_twinless_blocks_bruteforce(g, 2) == tetb

    for g in tsc:  # bridge invariants need the TSC precondition
        sb, tb = strong_bridges(g), twinless_bridges(g)
        assert sb <= tb
        assert len(tb) <= 2 * g.n - 2
        if g.n <= 8:  # meeting over all arcs never changes the result
            from twinblocks.blocks import BlockSet
            assert tetb_alg1_matrix(g) == \
                BlockSet.from_partition(_all_arc_tscc_meet(g))
    _report("criterion-4 structural properties",
            f"{len(mixed)} graphs, zero violations")


def test_criterion_5_performance_smoke(tmp_path):
    """Criterion 5: n=2000, m=10000 pipeline < 10 s; doubling m <= ~4x."""
    timings = {}
    for m in (10_000, 20_000):
        g = random_digraph(GeneratorConfig(
            n_range=(2000, 2000), m_range=(m, m), twin_density=0.1,
            seed=42, shape="twinless-strongly-connected"))
        path = tmp_path / f"perf_{m}.txt"
        path.write_text(serialize(g) + "\n", encoding="utf-8")
        started = time.perf_counter()
        code = run(["2etb", "--algorithm", "alg2-safe", "--input", str(path),
                    "--format", "json"])
        timings[m] = time.perf_counter() - started
        assert code == 0
    assert timings[10_000] < 10.0
    ratio = timings[20_000] / max(timings[10_000], 1e-3)
    assert ratio <= 4.0
    _report("criterion-5 performance smoke",
            f"m=10k: {timings[10_000]:.2f}s, m=20k: {timings[20_000]:.2f}s, "
            f"ratio {ratio:.2f}")


def _strip_elapsed(payload: str) -> dict:
    doc = json.loads(payload)
    doc.pop("elapsed_ms", None)
    return doc


def test_criterion_6_determinism(tmp_path, capsys):
    """Criterion 6: byte-identical JSON (modulo elapsed_ms) on repeat runs,
    including under --threads 4."""
    fixtures = {
        "demo19": DEMO19_EDGE_TEXT,
        "c3": serialize(C3),
        "p2": serialize(P2),
        "k3b": serialize(K3B),
        "gadget": serialize(G_GADGET),
    }
    commands = [
        ["scc"], ["tscc"], ["strong-bridges"], ["twinless-bridges"],
        ["2-edge-blocks"], ["2etb", "--algorithm", "alg1"],
        ["2etb", "--algorithm", "alg2-safe"],
        ["2etb", "--algorithm", "alg2-faithful"],
        ["2etb", "--algorithm", "oracle"], ["ketb", "--k", "2"],
        ["2etb", "--algorithm", "alg2-safe", "--threads", "4"],
        ["strong-bridges", "--threads", "4"],
    ]
    runs = 0
    for name, text in fixtures.items():
        path = tmp_path / f"{name}.txt"
        path.write_text(text + "\n", encoding="utf-8")
        for argv in commands:
            outcomes = []
            for _ in range(2):
                code = run(argv + ["--input", str(path), "--format", "json"])
                captured = capsys.readouterr()
                if code == 0:
                    outcomes.append((code, _strip_elapsed(captured.out)))
                else:
                    outcomes.append((code, captured.err))
            assert outcomes[0] == outcomes[1], (name, argv)
            runs += 1
    # gen is seeded, so it must be byte-identical without any stripping
    gen_args = ["gen", "--n", "50", "--m", "180", "--seed", "5",
                "--shape", "twinless-strongly-connected"]
    outs = []
    for _ in range(2):
        assert run(gen_args) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    _report("criterion-6 determinism",
            f"{runs} command/fixture pairs plus gen")
