"""Shared test utilities: label rendering and definitional rechecks.

The rechecks here are deliberately naive (remove the arc, re-test the
property from scratch); they are the reference implementations the fast
per-arc scans are validated against.
"""
from __future__ import annotations

from twinblocks import (Digraph, GeneratorConfig, Partition, is_strongly_connected,
                        is_twinless_strongly_connected, random_digraph,
                        remove_arcs, twin_pairs)


def label_classes(g: Digraph, p: Partition) -> set[frozenset[str]]:
    return {frozenset(g.labels[v] for v in c) for c in p.classes}


def label_blocks(g: Digraph, bs) -> set[frozenset[str]]:
    return {frozenset(g.labels[v] for v in b) for b in bs.blocks}


def labels_of_arcs(g: Digraph, arc_ids) -> set[tuple[str, str]]:
    return {(g.labels[g.arcs[i].source], g.labels[g.arcs[i].target])
            for i in arc_ids}


def naive_strong_bridges(g: Digraph) -> frozenset[int]:
    return frozenset(
        a.arc_id for a in g.arcs
        if not is_strongly_connected(remove_arcs(g, {a.arc_id})))


def naive_twinless_bridges(g: Digraph) -> frozenset[int]:
    return frozenset(
        a.arc_id for a in g.arcs
        if not is_twinless_strongly_connected(remove_arcs(g, {a.arc_id})))


def closure_scc_partition(g: Digraph) -> Partition:
    """SCCs by brute-force transitive closure (bitset Floyd-Warshall)."""
    n = g.n
    rows = [1 << v for v in range(n)]
    for a in g.arcs:
        rows[a.source] |= 1 << a.target
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    class_of = []
    first: dict[tuple[int, int], int] = {}
    for v in range(n):
        # mutual reachability key: vertices v reaches that also reach v
        mutual = 0
        for w in range(n):
            if rows[v] >> w & 1 and rows[w] >> v & 1:
                mutual |= 1 << w
        key = (mutual, 0)
        if key not in first:
            first[key] = len(first)
        class_of.append(first[key])
    return Partition(class_of)


def tsc_instances(count: int, n_range=(3, 8), m_range=(3, 18),
                  max_twin_pairs: int = 8, seed_base: int = 0):
    """Deterministic stream of twinless strongly connected test graphs."""
    out = []
    seed = seed_base
    while len(out) < count:
        cfg = GeneratorConfig(n_range=n_range, m_range=m_range,
                              twin_density=(seed % 5) * 0.2,
                              seed=seed, shape="twinless-strongly-connected")
        g = random_digraph(cfg)
        seed += 1
        if len(twin_pairs(g)) <= max_twin_pairs:
            out.append(g)
    return out


def any_instances(count: int, n_range=(2, 8), m_range=(0, 16),
                  max_twin_pairs: int = 8, seed_base: int = 10_000):
    """Deterministic stream of arbitrary-shape test graphs."""
    out = []
    seed = seed_base
    while len(out) < count:
        cfg = GeneratorConfig(n_range=n_range, m_range=m_range,
                              twin_density=(seed % 4) * 0.25,
                              seed=seed, shape="any")
        g = random_digraph(cfg)
        seed += 1
        if len(twin_pairs(g)) <= max_twin_pairs:
            out.append(g)
    return out
