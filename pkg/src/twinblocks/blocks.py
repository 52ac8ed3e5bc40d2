"""2-edge blocks, 2-edge-twinless blocks, and the k-edge generalization.

Two vertices share a 2-edge block of a strongly connected graph iff no
single arc removal splits them into different strongly connected
components; they share a 2-edge-twinless block iff no single arc removal
splits them into different twinless strongly connected components.  Both
notions are computed by meeting per-removal partitions; only bridges can
split anything, so only bridges are iterated.

Two algorithms are provided for the twinless variant.  The matrix
transcription (``tetb_alg1_matrix``) marks separated pairs in an n-by-n
boolean table and reads blocks off as components of the never-separated
graph.  The refinement form (``tetb_alg2_refine``) starts from the 2-edge
blocks and refines with per-twinless-bridge partitions.  Its "faithful"
mode skips twinless bridges that are also strong bridges; that skip is only
sound on graphs without strong bridges, and the default "safe" mode
processes every twinless bridge (see the G_GADGET fixture for the
counterexample the test suite pins down).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (Digraph, GraphError, BudgetError, PreconditionError,
                   induced_subgraph, remove_arcs)
from .partition import Partition, partition_meet
from .connectivity import (_scc_class_of, _tscc_class_of,
                           is_twinless_strongly_connected,
                           twinless_strongly_connected_components)
from .cuts import _map_ordered, bridge_report, strong_bridges

MATRIX_VERTEX_BUDGET = 20_000
SUBSET_BUDGET = 10 ** 6

_ALGORITHMS = ("alg1", "alg2-safe", "alg2-faithful")


class SeparationMatrix:
    """n-by-n boolean table over vertex pairs, 1 until a removal separates.

    Rows are machine-word bitsets.  The diagonal never clears, and because
    every update intersects a row with the mask of the row's own partition
    class, the table stays symmetric.  The two-sided pair test (A[v,w] and
    A[w,v]) is realized as an explicit symmetry assertion before the
    component sweep wherever that scan is cheap; the sweep itself then
    reads single rows.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int):
        self.n = n
        self.rows = [(1 << n) - 1] * n

    def entry(self, v: int, w: int) -> bool:
        return bool(self.rows[v] >> w & 1)

    def separate_across(self, p: Partition) -> None:
        """Clear every pair that lands in distinct classes of p."""
        masks = [0] * p.num_classes
        for v in range(self.n):
            masks[p.class_of[v]] |= 1 << v
        rows = self.rows
        for v in range(self.n):
            rows[v] &= masks[p.class_of[v]]

    def assert_symmetric(self) -> None:
        rows = self.rows
        for v in range(self.n):
            f = rows[v]
            while f:
                low = f & -f
                w = low.bit_length() - 1
                f ^= low
                if not rows[w] >> v & 1:
                    raise GraphError("internal: separation matrix asymmetric")

    def never_separated_components(self) -> list[frozenset[int]]:
        """Connected components of the pair graph on {(v,w): A[v,w]=A[w,v]=1},
        size > 1 only."""
        rows = self.rows
        if self.n <= 1024:
            self.assert_symmetric()
        visited = 0
        out: list[frozenset[int]] = []
        for v in range(self.n):
            if visited >> v & 1:
                continue
            comp = 0
            frontier = 1 << v
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    w = low.bit_length() - 1
                    f ^= low
                    nxt |= rows[w]
                frontier = nxt & ~comp
            visited |= comp
            members = []
            f = comp
            while f:
                low = f & -f
                members.append(low.bit_length() - 1)
                f ^= low
            if len(members) > 1:
                out.append(frozenset(members))
        return out


@dataclass(frozen=True)
class BlockSet:
    """Pairwise disjoint vertex sets, each of size at least 2."""

    blocks: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        total = 0
        seen: set[int] = set()
        for b in self.blocks:
            if len(b) < 2:
                raise GraphError("block of size < 2")
            total += len(b)
            seen |= b
        if len(seen) != total:
            raise GraphError("blocks are not disjoint")

    @classmethod
    def from_partition(cls, p: Partition, min_size: int = 2) -> "BlockSet":
        return cls(frozenset(
            frozenset(c) for c in p.classes if len(c) >= min_size))

    def covered_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.blocks:
            out |= b
        return frozenset(out)

    def as_label_lists(self, g: Digraph) -> list[list[str]]:
        """Canonical rendering: labels ascending inside a block, blocks
        ascending by their first label."""
        rendered = [sorted(g.labels[v] for v in b) for b in self.blocks]
        return sorted(rendered)

    def as_label_sets(self, g: Digraph) -> frozenset[frozenset[str]]:
        return frozenset(
            frozenset(g.labels[v] for v in b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __repr__(self) -> str:
        return f"BlockSet({sorted(sorted(b) for b in self.blocks)})"


def _scc_after_removal(g: Digraph, aid: int) -> Partition:
    # traversal-level arc skip; same result as removing the arc outright
    return Partition(_scc_class_of(g, aid))


def _tscc_after_removal(g: Digraph, aid: int) -> Partition:
    return Partition(_tscc_class_of(g, aid))


def _two_edge_block_partition(g: Digraph, threads: int = 1,
                              bridges: frozenset[int] | None = None) -> Partition:
    """2-edge blocks as a partition, non-block vertices as singletons."""
    if bridges is None:
        bridges = strong_bridges(g, threads)
    part = Partition.single_class(g.n)
    for p in _map_ordered(lambda e: _scc_after_removal(g, e),
                          sorted(bridges), threads):
        part = partition_meet(part, p)
    return part


def two_edge_blocks(g: Digraph, threads: int = 1) -> BlockSet:
    """2-edge blocks of a strongly connected graph.

    Only strong bridges are iterated: removing any other arc leaves the
    graph strongly connected and cannot separate a pair.
    """
    return BlockSet.from_partition(_two_edge_block_partition(g, threads))


def tetb_alg1_matrix(g: Digraph, threads: int = 1) -> BlockSet:
    """2-edge-twinless blocks via the separation-matrix transcription.

    For each twinless bridge, every vertex pair landing in distinct
    twinless strongly connected components of the reduced graph is marked
    separated; blocks are the size->=2 components of the never-separated
    pair graph.  Rows are machine-word bitsets, so the marking pass costs
    O(n^2 / wordsize) per bridge.
    """
    if not is_twinless_strongly_connected(g):
        raise PreconditionError("input is not twinless strongly connected")
    if g.n > MATRIX_VERTEX_BUDGET:
        raise BudgetError(
            f"n={g.n} exceeds the n*n separation-matrix budget "
            f"({MATRIX_VERTEX_BUDGET}); use tetb_alg2_refine instead")
    rep = bridge_report(g, threads)
    if not rep.twinless_bridges:
        return BlockSet.from_partition(Partition.single_class(g.n))
    matrix = SeparationMatrix(g.n)
    for p in _map_ordered(lambda e: _tscc_after_removal(g, e),
                          sorted(rep.twinless_bridges), threads):
        matrix.separate_across(p)
    return BlockSet(frozenset(matrix.never_separated_components()))


def tetb_alg2_refine(g: Digraph, mode: str = "safe",
                     threads: int = 1) -> BlockSet:
    """2-edge-twinless blocks by refining the 2-edge blocks.

    mode="safe" refines with every twinless bridge; mode="faithful" skips
    twinless bridges that are also strong bridges.  The skip is exact only
    when the graph has no strong bridges, so safe is the default.
    """
    if mode not in ("safe", "faithful"):
        raise ValueError(f"unknown mode {mode!r}")
    rep = bridge_report(g, threads)
    if not rep.twinless_bridges:
        return BlockSet.from_partition(Partition.single_class(g.n))
    part = _two_edge_block_partition(g, threads, bridges=rep.strong_bridges)
    if mode == "faithful":
        refine = sorted(rep.twinless_bridges - rep.strong_bridges)
    else:
        refine = sorted(rep.twinless_bridges)
    for p in _map_ordered(lambda e: _tscc_after_removal(g, e),
                          refine, threads):
        part = partition_meet(part, p)
    return BlockSet.from_partition(part)


def two_edge_twinless_blocks(g: Digraph, algorithm: str = "alg2-safe",
                             threads: int = 1) -> BlockSet:
    """2-edge-twinless blocks of an arbitrary digraph.

    Pipeline: the blocks of a graph are the union of the blocks of its
    twinless strongly connected components, so each size->=2 component is
    analyzed in isolation with the chosen algorithm.
    """
    if algorithm not in _ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    tp = twinless_strongly_connected_components(g)
    out: list[frozenset[int]] = []
    for cls in tp.classes:
        if len(cls) < 2:
            continue
        sub = induced_subgraph(g, cls)
        back = sorted(cls)
        if algorithm == "alg1":
            found = tetb_alg1_matrix(sub, threads)
        else:
            found = tetb_alg2_refine(
                sub, "safe" if algorithm == "alg2-safe" else "faithful",
                threads)
        out.extend(frozenset(back[v] for v in b) for b in found.blocks)
    return BlockSet(frozenset(out))


def k_edge_twinless_blocks_bruteforce(g: Digraph, k: int) -> BlockSet:
    """Meet of the TSCC partitions of g minus L over all |L| <= k-1.

    Enumeration only; refuses when the subset count leaves the budget.
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    total = sum(math.comb(g.m, i) for i in range(k))
    if total > SUBSET_BUDGET:
        raise BudgetError(
            f"enumerating {total} arc subsets exceeds the budget "
            f"({SUBSET_BUDGET})")
    part = twinless_strongly_connected_components(g)
    ids = range(g.m)
    for size in range(1, k):
        for chosen in itertools.combinations(ids, size):
            part = partition_meet(
                part,
                twinless_strongly_connected_components(
                    remove_arcs(g, chosen)))
    return BlockSet.from_partition(part)
