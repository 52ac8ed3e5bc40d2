"""Directed graph data model.

Vertices are dense integer ids ``0..n-1``; every vertex carries an external
string label (the token it was parsed from).  All algorithms work on ids,
reports translate back to labels.  Graphs are immutable after construction:
arc removal and induced subgraphs build new values, which makes per-arc
analysis trivially safe to run concurrently.

Simple digraphs only: self-loops are rejected everywhere, duplicate arcs are
rejected in strict parsing mode (antiparallel-pair semantics are undefined
for parallel arcs).
"""
from __future__ import annotations

import warnings
from typing import Iterable, NamedTuple


class GraphError(Exception):
    """Base error for this package."""


class ParseError(GraphError):
    """Malformed edge-list input."""


class PreconditionError(GraphError):
    """An operation was called on an input outside its contract."""


class BudgetError(PreconditionError):
    """An enumeration or memory budget would be exceeded."""


class Arc(NamedTuple):
    source: int
    target: int
    arc_id: int


class TwinPair(NamedTuple):
    """A pair of antiparallel arcs (u,v) and (v,u), named by arc id."""

    forward: int
    backward: int


class Digraph:
    """Immutable simple directed graph over dense vertex ids.

    Attributes (treat as read-only):
      n          vertex count
      m          arc count
      arcs       tuple of Arc, indexed by arc_id
      labels     tuple mapping vertex id -> label
      out_pairs  per-vertex tuple of (target, arc_id)
      in_pairs   per-vertex tuple of (source, arc_id)
    """

    __slots__ = ("n", "m", "arcs", "labels", "out_pairs", "in_pairs",
                 "_label_ids", "_arc_ids")

    def __init__(self, labels: Iterable[str], pairs: Iterable[tuple[int, int]]):
        labels = tuple(labels)
        n = len(labels)
        label_ids = {lab: v for v, lab in enumerate(labels)}
        if len(label_ids) != n:
            raise GraphError("labels are not unique")
        arcs = []
        arc_ids: dict[tuple[int, int], int] = {}
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u},{v}) references unknown vertex")
            if u == v:
                raise GraphError(f"self-loop at vertex {labels[u]!r}")
            if (u, v) in arc_ids:
                raise GraphError(
                    f"duplicate arc {labels[u]!r} -> {labels[v]!r}")
            arc_ids[(u, v)] = len(arcs)
            arcs.append(Arc(u, v, len(arcs)))
        out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for a in arcs:
            out[a.source].append((a.target, a.arc_id))
            inc[a.target].append((a.source, a.arc_id))
        self.n = n
        self.m = len(arcs)
        self.arcs = tuple(arcs)
        self.labels = labels
        self.out_pairs = tuple(tuple(x) for x in out)
        self.in_pairs = tuple(tuple(x) for x in inc)
        self._label_ids = label_ids
        self._arc_ids = arc_ids

    @classmethod
    def from_label_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "Digraph":
        """Build a digraph from (source label, target label) pairs.

        Labels are interned to dense ids in first-appearance order.
        """
        label_ids: dict[str, int] = {}
        id_pairs = []
        for a, b in pairs:
            for tok in (a, b):
                if tok not in label_ids:
                    label_ids[tok] = len(label_ids)
            id_pairs.append((label_ids[a], label_ids[b]))
        return cls(tuple(label_ids), id_pairs)

    def vertex(self, label: str) -> int:
        try:
            return self._label_ids[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arc_ids

    def arc_id(self, u: int, v: int) -> int:
        try:
            return self._arc_ids[(u, v)]
        except KeyError:
            raise GraphError(f"no arc ({u},{v})") from None

    def arc_label_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset(
            (self.labels[a.source], self.labels[a.target]) for a in self.arcs)

    def __eq__(self, other: object) -> bool:
        """Semantic equality: same label set and same arcs by label."""
        if not isinstance(other, Digraph):
            return NotImplemented
        return (set(self.labels) == set(other.labels)
                and self.arc_label_pairs() == other.arc_label_pairs())

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Multiplicity-collapsed undirected graph: at most one edge per pair.

    Edges are stored as (a, b) tuples with a < b.  Adjacency lists are
    sorted, so traversal orders are deterministic.
    """

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        norm = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a},{b}) references unknown vertex")
            if a == b:
                raise GraphError(f"self-edge at vertex {a}")
            norm.add((a, b) if a < b else (b, a))
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in norm:
            adj[a].append(b)
            adj[b].append(a)
        self.n = n
        self.edges = frozenset(norm)
        self.adjacency = tuple(tuple(sorted(x)) for x in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={len(self.edges)})"


def parse_edge_list(text: str, mode: str = "strict") -> Digraph:
    """Parse edge-list text into a Digraph.

    Format: UTF-8 text, ``#`` starts a comment to end of line, blank lines
    are ignored, and each arc line is ``SOURCE TARGET`` (two whitespace
    separated tokens).  Labels are interned in first-appearance order.

    In strict mode duplicate arcs are errors; in lenient mode they are
    dropped with a warning carrying the drop count.  Self-loops and
    malformed lines are errors in both modes.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"unknown parse mode {mode!r}")
    label_ids: dict[str, int] = {}
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    dropped = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected 2 tokens, got {len(tokens)}")
        a, b = tokens
        if a == b:
            raise ParseError(f"line {lineno}: self-loop at {a!r}")
        for tok in (a, b):
            if tok not in label_ids:
                label_ids[tok] = len(label_ids)
        uv = (label_ids[a], label_ids[b])
        if uv in seen:
            if mode == "strict":
                raise ParseError(f"line {lineno}: duplicate arc {a!r} -> {b!r}")
            dropped += 1
            continue
        seen.add(uv)
        pairs.append(uv)
    if dropped:
        warnings.warn(f"dropped {dropped} duplicate arc(s)", stacklevel=2)
    return Digraph(tuple(label_ids), pairs)


def serialize(g: Digraph) -> str:
    """Canonical edge-list text: arcs sorted by (source label, target label).

    ``parse_edge_list(serialize(g))`` reproduces the graph up to arc order.
    """
    lines = sorted(
        (g.labels[a.source], g.labels[a.target]) for a in g.arcs)
    return "\n".join(f"{s} {t}" for s, t in lines)


def twin_arc_ids(g: Digraph) -> list[int]:
    """Map each arc id to the id of its antiparallel twin, or -1."""
    twin = [-1] * g.m
    for a in g.arcs:
        rev = g._arc_ids.get((a.target, a.source))
        if rev is not None:
            twin[a.arc_id] = rev
    return twin


def twin_pairs(g: Digraph) -> frozenset[TwinPair]:
    """All antiparallel arc pairs of g; each arc occurs in at most one pair."""
    twin = twin_arc_ids(g)
    return frozenset(
        TwinPair(aid, twin[aid])
        for aid in range(g.m)
        if twin[aid] > aid)


def remove_arcs(g: Digraph, drop: Iterable[int]) -> Digraph:
    """A new digraph with the same vertex set and the given arcs removed."""
    drop = set(drop)
    for aid in drop:
        if not (isinstance(aid, int) and 0 <= aid < g.m):
            raise GraphError(f"unknown arc id {aid!r}")
    kept = [(a.source, a.target) for a in g.arcs if a.arc_id not in drop]
    return Digraph(g.labels, kept)


def underlying_graph(g: Digraph) -> UndirectedGraph:
    """The undirected image of g: one edge per adjacent unordered pair."""
    return UndirectedGraph(g.n, ((a.source, a.target) for a in g.arcs))


def induced_subgraph(g: Digraph, keep: Iterable[int]) -> Digraph:
    """Subgraph on ``keep`` with both-endpoint arcs; labels are preserved.

    New ids follow ascending original id order, so the mapping back to the
    parent graph is ``sorted(keep)``.
    """
    keep = set(keep)
    for v in keep:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphError(f"unknown vertex id {v!r}")
    order = sorted(keep)
    new_id = {v: i for i, v in enumerate(order)}
    pairs = [(new_id[a.source], new_id[a.target])
             for a in g.arcs
             if a.source in keep and a.target in keep]
    return Digraph(tuple(g.labels[v] for v in order), pairs)
