"""Strong, undirected, and twinless connectivity.

Twinless strongly connected components are computed per strongly connected
component as the 2-edge-connected components of its underlying undirected
graph: two vertices of a strongly connected graph admit mutually inverse
paths whose union avoids every antiparallel pair exactly when no single
undirected bridge separates them.  That characterization is easy to get
subtly wrong, so the test suite cross-checks it against the definition-level
orientation oracle on every generated instance; on any discrepancy the
oracle is ground truth and the mismatch must be reported, not patched.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (Digraph, PreconditionError, TwinPair, UndirectedGraph,
                   twin_arc_ids)
from .partition import Partition


def _scc_class_of(g: Digraph, skip: int = -1) -> list[int]:
    """Tarjan's algorithm, iterative; O(n + m).

    ``skip`` names an arc to traverse around, which computes the SCC
    classes of g minus that arc without rebuilding the graph.
    """
    n = g.n
    out = g.out_pairs
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    class_of = [-1] * n
    counter = 0
    comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, i = work[-1]
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            descended = False
            pairs = out[v]
            while i < len(pairs):
                w, aid = pairs[i]
                i += 1
                if aid == skip:
                    continue
                if index[w] == -1:
                    work[-1] = (v, i)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    class_of[w] = comp
                    if w == v:
                        break
                comp += 1
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return class_of


def strongly_connected_components(g: Digraph) -> Partition:
    """Maximal mutually-reachable vertex sets."""
    return Partition(_scc_class_of(g))


def _reaches_all(adj: tuple[tuple[tuple[int, int], ...], ...], n: int,
                 start: int) -> bool:
    seen = bytearray(n)
    seen[start] = 1
    frontier = [start]
    count = 1
    while frontier:
        nxt = []
        for u in frontier:
            for v, _aid in adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    nxt.append(v)
        frontier = nxt
    return count == n


def is_strongly_connected(g: Digraph) -> bool:
    """True iff the SCC partition has exactly one class; O(n + m)."""
    if g.n == 0:
        raise PreconditionError("empty graph")
    if g.n == 1:
        return True
    return (_reaches_all(g.out_pairs, g.n, 0)
            and _reaches_all(g.in_pairs, g.n, 0))


def connected_components(u: UndirectedGraph) -> Partition:
    class_of = [-1] * u.n
    comp = 0
    for root in range(u.n):
        if class_of[root] != -1:
            continue
        class_of[root] = comp
        frontier = [root]
        while frontier:
            x = frontier.pop()
            for y in u.adjacency[x]:
                if class_of[y] == -1:
                    class_of[y] = comp
                    frontier.append(y)
        comp += 1
    return Partition(class_of)


def bridges_undirected(u: UndirectedGraph) -> set[tuple[int, int]]:
    """Edges whose removal increases the component count (DFS low-link).

    The graph is simple, so skipping the parent vertex once per child is a
    sound substitute for skipping the traversal edge.
    """
    n = u.n
    adj = u.adjacency
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    bridges: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif w != parent[v] and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        bridges.add((p, v) if p < v else (v, p))
    return bridges


def two_edge_connected_components(u: UndirectedGraph) -> Partition:
    """Connected components after deleting all bridges."""
    cut = bridges_undirected(u)
    class_of = [-1] * u.n
    comp = 0
    for root in range(u.n):
        if class_of[root] != -1:
            continue
        class_of[root] = comp
        frontier = [root]
        while frontier:
            x = frontier.pop()
            for y in u.adjacency[x]:
                key = (x, y) if x < y else (y, x)
                if class_of[y] == -1 and key not in cut:
                    class_of[y] = comp
                    frontier.append(y)
        comp += 1
    return Partition(class_of)


def _tscc_class_of(g: Digraph, skip: int = -1) -> list[int]:
    """TSCC classes of g (minus the optional ``skip`` arc).

    Groups arcs by SCC class and runs the 2-edge-connected-component
    refinement inside each class, so the whole pass stays O(n + m).
    """
    scc_of = _scc_class_of(g, skip)
    num = max(scc_of) + 1 if scc_of else 0
    members: list[list[int]] = [[] for _ in range(num)]
    for v, c in enumerate(scc_of):
        members[c].append(v)
    edges_in: list[list[tuple[int, int]]] = [[] for _ in range(num)]
    for a in g.arcs:
        if a.arc_id == skip:
            continue
        c = scc_of[a.source]
        if c == scc_of[a.target]:
            edges_in[c].append((a.source, a.target))
    class_of = [-1] * g.n
    next_class = 0
    for c in range(num):
        verts = members[c]
        if len(verts) == 1:
            class_of[verts[0]] = next_class
            next_class += 1
            continue
        local = {v: i for i, v in enumerate(verts)}
        sub = UndirectedGraph(
            len(verts), ((local[a], local[b]) for a, b in edges_in[c]))
        p = two_edge_connected_components(sub)
        for i, v in enumerate(verts):
            class_of[v] = next_class + p.class_of[i]
        next_class += p.num_classes
    return class_of


def twinless_strongly_connected_components(g: Digraph) -> Partition:
    """TSCCs of an arbitrary digraph.

    Inside each SCC class the TSCC classes are the 2-edge-connected
    components of the underlying graph of the induced subgraph; singleton
    SCCs yield singleton TSCCs.
    """
    return Partition(_tscc_class_of(g))


def is_twinless_strongly_connected(g: Digraph) -> bool:
    """True iff g is strongly connected and its underlying graph is
    2-edge-connected (single TSCC class)."""
    if g.n == 0:
        raise PreconditionError("empty graph")
    if not is_strongly_connected(g):
        return False
    if g.n == 1:
        return True
    u = UndirectedGraph(g.n, ((a.source, a.target) for a in g.arcs))
    return not bridges_undirected(u)


@dataclass(frozen=True)
class CondensationTree:
    """TSCC classes of a strongly connected digraph, contracted.

    ``edges`` maps an unordered class-index pair to the antiparallel arc
    pairs crossing it.  For strongly connected inputs the contracted graph
    is a tree and every tree edge is crossed by at least one twin pair;
    both facts are recorded rather than assumed so tests can assert them.
    """

    nodes: tuple[tuple[int, ...], ...]
    edges: dict[tuple[int, int], tuple[TwinPair, ...]]
    is_tree: bool
    every_edge_twin_crossed: bool


def condensation_tscc(g: Digraph) -> CondensationTree:
    if not is_strongly_connected(g):
        raise PreconditionError("input is not strongly connected")
    p = twinless_strongly_connected_components(g)
    twin = twin_arc_ids(g)
    crossing: dict[tuple[int, int], list[TwinPair]] = {}
    for a in g.arcs:
        cu, cv = p.class_of[a.source], p.class_of[a.target]
        if cu == cv:
            continue
        key = (cu, cv) if cu < cv else (cv, cu)
        crossing.setdefault(key, [])
        rev = twin[a.arc_id]
        if rev > a.arc_id:
            crossing[key].append(TwinPair(a.arc_id, rev))
    k = p.num_classes
    # tree check: connected with exactly k-1 edges
    adj: list[list[int]] = [[] for _ in range(k)]
    for a, b in crossing:
        adj[a].append(b)
        adj[b].append(a)
    seen = bytearray(k)
    seen[0] = 1
    frontier = [0]
    count = 1
    while frontier:
        x = frontier.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = 1
                count += 1
                frontier.append(y)
    is_tree = count == k and len(crossing) == k - 1
    return CondensationTree(
        nodes=p.classes,
        edges={key: tuple(pairs) for key, pairs in sorted(crossing.items())},
        is_tree=is_tree,
        every_edge_twin_crossed=all(pairs for pairs in crossing.values()),
    )
