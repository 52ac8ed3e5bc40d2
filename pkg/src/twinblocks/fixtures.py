"""Canonical test fixtures.

These small graphs anchor the unit and acceptance suites:

  C3        directed 3-cycle 1 -> 2 -> 3 -> 1
  P2        the antiparallel pair 1 <-> 2
  K3B       complete bidirected triangle on {a, b, c} (all 6 arcs)
  G_DEMO19  19-vertex twinless strongly connected showcase graph with
            2-edge blocks {2,5,7} and {12,18} and 2-edge-twinless blocks
            {2,5} and {12,18}: removing arc (3,8) separates 7 from the
            others in the twinless sense but not in the strong sense
  G_GADGET  6-vertex graph whose single twinless bridge (p,q) is also a
            strong bridge; it stresses the refinement algorithm's
            strong-bridge skip, which is only sound on graphs without
            strong bridges
"""
from __future__ import annotations

from .core import Digraph

C3 = Digraph.from_label_pairs([("1", "2"), ("2", "3"), ("3", "1")])

P2 = Digraph.from_label_pairs([("1", "2"), ("2", "1")])

K3B = Digraph.from_label_pairs([
    ("a", "b"), ("b", "a"),
    ("b", "c"), ("c", "b"),
    ("a", "c"), ("c", "a"),
])

_DEMO19_ARCS = [
    (2, 5), (15, 3), (2, 1), (7, 3), (5, 7), (5, 9), (7, 5), (9, 2),
    (8, 4), (4, 6), (2, 15), (10, 7), (3, 8), (6, 2), (8, 10), (1, 12),
    (12, 2), (18, 17), (12, 19), (12, 16), (13, 12), (16, 18), (18, 14),
    (14, 13), (17, 12), (19, 11), (11, 18),
]

G_DEMO19 = Digraph.from_label_pairs(
    [(str(a), str(b)) for a, b in _DEMO19_ARCS])

DEMO19_EDGE_TEXT = "\n".join(f"{a} {b}" for a, b in _DEMO19_ARCS)

G_GADGET = Digraph.from_label_pairs([
    ("x", "a"), ("a", "b"), ("b", "y"), ("y", "b"), ("b", "a"), ("a", "x"),
    ("x", "p"), ("p", "q"), ("q", "y"), ("y", "p"), ("q", "x"),
])
