"""Disjoint vertex classes covering 0..n-1.

Class indices are normalized by first occurrence, so two partitions with the
same grouping compare equal regardless of how they were produced.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .core import GraphError


class Partition:
    __slots__ = ("n", "class_of", "_classes")

    def __init__(self, class_of: Sequence[int]):
        norm: dict[int, int] = {}
        canon = []
        for c in class_of:
            if c not in norm:
                norm[c] = len(norm)
            canon.append(norm[c])
        self.n = len(canon)
        self.class_of = tuple(canon)
        self._classes: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def single_class(cls, n: int) -> "Partition":
        return cls([0] * n)

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Partition":
        class_of = [-1] * n
        for idx, members in enumerate(classes):
            for v in members:
                if class_of[v] != -1:
                    raise GraphError(f"vertex {v} appears in two classes")
                class_of[v] = idx
        if any(c == -1 for c in class_of):
            raise GraphError("classes do not cover the vertex set")
        return cls(class_of)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes in canonical order; members ascending."""
        if self._classes is None:
            buckets: list[list[int]] = [[] for _ in range(self.num_classes)]
            for v, c in enumerate(self.class_of):
                buckets[c].append(v)
            self._classes = tuple(tuple(b) for b in buckets)
        return self._classes

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def same_class(self, u: int, v: int) -> bool:
        return self.class_of[u] == self.class_of[v]

    def class_members(self, v: int) -> tuple[int, ...]:
        return self.classes[self.class_of[v]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.class_of == other.class_of

    def __hash__(self) -> int:
        return hash(self.class_of)

    def __repr__(self) -> str:
        return f"Partition({[list(c) for c in self.classes]})"


def partition_meet(p: Partition, q: Partition) -> Partition:
    """Coarsest partition refining both: u,v share a class iff they share
    one in p and in q."""
    if p.n != q.n:
        raise GraphError(f"universe mismatch: {p.n} != {q.n}")
    keys: dict[tuple[int, int], int] = {}
    out = []
    for v in range(p.n):
        k = (p.class_of[v], q.class_of[v])
        if k not in keys:
            keys[k] = len(keys)
        out.append(keys[k])
    return Partition(out)
