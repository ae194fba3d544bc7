"""Disjoint-set structures backing the solver and the exhaustive oracle."""

from __future__ import annotations

from typing import Hashable


class PathForest:
    """Union-find over path components that tracks each path's two ends.

    add_edge(a, b) merges two distinct components and requires both
    vertices to be path ends, which is exactly the acyclicity-plus-shape
    check the factor construction needs.  Isolated vertices are created on
    first sight and count as paths of length zero (both ends themselves).
    """

    def __init__(self):
        self._parent: dict = {}
        self._size: dict = {}
        self._ends: dict = {}

    def _ensure(self, v) -> None:
        if v not in self._parent:
            self._parent[v] = v
            self._size[v] = 1
            self._ends[v] = (v, v)

    def find(self, v):
        self._ensure(v)
        parent = self._parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:  # path halving
            parent[v], v = root, parent[v]
        return root

    def connected(self, a, b) -> bool:
        return self.find(a) == self.find(b)

    def ends(self, v) -> tuple:
        return self._ends[self.find(v)]

    def add_edge(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            raise ValueError(f"edge {a}-{b} would close a cycle")
        ends_a, ends_b = self._ends[ra], self._ends[rb]
        if a not in ends_a or b not in ends_b:
            raise ValueError(f"edge {a}-{b} attaches to a path interior")
        new_ends = (ends_a[0] if ends_a[1] == a else ends_a[1],
                    ends_b[0] if ends_b[1] == b else ends_b[1])
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self._ends[ra] = new_ends
        del self._ends[rb]


class RollbackUnionFind:
    """Union by size without path compression, so unions can be undone in
    LIFO order.  Used by backtracking searches."""

    def __init__(self):
        self._parent: dict = {}
        self._size: dict = {}
        self._trail: list = []

    def _ensure(self, v) -> None:
        if v not in self._parent:
            self._parent[v] = v
            self._size[v] = 1

    def find(self, v: Hashable):
        self._ensure(v)
        while self._parent[v] != v:
            v = self._parent[v]
        return v

    def union(self, a, b) -> bool:
        """Merge the components of a and b; False iff already connected."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self._trail.append((ra, rb))
        return True

    def snapshot(self) -> int:
        return len(self._trail)

    def rollback(self, mark: int) -> None:
        while len(self._trail) > mark:
            ra, rb = self._trail.pop()
            self._parent[rb] = rb
            self._size[ra] -= self._size[rb]
