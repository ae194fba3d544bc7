"""Factor structures.

A pseudo path factor is a subgraph whose components are all even paths
(both endpoints in Y) and in which every X vertex has degree exactly 2.
Y vertices of positive degree are "covered"; covered vertices are path
interiors or endpoints, uncovered ones are isolated.  A path factor is
the spanning special case: every Y vertex covered, which forces exactly
k vertex-disjoint paths on a (3,4)-biregular instance.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (Bigraph, EdgeSubgraph, Vertex, Y_SIDE,
                    components_as_paths, orient_path)


class PseudoPathFactor:
    """A pseudo path factor with an incrementally maintained path index.

    Per-vertex component lookup, the maximum path length and the count of
    components of length >= 4 are all O(1); the rewiring step updates them
    locally instead of re-decomposing the whole subgraph.
    """

    def __init__(self, graph: Bigraph, subgraph: EdgeSubgraph,
                 paths: Iterable[Sequence[Vertex]]):
        self.graph = graph
        self.subgraph = subgraph
        self._paths: dict[int, tuple[Vertex, ...]] = {}
        self._slot_of: dict[Vertex, int] = {}
        self._next_slot = 0
        self._len_counts: Counter[int] = Counter()
        self._long_count = 0  # components of length >= 4
        self._max_len = 0
        self.covered: set[Vertex] = set()
        for p in paths:
            self._insert_path(tuple(p))

    @classmethod
    def from_subgraph(cls, graph: Bigraph,
                      subgraph: EdgeSubgraph) -> "PseudoPathFactor":
        """Decompose and shape-check a subgraph.  Raises ValueError when
        some component is not an even path or some X degree is not 2."""
        dec = components_as_paths(subgraph)
        if not dec.ok:
            v = dec.violation
            raise ValueError(f"{v.kind} at {' '.join(map(str, v.vertices))}")
        for j in range(graph.x_count):
            if subgraph.x_deg[j] != 2:
                raise ValueError(
                    f"deg(x{j}) = {subgraph.x_deg[j]} in subgraph, want 2")
        for p in dec.paths:
            if len(p) % 2 == 0 or not (p[0].is_y and p[-1].is_y):
                raise ValueError(
                    f"component {' '.join(map(str, p))} is not an even path "
                    f"with both endpoints in Y")
        return cls(graph, subgraph, dec.paths)

    # -- path index maintenance -------------------------------------------

    def _insert_path(self, path: tuple[Vertex, ...]) -> None:
        slot = self._next_slot
        self._next_slot += 1
        self._paths[slot] = path
        for v in path:
            self._slot_of[v] = slot
            if v.side == Y_SIDE:
                self.covered.add(v)
        length = len(path) - 1
        self._len_counts[length] += 1
        if length >= 4:
            self._long_count += 1
        if length > self._max_len:
            self._max_len = length

    def _remove_slot(self, slot: int) -> tuple[Vertex, ...]:
        path = self._paths.pop(slot)
        for v in path:
            del self._slot_of[v]
        length = len(path) - 1
        self._len_counts[length] -= 1
        if self._len_counts[length] == 0:
            del self._len_counts[length]
            if length == self._max_len:
                self._max_len = max(self._len_counts, default=0)
        if length >= 4:
            self._long_count -= 1
        return path

    # -- queries ------------------------------------------------------------

    @property
    def paths(self) -> tuple[tuple[Vertex, ...], ...]:
        """All component paths, canonically oriented and sorted."""
        return tuple(sorted(self._paths.values()))

    def component_path_at(self, v: Vertex) -> tuple[Vertex, ...] | None:
        slot = self._slot_of.get(v)
        return None if slot is None else self._paths[slot]

    def component_length_at(self, v: Vertex) -> int:
        """Edge count of v's component; 0 for an isolated vertex."""
        slot = self._slot_of.get(v)
        return 0 if slot is None else len(self._paths[slot]) - 1

    @property
    def max_path_length(self) -> int:
        return self._max_len

    @property
    def long_component_count(self) -> int:
        return self._long_count

    @property
    def path_count(self) -> int:
        return len(self._paths)

    def uncovered_ys(self) -> list[Vertex]:
        return [Vertex.y(i) for i in range(self.graph.y_count)
                if self.subgraph.y_deg[i] == 0]

    def copy(self) -> "PseudoPathFactor":
        dup = PseudoPathFactor.__new__(PseudoPathFactor)
        dup.graph = self.graph
        dup.subgraph = self.subgraph.copy()
        dup._paths = dict(self._paths)
        dup._slot_of = dict(self._slot_of)
        dup._next_slot = self._next_slot
        dup._len_counts = Counter(self._len_counts)
        dup._long_count = self._long_count
        dup._max_len = self._max_len
        dup.covered = set(self.covered)
        return dup

    def __repr__(self) -> str:
        return (f"PseudoPathFactor({self.path_count} paths, "
                f"{len(self.covered)}/{self.graph.y_count} Y covered, "
                f"max length {self._max_len})")


@dataclass(frozen=True)
class AugmentingTrail:
    """An alternating trail y0, x1, y1, ..., x_{i+1}, y_{i+1}.

    Edges at even positions (y_{j-1} to x_j) lie outside the factor, edges
    at odd positions (x_j to y_j) inside it.  X vertices may repeat along
    the trail; Y vertices may not.  Rewiring swaps the two edge sets,
    which absorbs the uncovered origin y0.
    """

    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        n = len(self.vertices)
        if n < 3 or n % 2 == 0:
            raise ValueError(f"trail needs odd length >= 3, got {n} vertices")
        for t, v in enumerate(self.vertices):
            if v.is_y != (t % 2 == 0):
                raise ValueError(f"trail does not alternate sides at {v}")

    @property
    def intermediate_count(self) -> int:
        """Number of intermediate Y vertices (the i in y_i)."""
        return (len(self.vertices) - 3) // 2

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def non_factor_edges(self) -> list[tuple[Vertex, Vertex]]:
        """The y_{j-1} x_j edges, outside the factor before rewiring."""
        return self.edges()[0::2]

    def factor_edges(self) -> list[tuple[Vertex, Vertex]]:
        """The x_j y_j edges, inside the factor before rewiring."""
        return self.edges()[1::2]

    def __repr__(self) -> str:
        return "AugmentingTrail(" + " ".join(map(str, self.vertices)) + ")"


@dataclass(frozen=True)
class PathFactor:
    """Vertex-disjoint even paths spanning the graph, endpoints in Y."""

    graph: Bigraph
    paths: tuple[tuple[Vertex, ...], ...]

    @classmethod
    def from_pseudo(cls, factor: PseudoPathFactor) -> "PathFactor":
        uncovered = factor.uncovered_ys()
        if uncovered:
            raise ValueError(
                f"not spanning: {' '.join(map(str, uncovered))} uncovered")
        return cls(factor.graph, factor.paths)

    def lengths(self) -> tuple[int, ...]:
        """Path edge counts, ascending."""
        return tuple(sorted(len(p) - 1 for p in self.paths))

    def canonical(self) -> tuple[tuple[Vertex, ...], ...]:
        return tuple(sorted(orient_path(p) for p in self.paths))
