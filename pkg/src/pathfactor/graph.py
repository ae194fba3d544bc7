"""Core graph types and file I/O.

A bigraph here is a bipartite multigraph with parts Y and X; every edge
joins a Y vertex to an X vertex, so the representation is loop-free and
bipartite by construction.  In the (3,4)-biregular case each Y vertex has
degree 3 and each X vertex degree 4, which forces |Y| = 4k, |X| = 3k and
|E| = 12k for some positive integer k.

Vertices are positional: the i-th Y vertex renders as ``y<i>`` and the
j-th X vertex as ``x<j>``.  Edges are stored as (y_index, x_index)
occurrence pairs in canonically sorted order, so parallel edges of a
multigraph are distinguishable by their occurrence id.

The text format for graphs mirrors DIMACS: ``c`` comment lines, one
``p bbg <y_count> <x_count> <edge_count>`` header, then one
``e y<i> x<j>`` line per edge occurrence.  A repeated edge line encodes
multiplicity.  Factor files carry one path per line as space-separated
vertex names; ``c`` comments are allowed there as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .errors import GraphFormatError, NotBiregularError

Y_SIDE = 0
X_SIDE = 1


class Vertex(NamedTuple):
    """A side-tagged vertex.  Ordering is all of Y before all of X, then by
    index, which is the canonical vertex order used everywhere."""

    side: int
    index: int

    @classmethod
    def y(cls, index: int) -> "Vertex":
        return cls(Y_SIDE, index)

    @classmethod
    def x(cls, index: int) -> "Vertex":
        return cls(X_SIDE, index)

    @classmethod
    def parse(cls, token: str) -> "Vertex":
        side = {"y": Y_SIDE, "x": X_SIDE}.get(token[:1])
        if side is None or not token[1:].isdigit():
            raise GraphFormatError(f"malformed vertex token {token!r}")
        return cls(side, int(token[1:]))

    @property
    def is_y(self) -> bool:
        return self.side == Y_SIDE

    def __repr__(self) -> str:
        return f"{'yx'[self.side]}{self.index}"

    __str__ = __repr__


class Bigraph:
    """Immutable bipartite multigraph with parts Y and X.

    The edge list is canonically sorted at construction; an edge's position
    in ``edges`` is its stable occurrence id.  ``simple`` is true iff no
    (y, x) pair repeats.  Instances never change after construction and are
    safe to share across threads.
    """

    __slots__ = ("y_count", "x_count", "edges", "simple",
                 "_y_inc", "_x_inc", "_y_deg", "_x_deg")

    def __init__(self, y_count: int, x_count: int,
                 edges: Iterable[tuple[int, int]]):
        if y_count < 1 or x_count < 1:
            raise ValueError("vertex counts must be positive")
        canon = sorted((int(y), int(x)) for y, x in edges)
        for y, x in canon:
            if not (0 <= y < y_count and 0 <= x < x_count):
                raise ValueError(f"edge (y{y}, x{x}) out of range")
        self.y_count = y_count
        self.x_count = x_count
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        self.simple = all(a != b for a, b in zip(canon, canon[1:]))
        y_inc: list[list[int]] = [[] for _ in range(y_count)]
        x_inc: list[list[int]] = [[] for _ in range(x_count)]
        for eid, (y, x) in enumerate(canon):
            y_inc[y].append(eid)
            x_inc[x].append(eid)
        self._y_inc = tuple(tuple(ids) for ids in y_inc)
        self._x_inc = tuple(tuple(ids) for ids in x_inc)
        self._y_deg = tuple(len(ids) for ids in y_inc)
        self._x_deg = tuple(len(ids) for ids in x_inc)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: Vertex) -> int:
        return (self._y_deg if v.side == Y_SIDE else self._x_deg)[v.index]

    def incident_edge_ids(self, v: Vertex) -> tuple[int, ...]:
        return (self._y_inc if v.side == Y_SIDE else self._x_inc)[v.index]

    def endpoints(self, eid: int) -> tuple[Vertex, Vertex]:
        """The (y, x) endpoint pair of an edge occurrence."""
        y, x = self.edges[eid]
        return Vertex.y(y), Vertex.x(x)

    def other_endpoint(self, eid: int, v: Vertex) -> Vertex:
        y, x = self.edges[eid]
        return Vertex.x(x) if v.side == Y_SIDE else Vertex.y(y)

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        """Neighbors in ascending order, repeated per edge multiplicity."""
        return tuple(self.other_endpoint(eid, v)
                     for eid in self.incident_edge_ids(v))

    def edge_id_between(self, a: Vertex, b: Vertex) -> int:
        """The unique occurrence id joining a and b; an error if the pair
        is absent or has multiplicity greater than one."""
        y, x = (a, b) if a.side == Y_SIDE else (b, a)
        ids = [eid for eid in self._y_inc[y.index]
               if self.edges[eid][1] == x.index]
        if len(ids) != 1:
            raise ValueError(f"edge {y}{x} has multiplicity {len(ids)}")
        return ids[0]

    def vertices(self) -> Iterator[Vertex]:
        for i in range(self.y_count):
            yield Vertex.y(i)
        for j in range(self.x_count):
            yield Vertex.x(j)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bigraph):
            return NotImplemented
        return (self.y_count, self.x_count, self.edges) == \
               (other.y_count, other.x_count, other.edges)

    def __hash__(self) -> int:
        return hash((self.y_count, self.x_count, self.edges))

    def __repr__(self) -> str:
        kind = "simple" if self.simple else "multi"
        return (f"Bigraph(|Y|={self.y_count}, |X|={self.x_count}, "
                f"|E|={self.edge_count}, {kind})")


class EdgeSubgraph:
    """A mutable edge subset of a parent Bigraph with degree bookkeeping.

    Membership is tracked per edge occurrence, so parallel edges of a
    multigraph are independent members.  Degree counters are maintained on
    every add/remove; the sum of Y degrees, the sum of X degrees and the
    member count always agree.  Single-writer: instances are not safe to
    share between threads while being mutated.
    """

    __slots__ = ("parent", "y_deg", "x_deg", "_member", "_count")

    def __init__(self, parent: Bigraph):
        self.parent = parent
        self._member = bytearray(parent.edge_count)
        self.y_deg = [0] * parent.y_count
        self.x_deg = [0] * parent.x_count
        self._count = 0

    @classmethod
    def from_pairs(cls, parent: Bigraph,
                   pairs: Iterable[tuple[Vertex, Vertex]]) -> "EdgeSubgraph":
        """Build a subgraph from vertex pairs; parent must be simple enough
        for each pair to name a unique occurrence."""
        sub = cls(parent)
        for a, b in pairs:
            sub.add(parent.edge_id_between(a, b))
        return sub

    def has(self, eid: int) -> bool:
        return bool(self._member[eid])

    __contains__ = has

    def add(self, eid: int) -> None:
        if self._member[eid]:
            raise ValueError(f"edge occurrence {eid} already a member")
        self._member[eid] = 1
        y, x = self.parent.edges[eid]
        self.y_deg[y] += 1
        self.x_deg[x] += 1
        self._count += 1

    def remove(self, eid: int) -> None:
        if not self._member[eid]:
            raise ValueError(f"edge occurrence {eid} not a member")
        self._member[eid] = 0
        y, x = self.parent.edges[eid]
        self.y_deg[y] -= 1
        self.x_deg[x] -= 1
        self._count -= 1

    def degree(self, v: Vertex) -> int:
        return (self.y_deg if v.side == Y_SIDE else self.x_deg)[v.index]

    @property
    def edge_count(self) -> int:
        return self._count

    def edge_ids(self) -> Iterator[int]:
        return (eid for eid, m in enumerate(self._member) if m)

    def member_pairs(self) -> list[tuple[Vertex, Vertex]]:
        return [self.parent.endpoints(eid) for eid in self.edge_ids()]

    def member_incident(self, v: Vertex) -> list[int]:
        """Member occurrence ids at v, ascending."""
        return [eid for eid in self.parent.incident_edge_ids(v)
                if self._member[eid]]

    def copy(self) -> "EdgeSubgraph":
        dup = EdgeSubgraph.__new__(EdgeSubgraph)
        dup.parent = self.parent
        dup._member = bytearray(self._member)
        dup.y_deg = list(self.y_deg)
        dup.x_deg = list(self.x_deg)
        dup._count = self._count
        return dup

    def __repr__(self) -> str:
        return f"EdgeSubgraph({self._count} of {self.parent.edge_count} edges)"


def check_biregular(g: Bigraph) -> int:
    """Return k for a (3,4)-biregular bigraph: |Y| = 4k, |X| = 3k, every Y
    degree 3 and every X degree 4.

    Raises NotBiregularError describing the first offense: a shape
    mismatch (part sizes not 4k and 3k for a common k), otherwise the
    first vertex in canonical order with a wrong degree.
    """
    if g.y_count % 4 != 0:
        raise NotBiregularError(
            f"|Y| = {g.y_count} is not a multiple of 4")
    k = g.y_count // 4
    if g.x_count != 3 * k:
        raise NotBiregularError(
            f"|X| = {g.x_count}, want 3k = {3 * k} to match |Y| = {g.y_count}")
    for i in range(g.y_count):
        if g._y_deg[i] != 3:
            raise NotBiregularError(f"deg(y{i}) = {g._y_deg[i]}, want 3")
    for j in range(g.x_count):
        if g._x_deg[j] != 4:
            raise NotBiregularError(f"deg(x{j}) = {g._x_deg[j]}, want 4")
    return k


@dataclass(frozen=True)
class ComponentViolation:
    """Why a subgraph failed to decompose into simple paths."""

    kind: str  # "branch-vertex" or "cycle"
    vertices: tuple[Vertex, ...]


@dataclass(frozen=True)
class PathDecomposition:
    """Either every component as a path, or the first violation found."""

    paths: Optional[tuple[tuple[Vertex, ...], ...]]
    violation: Optional[ComponentViolation]

    @property
    def ok(self) -> bool:
        return self.violation is None


def orient_path(seq: Sequence[Vertex]) -> tuple[Vertex, ...]:
    """Canonical orientation: the lexicographically smaller endpoint first."""
    seq = tuple(seq)
    return seq if seq[0] <= seq[-1] else seq[::-1]


def components_as_paths(s: EdgeSubgraph) -> PathDecomposition:
    """Decompose a subgraph into simple paths.

    On success, returns each component with at least one edge as a vertex
    sequence in canonical orientation, sorted by first vertex.  Otherwise
    the result carries the first violation in canonical vertex order: a
    vertex of degree >= 3, or the vertex set of a cycle.
    """
    return _decompose(s, list(s.parent.vertices()))


def _decompose(s: EdgeSubgraph, vertices: list[Vertex]) -> PathDecomposition:
    # Restricted variant used by rewiring: `vertices` must be closed under
    # the components it touches, in canonical order.
    for v in vertices:
        if s.degree(v) >= 3:
            return PathDecomposition(
                None, ComponentViolation("branch-vertex", (v,)))
    visited: set[Vertex] = set()
    paths: list[tuple[Vertex, ...]] = []
    for v in vertices:
        if v in visited or s.degree(v) != 1:
            continue
        paths.append(orient_path(_walk_path(s, v, visited)))
    for v in vertices:
        if v not in visited and s.degree(v) >= 1:
            cycle = _collect_component(s, v, visited)
            return PathDecomposition(
                None, ComponentViolation("cycle", tuple(sorted(cycle))))
    paths.sort(key=lambda p: p[0])
    return PathDecomposition(tuple(paths), None)


def _walk_path(s: EdgeSubgraph, start: Vertex,
               visited: set[Vertex]) -> list[Vertex]:
    seq = [start]
    visited.add(start)
    cur, prev_eid = start, -1
    while True:
        nxt = [eid for eid in s.member_incident(cur) if eid != prev_eid]
        if not nxt:
            return seq
        # degree <= 2 was pre-checked, so there is exactly one way forward
        prev_eid = nxt[0]
        cur = s.parent.other_endpoint(prev_eid, cur)
        seq.append(cur)
        visited.add(cur)


def _collect_component(s: EdgeSubgraph, start: Vertex,
                       visited: set[Vertex]) -> set[Vertex]:
    comp = {start}
    stack = [start]
    visited.add(start)
    while stack:
        v = stack.pop()
        for eid in s.member_incident(v):
            w = s.parent.other_endpoint(eid, v)
            if w not in comp:
                comp.add(w)
                visited.add(w)
                stack.append(w)
    return comp


def parse_graph(text: str, allow_multi: bool = False) -> Bigraph:
    """Parse the ``p bbg`` text format.

    Reports the first problem with its line number: a malformed line, an
    out-of-range endpoint, a duplicate edge when allow_multi is false, or
    an edge count that disagrees with the header.
    """
    header: Optional[tuple[int, int, int]] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(fields) != 5 or fields[1] != "bbg":
                raise GraphFormatError(
                    f"line {lineno}: malformed header {line!r}")
            try:
                y_count, x_count, edge_count = map(int, fields[2:])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: malformed header {line!r}") from None
            if y_count < 1 or x_count < 1 or edge_count < 0:
                raise GraphFormatError(
                    f"line {lineno}: header counts out of range")
            header = (y_count, x_count, edge_count)
        elif fields[0] == "e":
            if header is None:
                raise GraphFormatError(
                    f"line {lineno}: edge before 'p bbg' header")
            if len(fields) != 3:
                raise GraphFormatError(
                    f"line {lineno}: malformed edge line {line!r}")
            a = Vertex.parse(fields[1])
            b = Vertex.parse(fields[2])
            if a.side != Y_SIDE or b.side != X_SIDE:
                raise GraphFormatError(
                    f"line {lineno}: edge must name a y then an x vertex")
            if not (a.index < header[0] and b.index < header[1]):
                raise GraphFormatError(
                    f"line {lineno}: endpoint out of range in {line!r}")
            pair = (a.index, b.index)
            if pair in seen and not allow_multi:
                raise GraphFormatError(
                    f"line {lineno}: duplicate edge {a}{b} "
                    f"(pass allow_multi to accept multigraphs)")
            seen.add(pair)
            edges.append(pair)
        else:
            raise GraphFormatError(
                f"line {lineno}: unrecognized line {line!r}")
    if header is None:
        raise GraphFormatError("missing 'p bbg' header")
    if len(edges) != header[2]:
        raise GraphFormatError(
            f"edge count mismatch: header declares {header[2]}, "
            f"found {len(edges)}")
    return Bigraph(header[0], header[1], edges)


def serialize_graph(g: Bigraph) -> str:
    """Canonical text form: header then edges in sorted order, no comments.
    parse_graph(serialize_graph(g)) reproduces g byte for byte."""
    lines = [f"p bbg {g.y_count} {g.x_count} {g.edge_count}"]
    lines.extend(f"e y{y} x{x}" for y, x in g.edges)
    return "\n".join(lines) + "\n"


def parse_factor(text: str) -> list[tuple[Vertex, ...]]:
    """Parse a factor file: one path per line as space-separated vertex
    names, ``c`` comments and blank lines skipped.  Content is not
    validated here; feed the result to validate_path_factor."""
    paths: list[tuple[Vertex, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        try:
            paths.append(tuple(Vertex.parse(tok) for tok in line.split()))
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    return paths


def format_factor(paths: Iterable[Sequence[Vertex]]) -> str:
    """Canonical factor text: each path oriented smaller-endpoint-first,
    lines sorted by first vertex."""
    canon = sorted(orient_path(p) for p in paths)
    return "".join(" ".join(map(str, p)) + "\n" for p in canon)
