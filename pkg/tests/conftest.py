"""Shared fixtures: hand-built instances with known structure.

The k=2 and k=3 pseudo factors below are constructed so that trail search
and rewiring have exactly one lexicographic outcome each, worked out by
hand; tests pin those outcomes as goldens.
"""

from __future__ import annotations

import pytest

from pathfactor import Bigraph, EdgeSubgraph, PseudoPathFactor, Vertex


def _ypath(*indices):
    # alternating y/x vertex tuple from indices, starting on the Y side
    out = []
    for t, i in enumerate(indices):
        out.append(Vertex.y(i) if t % 2 == 0 else Vertex.x(i))
    return tuple(out)


def _factor_from_paths(y_count, x_count, f_paths, extra_edges):
    edges = []
    for p in f_paths:
        for a, b in zip(p, p[1:]):
            y, x = (a, b) if a.is_y else (b, a)
            edges.append((y.index, x.index))
    f_pairs = list(edges)
    edges.extend(extra_edges)
    g = Bigraph(y_count, x_count, edges)
    sub = EdgeSubgraph(g)
    for y, x in f_pairs:
        sub.add(g.edge_id_between(Vertex.y(y), Vertex.x(x)))
    return g, PseudoPathFactor.from_subgraph(g, sub)


@pytest.fixture
def k2_pseudo():
    """k=2: one 12-path covering y1..y7, y0 uncovered.

    Trail search from y0 has five possible outcomes; the lexicographic
    one is (y0, x0, y2).
    """
    long_path = _ypath(1, 0, 2, 1, 3, 2, 4, 3, 5, 4, 6, 5, 7)
    extra = [(0, 0), (4, 0), (0, 1), (5, 1), (0, 2), (6, 2),
             (1, 3), (7, 3), (1, 4), (7, 4), (2, 5), (3, 5)]
    return _factor_from_paths(8, 6, [long_path], extra)


@pytest.fixture
def k3_pseudo():
    """k=3: a 2-path (y1, x0, y2) and a 16-path, y0 uncovered.

    Every trail from y0 must cross the 2-path; the lexicographic trail is
    (y0, x0, y1, x1, y4).
    """
    two_path = _ypath(1, 0, 2)
    long_path = _ypath(3, 1, 4, 2, 5, 3, 6, 4, 7, 5, 8, 6, 9, 7, 10, 8, 11)
    extra = [(0, 0), (3, 0), (0, 1), (1, 1), (0, 2), (2, 2),
             (1, 3), (2, 3), (3, 4), (11, 4), (4, 5), (11, 5),
             (5, 6), (10, 6), (6, 7), (8, 7), (7, 8), (9, 8)]
    return _factor_from_paths(12, 9, [two_path, long_path], extra)
