"""Seeded random (3,4)-biregular instance generation.

Pairing 3 stubs per Y vertex with 4 stubs per X vertex under a random
permutation yields a biregular multigraph; duplicate pairs are then
removed by double edge swaps that preserve both degree sequences.  If a
pairing cannot be repaired within the swap budget, the whole attempt is
retried under a seed derived from (seed, attempt), so results stay a pure
function of (k, seed).

All randomness comes from numpy's PCG64 via SeedSequence, which is
stable across platforms and versions of this package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import GenerationError
from .graph import Bigraph, check_biregular

MAX_ATTEMPTS = 20


@dataclass(frozen=True)
class GenConfig:
    """Generation parameters; (k, seed) fully determine the output."""

    k: int
    seed: int
    max_repair_rounds: int = 1000

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.max_repair_rounds < 0:
            raise ValueError("max_repair_rounds must be non-negative")


def generate(config: GenConfig, *, checked: bool = False) -> Bigraph:
    """Generate a simple (3,4)-biregular bigraph with |Y| = 4k, |X| = 3k.

    Deterministic per config.  Raises GenerationError if every attempt
    exhausts its repair budget (not observed for any tested (k, seed), but
    the bound keeps termination unconditional).
    """
    for attempt in range(MAX_ATTEMPTS):
        rng = np.random.default_rng(
            np.random.SeedSequence((config.seed, attempt)))
        edges = _pair_stubs(config.k, rng)
        repaired = _repair_duplicates(edges, config.max_repair_rounds,
                                      rng, checked)
        if repaired is not None:
            g = Bigraph(4 * config.k, 3 * config.k, repaired)
            if checked:
                assert g.simple and check_biregular(g) == config.k
            return g
    raise GenerationError(
        f"could not produce a simple instance for k={config.k} "
        f"seed={config.seed} within {MAX_ATTEMPTS} attempts")


def _pair_stubs(k: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    y_stubs = [i for i in range(4 * k) for _ in range(3)]
    x_stubs = [j for j in range(3 * k) for _ in range(4)]
    perm = rng.permutation(len(x_stubs))
    return [(y_stubs[t], x_stubs[perm[t]]) for t in range(len(y_stubs))]


def _repair_duplicates(edges: list[tuple[int, int]], budget: int,
                       rng: np.random.Generator,
                       checked: bool) -> list[tuple[int, int]] | None:
    """Remove duplicate pairs by double edge swaps; None if out of budget.

    Each round swaps one occurrence of the least duplicated pair with a
    random partner occurrence, provided the swap joins four distinct
    vertices and creates no new duplicate, so the duplicate count strictly
    falls whenever a swap applies.
    """
    counts = Counter(edges)
    dupes = {pair for pair, c in counts.items() if c > 1}
    if checked:
        y_deg = Counter(y for y, _ in edges)
        x_deg = Counter(x for _, x in edges)
    for _ in range(budget):
        if not dupes:
            return edges
        target = min(dupes)
        i = edges.index(target)
        t = int(rng.integers(len(edges)))
        yi, xi = edges[i]
        yt, xt = edges[t]
        if yi == yt or xi == xt:
            continue
        new_a, new_b = (yi, xt), (yt, xi)
        if counts[new_a] or counts[new_b]:
            continue
        for old in ((yi, xi), (yt, xt)):
            counts[old] -= 1
            if counts[old] <= 1:
                dupes.discard(old)
        for new in (new_a, new_b):
            counts[new] += 1
            if counts[new] > 1:
                dupes.add(new)
        edges[i], edges[t] = new_a, new_b
        if checked:
            assert Counter(y for y, _ in edges) == y_deg
            assert Counter(x for _, x in edges) == x_deg
    return edges if not dupes else None


def fixture(name: str) -> Bigraph:
    """Built-in instances.

    "k34": the complete bipartite graph on 4 + 3 vertices, the unique
    simple instance at k = 1.

    "counterexample": the k = 1 multigraph with a claw at y0 and triple
    edges elsewhere; it is (3,4)-biregular but admits no path factor,
    which is why the solver insists on simple input.
    """
    if name == "k34":
        return Bigraph(4, 3, [(i, j) for i in range(4) for j in range(3)])
    if name == "counterexample":
        claw = [(0, j) for j in range(3)]
        triples = [(j + 1, j) for j in range(3) for _ in range(3)]
        return Bigraph(4, 3, claw + triples)
    raise ValueError(f"unknown fixture {name!r}; want k34 or counterexample")
