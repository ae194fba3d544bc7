"""Trail search and rewiring, plus the end-to-end solve pipeline.

A pseudo path factor that misses some Y vertex always contains a
component of length >= 4, and from any uncovered y0 an alternating trail
reaches one: it leaves y0 on a non-factor edge, crosses length-2
components through their middle, and stops at an interior Y vertex of a
long component.  Swapping the trail's factor and non-factor edges covers
y0, keeps every other guarantee intact and never lengthens the longest
path, so repeating the swap once per uncovered vertex yields a spanning
path factor.
"""

from __future__ import annotations

from typing import Callable, Optional

from .builder import build_pseudo_factor
from .errors import AlgorithmDefectError, NotSimpleError
from .factors import AugmentingTrail, PathFactor, PseudoPathFactor
from .graph import Bigraph, Vertex, Y_SIDE, check_biregular, _decompose
from .policy import LexicographicPolicy, TieBreakPolicy

TraceFn = Callable[[str], None]


def find_trail(factor: PseudoPathFactor, y0: Vertex,
               policy: Optional[TieBreakPolicy] = None,
               *, checked: bool = False) -> AugmentingTrail:
    """Find an augmenting trail out of the uncovered vertex y0.

    The trail alternates non-factor and factor edges.  Interior X stops
    lie on components of length exactly 2 and are crossed; the first X
    vertex found on a longer component ends the trail at one of that
    component's interior Y vertices.  Guaranteed to succeed whenever the
    factor misses a Y vertex; failure to make progress is reported as a
    defect, not an error in the input.
    """
    if policy is None:
        policy = LexicographicPolicy()
    g, sub = factor.graph, factor.subgraph
    if not y0.is_y or sub.degree(y0) != 0:
        raise ValueError(f"trail origin {y0} must be an uncovered Y vertex")

    trail = [y0]
    used: set[int] = set()
    seen_ys = {y0}
    for _ in range(g.y_count + 1):
        tip = trail[-1]
        non_factor = [eid for eid in g.incident_edge_ids(tip)
                      if not sub.has(eid)]
        fresh = {g.edges[eid][1]: eid for eid in non_factor
                 if eid not in used}
        if len(fresh) != len(non_factor):
            raise AlgorithmDefectError(
                f"non-factor edge at trail tip {tip} was already used; "
                f"trail so far: {' '.join(map(str, trail))}")
        if not fresh:
            raise AlgorithmDefectError(
                f"no non-factor edge available at trail tip {tip}")
        x_idx = policy.pick(fresh)
        x_next = Vertex.x(x_idx)
        used.add(fresh[x_idx])
        trail.append(x_next)

        f_eids = [eid for eid in sub.member_incident(x_next)
                  if eid not in used]
        if factor.component_length_at(x_next) == 2:
            # Crossing a 2-path through its middle.  The same middle can
            # be crossed twice (X vertices may repeat), so one factor edge
            # may be spent already; both spent would mean a third arrival,
            # which the degree budget rules out.
            if not f_eids:
                raise AlgorithmDefectError(
                    f"no unused factor edge at 2-path middle {x_next}; "
                    f"trail so far: {' '.join(map(str, trail))}")
            choices = {g.edges[eid][0]: eid for eid in f_eids}
            y_idx = policy.pick(choices)
            y_next = Vertex.y(y_idx)
            if y_next in seen_ys:
                raise AlgorithmDefectError(
                    f"trail revisited {y_next}; trail so far: "
                    f"{' '.join(map(str, trail))}")
            used.add(choices[y_idx])
            seen_ys.add(y_next)
            trail.append(y_next)
            continue
        # Long component: stop at an interior Y vertex.  Factor edges used
        # so far all lie on 2-paths, so none here can be spent.
        if len(f_eids) != len(sub.member_incident(x_next)):
            raise AlgorithmDefectError(
                f"factor edge on the long component at {x_next} was "
                f"already used; trail so far: {' '.join(map(str, trail))}")
        interior = {g.edges[eid][0]: eid for eid in f_eids
                    if sub.y_deg[g.edges[eid][0]] == 2}
        if not interior:
            raise AlgorithmDefectError(
                f"no interior Y vertex reachable at {x_next} on a component "
                f"of length {factor.component_length_at(x_next)}")
        y_idx = policy.pick(interior)
        trail.append(Vertex.y(y_idx))
        result = AugmentingTrail(tuple(trail))
        if checked:
            _audit_trail(factor, result)
        return result
    raise AlgorithmDefectError(
        f"trail search from {y0} did not terminate within |Y| extensions")


def _audit_trail(factor: PseudoPathFactor, trail: AugmentingTrail) -> None:
    # Re-derive every trail condition from scratch.
    g, sub = factor.graph, factor.subgraph
    eids = []
    for (a, b), in_f in zip(trail.edges(),
                            [False, True] * (trail.edge_count // 2)):
        eid = g.edge_id_between(a, b)
        if sub.has(eid) != in_f:
            raise AlgorithmDefectError(
                f"trail edge {a}{b} factor membership is {sub.has(eid)}, "
                f"want {in_f}")
        eids.append(eid)
    if len(set(eids)) != len(eids):
        raise AlgorithmDefectError("trail repeats an edge")
    ys = trail.vertices[0::2]
    if len(set(ys)) != len(ys):
        raise AlgorithmDefectError("trail repeats a Y vertex")
    for x in trail.vertices[1:-2:2]:
        if factor.component_length_at(x) != 2:
            raise AlgorithmDefectError(
                f"interior trail vertex {x} is on a component of length "
                f"{factor.component_length_at(x)}, want 2")
    terminal_x, terminal_y = trail.vertices[-2], trail.vertices[-1]
    if factor.component_length_at(terminal_x) < 4:
        raise AlgorithmDefectError(
            f"terminal {terminal_x} is on a component of length "
            f"{factor.component_length_at(terminal_x)}, want >= 4")
    if sub.degree(terminal_y) != 2:
        raise AlgorithmDefectError(
            f"terminal {terminal_y} has factor degree "
            f"{sub.degree(terminal_y)}, want 2")


def _apply_trail(factor: PseudoPathFactor, trail: AugmentingTrail,
                 *, checked: bool = False) -> None:
    # In-place rewiring: drop the trail's factor edges, adopt its
    # non-factor edges, and rebuild the path index only where it changed.
    g, sub = factor.graph, factor.subgraph
    y0 = trail.vertices[0]
    old_max = factor.max_path_length
    old_covered = len(factor.covered)

    slots = {factor._slot_of[v] for v in trail.vertices
             if v in factor._slot_of}
    affected = {y0}
    for slot in slots:
        affected.update(factor._remove_slot(slot))
    for a, b in trail.factor_edges():
        sub.remove(g.edge_id_between(a, b))
    for a, b in trail.non_factor_edges():
        sub.add(g.edge_id_between(a, b))

    for v in affected:
        if v.side != Y_SIDE and sub.x_deg[v.index] != 2:
            raise AlgorithmDefectError(
                f"rewiring left deg({v}) = {sub.x_deg[v.index]}, want 2")
        if v.side == Y_SIDE:
            factor.covered.discard(v)
    dec = _decompose(sub, sorted(affected))
    if not dec.ok:
        v = dec.violation
        raise AlgorithmDefectError(
            f"rewiring broke the path structure: {v.kind} at "
            f"{' '.join(map(str, v.vertices))}")
    for p in dec.paths:
        if len(p) % 2 == 0 or not (p[0].is_y and p[-1].is_y):
            raise AlgorithmDefectError(
                f"rewiring produced a non-even component "
                f"{' '.join(map(str, p))}")
        factor._insert_path(p)

    if len(factor.covered) != old_covered + 1 or y0 not in factor.covered:
        raise AlgorithmDefectError(
            f"rewiring was expected to cover exactly {y0}: covered count "
            f"went {old_covered} -> {len(factor.covered)}")
    if factor.max_path_length > old_max:
        raise AlgorithmDefectError(
            f"rewiring raised the maximum path length {old_max} -> "
            f"{factor.max_path_length}")
    if checked:
        from .verify import validate_pseudo_factor
        report = validate_pseudo_factor(g, sub)
        if not report.valid:
            raise AlgorithmDefectError(
                f"validator rejected the rewired factor:\n{report.render()}")


def rewire(factor: PseudoPathFactor, trail: AugmentingTrail,
           *, checked: bool = False) -> PseudoPathFactor:
    """Swap the trail's factor and non-factor edges.

    Returns a new pseudo path factor covering exactly one more Y vertex
    (the trail origin); the input factor is left untouched.  The maximum
    path length never increases and the edge count is unchanged.
    """
    result = factor.copy()
    _apply_trail(result, trail, checked=checked)
    return result


def solve(g: Bigraph, policy: Optional[TieBreakPolicy] = None,
          *, checked: bool = False,
          trace: Optional[TraceFn] = None) -> PathFactor:
    """Construct a spanning path factor of a simple (3,4)-biregular
    bigraph: build a pseudo path factor, then absorb uncovered Y vertices
    one augmenting trail at a time.

    Deterministic for a fixed (graph, policy).  Raises NotSimpleError or
    NotBiregularError on bad input; every internal guarantee is asserted
    and surfaces as AlgorithmDefectError if it ever fails.
    """
    if policy is None:
        policy = LexicographicPolicy()
    if not g.simple:
        raise NotSimpleError("input graph has parallel edges; a simple "
                             "graph is required")
    check_biregular(g)
    factor = build_pseudo_factor(g, policy, checked=checked, trace=trace)
    for _ in range(g.y_count):
        uncovered = factor.uncovered_ys()
        if not uncovered:
            break
        if factor.long_component_count == 0:
            raise AlgorithmDefectError(
                "factor misses a Y vertex yet has no component of "
                "length >= 4")
        y0 = policy.pick(uncovered)
        trail = find_trail(factor, y0, policy, checked=checked)
        _apply_trail(factor, trail, checked=checked)
        if trace:
            trace(f"augment {y0} trail_len {trail.edge_count} "
                  f"max_path {factor.max_path_length}")
    else:
        if factor.uncovered_ys():
            raise AlgorithmDefectError(
                "augmentation did not cover Y within |Y| rounds")
    result = PathFactor.from_pseudo(factor)
    if checked:
        from .verify import validate_path_factor
        report = validate_path_factor(g, result)
        if not report.valid:
            raise AlgorithmDefectError(
                f"validator rejected the solved factor:\n{report.render()}")
    return result
