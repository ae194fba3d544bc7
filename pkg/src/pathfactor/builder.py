"""Greedy scan that builds a pseudo path factor.

The scan visits Y vertices one at a time ("scanning"), committing all
three edges of the scanned vertex: some into the growing factor F, the
rest into a reject set U.  A current X vertex threads the scan.  Two
facts keep it alive: the current vertex always has F-degree <= 1 and at
most 2 rejected edges, so an uncommitted edge at it exists; and every
committed edge points to a scanned Y vertex, so following an uncommitted
edge always reaches a fresh one.  The scan ends exactly when every X
vertex has F-degree 2, at which point F is a pseudo path factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .dsu import PathForest
from .errors import AlgorithmDefectError, NotSimpleError
from .factors import PseudoPathFactor
from .graph import (Bigraph, EdgeSubgraph, Vertex, X_SIDE,
                    check_biregular, components_as_paths)
from .policy import LexicographicPolicy, TieBreakPolicy

TraceFn = Callable[[str], None]


@dataclass
class FactorState:
    """Mutable scan state.

    pending_x mirrors {j : F-degree of x_j <= 1} exactly; F-degrees only
    grow, so entries are discarded when a vertex reaches degree 2 and
    never return.
    """

    graph: Bigraph
    f: EdgeSubgraph
    u: EdgeSubgraph
    scanned: list[bool]
    current: Optional[Vertex]
    forest: PathForest
    step_no: int
    pending_x: set[int]
    _seen_counts: tuple[int, int] = (0, 0)  # (|F|, |U|) at last check

    @classmethod
    def initial(cls, g: Bigraph) -> "FactorState":
        return cls(graph=g, f=EdgeSubgraph(g), u=EdgeSubgraph(g),
                   scanned=[False] * g.y_count, current=None,
                   forest=PathForest(), step_no=0,
                   pending_x=set(range(g.x_count)))

    def is_initial(self) -> bool:
        return (self.step_no == 0 and self.current is None
                and self.f.edge_count == 0 and self.u.edge_count == 0
                and not any(self.scanned))

    def dump(self) -> str:
        f_edges = " ".join(_edge_str(self.graph, e) for e in self.f.edge_ids())
        u_edges = " ".join(_edge_str(self.graph, e) for e in self.u.edge_ids())
        done = " ".join(f"y{i}" for i, s in enumerate(self.scanned) if s)
        return (f"step={self.step_no} current={self.current} "
                f"scanned=[{done}] F=[{f_edges}] U=[{u_edges}]")


def _edge_str(g: Bigraph, eid: int) -> str:
    y, x = g.endpoints(eid)
    return f"{y}{x}"


def _defect(msg: str, state: FactorState) -> AlgorithmDefectError:
    return AlgorithmDefectError(f"{msg}\n  {state.dump()}")


def _grow_f(state: FactorState, eid: int) -> None:
    # Adding to F must keep it a forest of paths; the forest tracker
    # rejects cycles and interior attachments outright.
    y, x = state.graph.endpoints(eid)
    state.f.add(eid)
    try:
        state.forest.add_edge(y, x)
    except ValueError as exc:
        raise _defect(f"F stopped being a family of paths: {exc}", state)
    if state.f.x_deg[x.index] == 2:
        state.pending_x.discard(x.index)


def check_state_invariants(state: FactorState) -> None:
    """Full per-step invariant audit, used in checked mode.

    Raises AlgorithmDefectError on the first breach.
    """
    g, f, u = state.graph, state.f, state.u
    for eid in range(g.edge_count):
        if f.has(eid) and u.has(eid):
            raise _defect(f"edge {_edge_str(g, eid)} in both F and U", state)
    dec = components_as_paths(f)
    if not dec.ok:
        v = dec.violation
        raise _defect(f"F has a {v.kind} at "
                      f"{' '.join(map(str, v.vertices))}", state)
    for i in range(g.y_count):
        committed = sum(1 for eid in g.incident_edge_ids(Vertex.y(i))
                        if f.has(eid) or u.has(eid))
        want = 3 if state.scanned[i] else 0
        if committed != want:
            raise _defect(f"y{i} scanned={state.scanned[i]} but has "
                          f"{committed} committed edges", state)
    for j in range(g.x_count):
        if f.x_deg[j] <= 1 and u.x_deg[j] > 2:
            raise _defect(f"x{j} has F-degree {f.x_deg[j]} yet "
                          f"{u.x_deg[j]} rejected edges", state)
    if state.pending_x != {j for j in range(g.x_count) if f.x_deg[j] <= 1}:
        raise _defect("pending_x set out of sync with F-degrees", state)
    prev_f, prev_u = state._seen_counts
    if f.edge_count < prev_f or u.edge_count < prev_u:
        raise _defect("committed edge sets shrank between steps", state)
    state._seen_counts = (f.edge_count, u.edge_count)


def step_zero(state: FactorState, g: Bigraph, policy: TieBreakPolicy,
              trace: Optional[TraceFn] = None) -> FactorState:
    """Scan the first Y vertex.

    With the policy's neighbor order (a, b, c): edges to c and a enter F,
    the edge to b enters U, and b becomes the current vertex.
    """
    if not state.is_initial():
        raise _defect("step_zero requires a fresh state", state)
    y0 = Vertex.y(policy.pick(range(g.y_count)))
    eid_of = {g.edges[eid][1]: eid for eid in g.incident_edge_ids(y0)}
    ordered = policy.order(eid_of)
    first, middle, last = ordered[0], ordered[1], ordered[2]
    _grow_f(state, eid_of[last])
    _grow_f(state, eid_of[first])
    state.u.add(eid_of[middle])
    state.scanned[y0.index] = True
    state.current = Vertex.x(middle)
    state.step_no = 1
    if trace:
        trace(f"step 0 case 0 {y0} F:[{y0}x{last} {y0}x{first}] "
              f"U:[{y0}x{middle}]")
    return state


def step_i(state: FactorState, g: Bigraph, policy: TieBreakPolicy,
           trace: Optional[TraceFn] = None, checked: bool = False
           ) -> FactorState:
    """Scan one more Y vertex, reached from the current X vertex.

    The scanned vertex is chosen among uncommitted edges at the current
    vertex; its other two neighbors (w1, w2), with F-degrees after the
    edge to the current vertex joins F, decide the case:

      1:  both 2           reject both edges; next current is any X vertex
                           of F-degree <= 1, or the scan stops.
      2:  exactly one 2    reject both; the low-degree one becomes current.
      3a: some 0           extend F through a degree-0 one, reject the
                           other, which becomes current.
      3b: both 1           extend F toward whichever end keeps F acyclic,
                           reject the other, which becomes current.
    """
    x_i = state.current
    if x_i is None or x_i.side != X_SIDE:
        raise _defect(f"current vertex {x_i} is not an X vertex", state)
    if state.f.x_deg[x_i.index] > 1:
        raise _defect(f"current vertex {x_i} already has F-degree 2", state)
    free = {g.edges[eid][0]: eid for eid in g.incident_edge_ids(x_i)
            if not (state.f.has(eid) or state.u.has(eid))}
    if not free:
        raise _defect(f"no uncommitted edge at {x_i}; the scan guarantees "
                      f"at least one", state)
    for y_idx in free:
        if state.scanned[y_idx]:
            raise _defect(f"uncommitted edge leads to already scanned "
                          f"y{y_idx}", state)

    y_idx = policy.pick(free)
    y_i = Vertex.y(y_idx)
    chosen_eid = free[y_idx]
    rest = {g.edges[eid][1]: eid for eid in g.incident_edge_ids(y_i)
            if eid != chosen_eid}
    wa_idx, wb_idx = policy.order(rest)
    da, db = state.f.x_deg[wa_idx], state.f.x_deg[wb_idx]

    step_no = state.step_no
    _grow_f(state, chosen_eid)
    if da == 2 and db == 2:
        case = "1"
        state.u.add(rest[wa_idx])
        state.u.add(rest[wb_idx])
        f_new = [chosen_eid]
        u_new = [rest[wa_idx], rest[wb_idx]]
        state.current = (Vertex.x(policy.pick(state.pending_x))
                         if state.pending_x else None)
    elif da == 2 or db == 2:
        case = "2"
        w1_idx, w2_idx = (wa_idx, wb_idx) if da == 2 else (wb_idx, wa_idx)
        state.u.add(rest[w1_idx])
        state.u.add(rest[w2_idx])
        f_new = [chosen_eid]
        u_new = [rest[w1_idx], rest[w2_idx]]
        state.current = Vertex.x(w2_idx)
    elif da == 0 or db == 0:
        case = "3a"
        w1_idx, w2_idx = (wa_idx, wb_idx) if da == 0 else (wb_idx, wa_idx)
        _grow_f(state, rest[w1_idx])
        state.u.add(rest[w2_idx])
        f_new = [chosen_eid, rest[w1_idx]]
        u_new = [rest[w2_idx]]
        state.current = Vertex.x(w2_idx)
    else:
        case = "3b"
        # Both candidates sit on F-paths; exactly one may already share a
        # component with y_i, and extending that way would close a cycle.
        if state.forest.connected(y_i, Vertex.x(wa_idx)):
            w1_idx, w2_idx = wb_idx, wa_idx
        else:
            w1_idx, w2_idx = wa_idx, wb_idx
        _grow_f(state, rest[w1_idx])
        state.u.add(rest[w2_idx])
        f_new = [chosen_eid, rest[w1_idx]]
        u_new = [rest[w2_idx]]
        state.current = Vertex.x(w2_idx)

    state.scanned[y_idx] = True
    state.step_no += 1
    if trace:
        trace(f"step {step_no} case {case} {y_i} "
              f"F:[{' '.join(_edge_str(g, e) for e in f_new)}] "
              f"U:[{' '.join(_edge_str(g, e) for e in u_new)}]")
    if checked:
        check_state_invariants(state)
    return state


def build_pseudo_factor(g: Bigraph, policy: Optional[TieBreakPolicy] = None,
                        *, checked: bool = False,
                        trace: Optional[TraceFn] = None) -> PseudoPathFactor:
    """Run the scan to completion on a simple (3,4)-biregular bigraph.

    Deterministic for a fixed (graph, policy).  With checked=True the full
    invariant audit runs after every step; the returned factor is also
    re-validated.  Raises NotSimpleError / NotBiregularError on bad input
    and AlgorithmDefectError on any internal breach.
    """
    if policy is None:
        policy = LexicographicPolicy()
    if not g.simple:
        raise NotSimpleError("input graph has parallel edges; a simple "
                             "graph is required")
    check_biregular(g)
    state = FactorState.initial(g)
    step_zero(state, g, policy, trace=trace)
    if checked:
        check_state_invariants(state)
    while state.current is not None:
        if state.step_no > g.y_count:
            raise _defect("scan did not stop within |Y| steps", state)
        step_i(state, g, policy, trace=trace, checked=checked)
    for j in range(g.x_count):
        if state.f.x_deg[j] != 2:
            raise _defect(f"scan stopped with deg_F(x{j}) = "
                          f"{state.f.x_deg[j]}", state)
    try:
        factor = PseudoPathFactor.from_subgraph(g, state.f)
    except ValueError as exc:
        raise _defect(f"final F is not a pseudo path factor: {exc}", state)
    if checked:
        from .verify import validate_pseudo_factor
        report = validate_pseudo_factor(g, state.f)
        if not report.valid:
            raise _defect(f"validator rejected the built factor:\n"
                          f"{report.render()}", state)
    return factor
