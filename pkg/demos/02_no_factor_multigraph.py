"""Why the solver insists on simple input.

Degree counts alone do not grant a path factor: the multigraph below is
(3,4)-biregular, yet keeping 2 edges at each X vertex always traps a
cycle or starves y0.  The exhaustive oracle certifies that by trying all
6^3 = 216 ways.  Run:

    python3 demos/02_no_factor_multigraph.py
"""

from pathfactor import (NotSimpleError, brute_force_factor, check_biregular,
                        fixture, serialize_graph, solve)

cx = fixture("counterexample")
print(serialize_graph(cx), end="")
print(f"\nshape check: k = {check_biregular(cx)}  (degrees are fine)")
print(f"simple: {cx.simple}  (y1, y2, y3 each hang on a triple edge)")

try:
    solve(cx)
except NotSimpleError as exc:
    print(f"\nsolve refuses it: {exc}")

print("\nasking the oracle to try every per-X edge pair...")
witness = brute_force_factor(cx)
print("oracle verdict:",
      "NO FACTOR EXISTS" if witness is None else "factor found (?!)")

print("""
Why: each x_j must keep 2 of its 4 edges.  Keeping both copies of a
parallel pair forms a 2-cycle, so every x_j keeps its single edge to y0
plus one parallel edge.  That gives y0 degree 3, more than a path allows.
""", end="")
