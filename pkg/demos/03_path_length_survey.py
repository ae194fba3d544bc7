"""Survey the path lengths the solver produces across instance sizes.

Short paths are the interesting regime: on every instance surveyed so
far, some factor with all paths of length at most 8 exists, and whether
that always holds is open.  This greedy solver makes no effort to keep
paths short, so the table mostly shows how often it gets lucky.  Run:

    python3 demos/03_path_length_survey.py [trials]
"""

import sys

from pathfactor import run_experiment

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 100

print(f"{'k':>5} {'longest':>8} {'all <= 8':>9}   (over {trials} trials each)")
for k in (1, 2, 3, 5, 10, 20):
    s = run_experiment(k=k, trials=trials, seed=0)
    print(f"{k:>5} {s.max_path_seen:>8} {s.pct_all_paths_le_8:>8.1f}%")

print("\nfull report for k=5:")
s = run_experiment(k=5, trials=trials, seed=0)
print(s.deterministic_text(), end="")
print(s.timing_text(), end="")
