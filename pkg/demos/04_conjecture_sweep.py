"""
Random hypertrees with edges of size at least three
===================================================

Every hypertree whose edges all have three or more vertices is expected to be
cordial. The sweep below labels random instances, by construction where a
construction exists and by exhaustive search otherwise, and double-checks
each one with the search. It is evidence, not a proof.
"""

# %%
import json

from v4cordial.cli import explore_conjecture

report = explore_conjecture(3, 6, (2, 6), trials=300, seed=11, max_order=14, cross_check=True)
print(json.dumps({k: report[k] for k in ("trials", "cordial", "max_n", "methods", "oracle")}, indent=2))
print("counterexamples:", report["counterexamples"])

# %%
# The same sweep from the shell:
#   v4cordial explore-conjecture --p-min 3 --p-max 6 --edges 2..6 --trials 300 --seed 11 --max-order 14 --cross-check
