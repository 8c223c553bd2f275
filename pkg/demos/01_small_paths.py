"""
Which graph paths carry a V4-cordial labeling?
==============================================

Exhaustive search on the paths P_1 .. P_10, followed by a look at how many
witnesses each one has.
"""

# %%
from v4cordial import Hypergraph, SearchConfig, count_cordial_witnesses, exhaustive_search
from v4cordial.group import format_element


def path(n):
    return Hypergraph.from_edges(n, [[i, i + 1] for i in range(n - 1)])


# %%
# The search reports the lexicographically least witness, so the output is
# stable from run to run.
for n in range(1, 11):
    out = exhaustive_search(path(n))
    shown = " ".join(format_element(g) for g in out.labeling) if out.found else "-"
    print(f"P{n:<3} {out.status.value:<9} {out.nodes:>6} nodes  {shown}")

# %%
# P4 and P5 are the only failures. Counting all witnesses shows how much
# room the others have; the second column counts labelings that differ only
# by an automorphism of V4 once.
for n in range(1, 9):
    h = path(n)
    print(n, count_cordial_witnesses(h), count_cordial_witnesses(h, SearchConfig(use_symmetry=False)))
