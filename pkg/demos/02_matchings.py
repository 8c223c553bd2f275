"""
Matchings and the mod-4 obstruction
===================================

A matching where every vertex is covered fails exactly when n and m are both
even and differ mod 4. Here the decider and the exhaustive search are put
side by side.
"""

# %%
from v4cordial import decide_matching, exhaustive_search
from v4cordial.generators import matching_from_sizes

# %%
for sizes in ([2, 2], [2, 1, 1], [3, 3], [2, 2, 1, 1], [4, 2], [3, 1], [4, 4, 2, 2]):
    h = matching_from_sizes(sizes)
    d = decide_matching(h)
    tag = exhaustive_search(h).status.value
    reason = d.reason.value if d.reason else ""
    print(f"{str(sizes):<16} n={h.n:<2} m={h.m}  {d.verdict.value:<12} {reason:<18} search: {tag}")

# %%
# One isolated vertex is enough to break the obstruction: it is used as the
# centre of a star spanning the edges, which shifts every edge sum at once.
trace = []
h = matching_from_sizes([2, 2], isolated=1)
d = decide_matching(h, trace=trace)
print(d.verdict.value, d.labeling, trace)
