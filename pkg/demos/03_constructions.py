"""
Constructions without search
============================

Stars, hyperpaths and uniform hypertrees are labeled directly, so their size
is no obstacle. Each construction is checked with ``verify``.
"""

# %%
import time

from v4cordial import construct_hyperpath, construct_star, construct_uniform_hypertree, verify
from v4cordial.generators import generate_random_hypertree, random_hyperpath, random_star

# %%
# A star with 40 edges of sizes 2..9
h = random_star((2, 9), 40, seed=1)
trace = []
c = construct_star(h, trace=trace)
print(f"star n={h.n} m={h.m}: cordial={verify(h, c).cordial}, steps {trace[:8]} ...")

# %%
# A hyperpath with 200 edges; the trace says how the ends were completed
h = random_hyperpath((3, 8), 200, seed=2)
trace = []
t = time.perf_counter()
c = construct_hyperpath(h, trace=trace)
print(f"hyperpath n={h.n}: cordial={verify(h, c).cordial} in {time.perf_counter() - t:.3f}s, {trace.count('table')} table completions")

# %%
# Uniform hypertrees with p = 2 (mod 4) and m = 3 (mod 4) need the special
# cases; the trace names the branches.
for m in (3, 7, 11, 15):
    h = generate_random_hypertree([6], m, seed=m)
    trace = []
    c = construct_uniform_hypertree(h, trace=trace)
    print(f"p=6 m={m:<2} n={h.n:<3} cordial={verify(h, c).cordial}  {sorted(set(trace))}")
