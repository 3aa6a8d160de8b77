"""
Principal h-quasigroups
=======================

For a noncommutative quasigroup, swapping ``x*y`` with ``y*x`` on a whole
class of noncommuting pairs at once keeps the table Latin. One bit per class
gives all principal h-quasigroups.
"""

import time

from halfiso import builtin, commuting_set, enumerate_MI, enumerate_N, is_isomorphic
from halfiso.principal import iter_sigma_tables, log2_principal_groupoids, pair_partition

star = builtin("ex41-star")
part = pair_partition(star)
print("|K| =", commuting_set(star).size, " log2|M| =", log2_principal_groupoids(star), " r =", part.r)
print("class sizes:", part.sizes())

tables = enumerate_N(star)
print(len(tables), "principal h-quasigroups")

# %%
# The sigma vectors producing a table isomorphic to the other order-8 quasigroup.

dot = builtin("ex41-dot")
hits = [str(s) for s, q in iter_sigma_tables(star, part) if is_isomorphic(q, dot) is not None]
print(len(hits), "of 64 are isomorphic to ex41-dot, e.g.", hits[:4])
print("|M_I(star)| =", len(enumerate_MI(star)), " |M_I(dot)| =", len(enumerate_MI(dot)))

# %%
# Counting scales to larger groups without enumerating anything.

start = time.perf_counter()
a5 = builtin("alternating:5")
print("A5: |K| =", commuting_set(a5).size, " |M| = 2^%d" % log2_principal_groupoids(a5),
      " |N| = 2^%d" % pair_partition(a5).r, f"({time.perf_counter() - start:.2f} s)")
