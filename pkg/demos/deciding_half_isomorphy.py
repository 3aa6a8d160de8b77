"""
Deciding whether two quasigroups are half-isomorphic
====================================================

Two strategies: run through the principal h-quasigroups of the first table
and test each for isomorphism with the second, or backtrack over bijections
directly. Both return the same verdict.
"""

import numpy as np

from halfiso import apply_iso, are_half_isomorphic, builtin, is_special_half_isomorphism
from halfiso.magma import Permutation
from halfiso.principal import iter_sigma_tables

star = builtin("ex41-star")
rng = np.random.default_rng(7)

# hide a principal h-quasigroup of star behind a random relabelling
_, q = list(iter_sigma_tables(star))[int(rng.integers(64))]
g = Permutation.from_zero(rng.permutation(8))
target = apply_iso(q, g)

for strategy in ("sigma", "search"):
    f = are_half_isomorphic(star, target, strategy=strategy)
    print(f"{strategy:>6}: {f.cycle_string() if f else None}  special={is_special_half_isomorphism(star, target, f)}")

# %%
# A table outside the family is rejected by both.

print(are_half_isomorphic(builtin("symmetric:3"), builtin("cyclic:6")))
