"""
Half-automorphism groups of small tables
========================================

Every half-automorphism of a group is an automorphism or an
anti-automorphism. Loops and quasigroups can carry more.
"""

from halfiso import builtin, half_groups, is_commutative
from halfiso.groups import is_group, verify_prop22

keys = ["cyclic:6", "symmetric:3", "dihedral:8", "quaternion:8", "ex61-bol", "ex41-star", "ex41-dot"]

print(f"{'table':<14}{'Aut':>5}{'Ant':>5}{'Half_S':>8}{'Half':>6}{'index':>7}  group?")
for key in keys:
    t = builtin(key)
    g = half_groups(t)
    print(
        f"{key:<14}{len(g.aut):>5}{len(g.ant):>5}{len(g.half_s):>8}{len(g.half):>6}{g.index_mi:>7}"
        f"  {is_group(g.half)}"
    )

# %%
# Structural checks hold on every table above.

assert all(verify_prop22(builtin(k)) for k in keys)
print("commutative tables:", [k for k in keys if is_commutative(builtin(k))])
