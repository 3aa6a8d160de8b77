"""
Half-isomorphisms and when they are special
===========================================

A bijection between two tables is a half-isomorphism when every product
lands on one of the two possible orders. Here the identity map sends the
cyclic group of order 6 onto a noncommutative loop on the same carrier.
"""

from halfiso import builtin, commuting_set, format_table, parse_permutation, specialness, specialness_criteria
from halfiso.magma import Permutation

c6 = builtin("ex1-c6")
L = builtin("ex1-L")
print(format_table(L))

verdict = specialness(c6, L, Permutation.identity(6))
print("half-isomorphism:", verdict.is_half_iso)
print("special:", verdict.is_special)

# the pair below commutes in C6 but not in L, so f^-1 breaks there
x, y = verdict.nonspecial_witness
print(f"witness ({x},{y}): {x}*{y} = {c6(x, y)} in C6, {x}.{y} = {L(x, y)}, {y}.{x} = {L(y, x)} in L")

# %%
# Specialness can be read off from commuting pairs alone.

print("|K(C6)| =", commuting_set(c6).size, " |K(L)| =", commuting_set(L).size)
print(specialness_criteria(c6, L, Permutation.identity(6)))

# %%
# The same check on a right Bol loop of order 8 and the dihedral group.

bol, d8 = builtin("ex61-bol"), builtin("ex61-d8")
f = parse_permutation("(3 5 7)(4 6 8)", 8)
v = specialness(bol, d8, f)
print(f"f = {f.cycle_string()}: half_iso={v.is_half_iso} special={v.is_special} witness={v.nonspecial_witness}")
