"""
The shift map on alternating product sequences
==============================================

Finitely supported sequences over two loops multiply with one loop on odd
indices and the other on even ones. The shift ``phi`` moves odd coordinates
down by two, even ones up by two, and sends coordinate 1 through ``f`` to
coordinate 2.
"""

from halfiso import builtin
from halfiso.infinite import (
    FinSuppElement,
    LoopPair,
    half_condition,
    nonspecial_witness_infinite,
    phi,
    phi_inverse,
    product,
    sample_pairs,
)
from halfiso.magma import Permutation

pair = LoopPair.build(builtin("ex1-c6"), builtin("ex1-L"), Permutation.identity(6))

a, b = nonspecial_witness_infinite(pair)
print("phi^-1 fails on", a, "and", b)

# %%
# On random samples ``phi`` itself fails too, whenever coordinate 2 and the
# even coordinates further out need opposite product orders.

bad = sum(not half_condition(pair, phi, x, y) for x, y in sample_pairs(pair, 2000, seed=0))
print(bad, "of 2000 sampled pairs break the condition for phi")

a = FinSuppElement.of({1: 3, 2: 3})
b = FinSuppElement.of({1: 2, 2: 2})
print("phi(a b)       =", phi(pair, product(pair, a, b)))
print("phi(a) phi(b)  =", product(pair, phi(pair, a), phi(pair, b)))
print("phi(b) phi(a)  =", product(pair, phi(pair, b), phi(pair, a)))
