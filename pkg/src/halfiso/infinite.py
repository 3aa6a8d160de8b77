"""Finitely supported sequences over a pair of loops, and the shift map on them.

Given loops ``(G,*)`` and ``(G,·)`` sharing identity 1 and a non-special
half-isomorphism ``f`` between them, sequences ``(x_1, x_2, ...)`` multiply
coordinatewise with ``*`` on odd indices and ``·`` on even ones. Only
sequences equal to 1 outside a finite set of indices are represented; they
form a subloop closed under the shift map ``phi``::

    phi(x)_2 = f(x_1),  phi(x)_j = x_{j+2} (j odd),  phi(x)_j = x_{j-2} (j > 2 even)

:func:`find_phi_violation` tests on seeded random samples whether ``phi``
satisfies the half-automorphism condition; :func:`nonspecial_witness_infinite`
exhibits the failure of the same condition for ``phi⁻¹``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from .analysis import specialness
from .errors import PreconditionError
from .magma import CayleyTable, Permutation, apply_iso, check_same_order, classify

SAMPLE_MAX_INDEX = 12


@dataclass(frozen=True)
class FinSuppElement:
    """Sequence equal to the identity 1 outside ``support``.

    ``support`` holds sorted ``(index, value)`` pairs with ``value != 1``.
    """

    support: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        items = tuple(sorted((int(j), int(v)) for j, v in self.support))
        for j, v in items:
            if j < 1:
                raise ValueError(f"support index must be positive, got {j}")
            if v == 1:
                raise ValueError("identity values are not stored")
        if len({j for j, _ in items}) != len(items):
            raise ValueError("duplicate support index")
        object.__setattr__(self, "support", items)

    @classmethod
    def of(cls, mapping: Mapping[int, int]) -> "FinSuppElement":
        """Build from ``{index: value}``, dropping identity entries."""
        return cls(tuple((j, v) for j, v in mapping.items() if v != 1))

    def __getitem__(self, j: int) -> int:
        return dict(self.support).get(j, 1)

    def as_dict(self) -> dict[int, int]:
        return dict(self.support)

    def __str__(self):
        if not self.support:
            return "1"
        return "{" + ", ".join(f"{j}: {v}" for j, v in self.support) + "}"


IDENTITY = FinSuppElement()


def _relabel_to_one(t: CayleyTable, e: int) -> tuple[CayleyTable, Permutation]:
    """Table isomorphic to ``t`` with identity 1, plus the transposition used."""
    images = list(range(1, t.n + 1))
    images[0], images[e - 1] = e, 1
    swap = Permutation(tuple(images))
    return apply_iso(t, swap).renamed(t.name), swap


@dataclass(frozen=True)
class LoopPair:
    star: CayleyTable
    dot: CayleyTable
    f: Permutation
    witness: tuple[int, int]

    @classmethod
    def build(cls, star: CayleyTable, dot: CayleyTable, f: Permutation) -> "LoopPair":
        """Validate and normalise: both identities become 1, ``f`` is conjugated to match."""
        check_same_order(star, dot, f)
        ca, cb = classify(star), classify(dot)
        if not (ca.is_loop and cb.is_loop):
            raise PreconditionError("both tables must be loops")
        star1, sa = _relabel_to_one(star, ca.identity)
        dot1, sb = _relabel_to_one(dot, cb.identity)
        g = sb.inverse() * f * sa
        verdict = specialness(star1, dot1, g)
        if not verdict.is_half_iso:
            raise PreconditionError("f is not a half-isomorphism between the loops")
        if verdict.is_special:
            raise PreconditionError("f is special; the construction needs a non-special one")
        return cls(star1, dot1, g, verdict.nonspecial_witness)

    @property
    def n(self) -> int:
        return self.star.n


def product(p: LoopPair, a: FinSuppElement, b: FinSuppElement) -> FinSuppElement:
    da, db = a.as_dict(), b.as_dict()
    out = {}
    for j in set(da) | set(db):
        table = p.star if j % 2 else p.dot
        out[j] = table.entry(da.get(j, 1), db.get(j, 1))
    return FinSuppElement.of(out)


def phi(p: LoopPair, a: FinSuppElement) -> FinSuppElement:
    out = {}
    for j, v in a.support:
        if j == 1:
            out[2] = p.f(v)
        elif j % 2:
            out[j - 2] = v
        else:
            out[j + 2] = v
    return FinSuppElement.of(out)


def phi_inverse(p: LoopPair, a: FinSuppElement) -> FinSuppElement:
    finv = p.f.inverse()
    out = {}
    for j, v in a.support:
        if j == 2:
            out[1] = finv(v)
        elif j % 2:
            out[j + 2] = v
        else:
            out[j - 2] = v
    return FinSuppElement.of(out)


def half_condition(p: LoopPair, mapping, a: FinSuppElement, b: FinSuppElement) -> bool:
    """``mapping(a•b)`` equals ``mapping(a)•mapping(b)`` or ``mapping(b)•mapping(a)``."""
    lhs = mapping(p, product(p, a, b))
    ma, mb = mapping(p, a), mapping(p, b)
    return lhs == product(p, ma, mb) or lhs == product(p, mb, ma)


def random_element(p: LoopPair, rng: np.random.Generator, max_index: int = SAMPLE_MAX_INDEX) -> FinSuppElement:
    values = rng.integers(1, p.n + 1, size=max_index)
    return FinSuppElement.of({j + 1: int(v) for j, v in enumerate(values)})


def sample_pairs(p: LoopPair, samples: int, seed: int, max_index: int = SAMPLE_MAX_INDEX):
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        yield random_element(p, rng, max_index), random_element(p, rng, max_index)


def find_phi_violation(
    p: LoopPair, samples: int, seed: int
) -> Optional[tuple[FinSuppElement, FinSuppElement]]:
    """First sampled pair on which ``phi`` breaks the half-automorphism condition."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    for a, b in sample_pairs(p, samples, seed):
        if not half_condition(p, phi, a, b):
            return a, b
    return None


def verify_half_automorphism(p: LoopPair, samples: int, seed: int) -> bool:
    return find_phi_violation(p, samples, seed) is None


def nonspecial_witness_infinite(p: LoopPair) -> tuple[FinSuppElement, FinSuppElement]:
    """Elements carrying the finite witness at index 2, where ``phi⁻¹`` applies ``f⁻¹``."""
    x, y = p.witness
    a, b = FinSuppElement.of({2: x}), FinSuppElement.of({2: y})
    if half_condition(p, phi_inverse, a, b):
        raise PreconditionError(f"witness {p.witness} does not break the inverse condition")
    return a, b


def _division_tables(t: CayleyTable):
    # left[a][b] = x with a∘x = b ; right[a][b] = y with y∘a = b
    n = t.n
    left = np.empty((n, n), dtype=np.intp)
    right = np.empty((n, n), dtype=np.intp)
    op = t.op
    for a in range(n):
        left[a, op[a]] = np.arange(n)
        right[a, op[:, a]] = np.arange(n)
    return left, right


def left_divide(p: LoopPair, a: FinSuppElement, b: FinSuppElement) -> FinSuppElement:
    """The unique ``x`` with ``a•x = b``."""
    return _divide(p, a, b, side=0)


def right_divide(p: LoopPair, a: FinSuppElement, b: FinSuppElement) -> FinSuppElement:
    """The unique ``y`` with ``y•a = b``."""
    return _divide(p, a, b, side=1)


def _divide(p: LoopPair, a, b, side: int) -> FinSuppElement:
    tables = {1: _division_tables(p.star), 0: _division_tables(p.dot)}
    da, db = a.as_dict(), b.as_dict()
    out = {}
    for j in set(da) | set(db):
        div = tables[j % 2][side]
        out[j] = int(div[da.get(j, 1) - 1, db.get(j, 1) - 1]) + 1
    return FinSuppElement.of(out)


def right_bol_holds(p: LoopPair, x: FinSuppElement, y: FinSuppElement, z: FinSuppElement) -> bool:
    """``((xy)z)y == x((yz)y)``."""
    lhs = product(p, product(p, product(p, x, y), z), y)
    rhs = product(p, x, product(p, product(p, y, z), y))
    return lhs == rhs
