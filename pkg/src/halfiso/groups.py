"""Automorphism, anti-automorphism and half-automorphism groups of a table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .analysis import (
    is_anti_isomorphism,
    is_isomorphism,
    is_special_half_isomorphism,
    search_half_isomorphisms,
)
from .errors import CommutativeInputError, PreconditionError
from .magma import CayleyTable, Permutation, check_same_order, is_commutative


@dataclass(frozen=True)
class HalfAutomorphismGroups:
    aut: tuple[Permutation, ...]
    ant: tuple[Permutation, ...]
    half_s: tuple[Permutation, ...]
    half: tuple[Permutation, ...]

    @property
    def index_mi(self) -> int:
        q, r = divmod(len(self.half_s), len(self.aut))
        if r:
            raise ArithmeticError("|Aut| does not divide |Half_S|")
        return q

    @property
    def half_t(self) -> tuple[Permutation, ...]:
        return tuple(sorted(set(self.aut) | set(self.ant)))


def half_groups(t: CayleyTable, cap: Optional[int] = None) -> HalfAutomorphismGroups:
    half = search_half_isomorphisms(t, t, "all", cap=cap)
    aut = [f for f in half if is_isomorphism(t, t, f)]
    ant = [f for f in half if is_anti_isomorphism(t, t, f)]
    half_s = [f for f in half if is_special_half_isomorphism(t, t, f)]
    return HalfAutomorphismGroups(tuple(aut), tuple(ant), tuple(half_s), tuple(half))


def is_group(perms: Iterable[Permutation]) -> bool:
    """Closure under composition and inverses (finite sets, so this suffices)."""
    s = set(perms)
    if not s:
        return False
    if any(f.inverse() not in s for f in s):
        return False
    return all(f * g in s for f in s for g in s)


def verify_prop22(t: CayleyTable, groups: Optional[HalfAutomorphismGroups] = None) -> bool:
    g = half_groups(t) if groups is None else groups
    trivial = set(g.aut) | set(g.ant)
    aut = set(g.aut)
    special_is_group = is_group(g.half_s)
    trivial_closed = all(f * h in trivial for f in trivial for h in trivial)
    normal = all(h.inverse() * f * h in aut for f in aut for h in trivial)
    half_group_iff = is_group(g.half) == (set(g.half) == set(g.half_s))
    return special_is_group and trivial_closed and normal and half_group_iff


def anti_automorphism_exists(t: CayleyTable, groups: Optional[HalfAutomorphismGroups] = None) -> bool:
    """Whether a noncommutative table has an anti-automorphism.

    Commutative tables raise :class:`CommutativeInputError`, since there every
    automorphism is also an anti-automorphism.
    """
    if is_commutative(t):
        raise CommutativeInputError("anti-automorphisms coincide with automorphisms on commutative tables")
    g = half_groups(t) if groups is None else groups
    if g.ant and len(g.ant) != len(g.aut):
        raise AssertionError(f"|Ant| = {len(g.ant)} differs from |Aut| = {len(g.aut)}")
    return bool(g.ant)


def conjugate(f: Permutation, g: Permutation) -> Permutation:
    """``f ∘ g ∘ f⁻¹``."""
    return f * g * f.inverse()


def index_relation_check(a: CayleyTable, b: CayleyTable, f: Permutation) -> bool:
    """Compare half-automorphism groups across a special half-isomorphism ``a -> b``.

    Checks ``|Half_S(a)| == |Half_S(b)|`` (equivalently
    ``|M_I(a)|·|Aut(a)| == |M_I(b)|·|Aut(b)|``) and that conjugation by ``f``
    maps ``Half(a)`` onto ``Half(b)`` and ``Half_S(a)`` onto ``Half_S(b)``.
    """
    check_same_order(a, b, f)
    if not is_special_half_isomorphism(a, b, f):
        raise PreconditionError("index relation needs a special half-isomorphism")
    ga, gb = half_groups(a), half_groups(b)
    if ga.index_mi * len(ga.aut) != gb.index_mi * len(gb.aut):
        return False
    half_map = {conjugate(f, g) for g in ga.half}
    special_map = {conjugate(f, g) for g in ga.half_s}
    return half_map == set(gb.half) and special_map == set(gb.half_s)
