"""Half-isomorphisms between finite groupoids: checks, specialness, search.

A bijection ``f: (G,*) -> (G',·)`` is a half-isomorphism when
``f(x*y)`` is one of ``f(x)·f(y)`` or ``f(y)·f(x)`` for every pair. It is
special when ``f⁻¹`` is one as well. For finite tables the cheapest
equivalent test of specialness is that commuting pairs go to commuting pairs,
which is what :func:`specialness` uses; the other three equivalent
formulations are evaluated separately by :func:`specialness_criteria`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Optional

import numpy as np

from .errors import CapExceededError, PreconditionError
from .magma import CayleyTable, Permutation, brute_cap, check_same_order


@dataclass(frozen=True)
class CommutingSet:
    """Ordered commuting pairs of a table, packed into an int bit-set.

    Bit ``(x-1)*n + (y-1)`` is set iff ``x∘y == y∘x``.
    """

    n: int
    bits: int

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def __len__(self):
        return self.size

    def __contains__(self, pair) -> bool:
        x, y = pair
        if not (1 <= x <= self.n and 1 <= y <= self.n):
            return False
        return bool(self.bits >> ((x - 1) * self.n + (y - 1)) & 1)

    def pairs(self) -> frozenset[tuple[int, int]]:
        out = set()
        bits, k = self.bits, 0
        while bits:
            if bits & 1:
                out.add((k // self.n + 1, k % self.n + 1))
            bits >>= 1
            k += 1
        return frozenset(out)

    def degree(self, x: int) -> int:
        row = (self.bits >> ((x - 1) * self.n)) & ((1 << self.n) - 1)
        return row.bit_count()


def commuting_mask(t: CayleyTable) -> np.ndarray:
    """Boolean ``n×n`` mask of commuting pairs (0-based)."""
    return t.op == t.op.T


def commuting_set(t: CayleyTable) -> CommutingSet:
    bits = 0
    for k in np.flatnonzero(commuting_mask(t)).tolist():
        bits |= 1 << k
    return CommutingSet(t.n, bits)


def commutation_degrees(t: CayleyTable) -> list[int]:
    return commuting_mask(t).sum(axis=1).tolist()


def _images(f: Permutation) -> np.ndarray:
    return np.array(f.zero, dtype=np.intp)


def _product_grids(a: CayleyTable, b: CayleyTable, f: Permutation):
    """``lhs[x,y] = f(x*y)`` and ``rhs[x,y] = f(x)·f(y)``, 0-based."""
    fz = _images(f)
    lhs = fz[a.op]
    rhs = b.op[np.ix_(fz, fz)]
    return lhs, rhs


def is_half_isomorphism(a: CayleyTable, b: CayleyTable, f: Permutation) -> bool:
    check_same_order(a, b, f)
    lhs, rhs = _product_grids(a, b, f)
    return bool(((lhs == rhs) | (lhs == rhs.T)).all())


def is_isomorphism(a: CayleyTable, b: CayleyTable, f: Permutation) -> bool:
    check_same_order(a, b, f)
    lhs, rhs = _product_grids(a, b, f)
    return bool((lhs == rhs).all())


def is_anti_isomorphism(a: CayleyTable, b: CayleyTable, f: Permutation) -> bool:
    check_same_order(a, b, f)
    lhs, rhs = _product_grids(a, b, f)
    return bool((lhs == rhs.T).all())


def _criterion_c(a: CayleyTable, b: CayleyTable, f: Permutation) -> bool:
    _, rhs = _product_grids(a, b, f)
    return bool((rhs == rhs.T)[commuting_mask(a)].all())


def inverse_violations(a: CayleyTable, b: CayleyTable, f: Permutation) -> list[tuple[int, int]]:
    """Codomain pairs ``(x, y)`` where ``f⁻¹`` breaks the half-isomorphism condition."""
    g = f.inverse()
    lhs, rhs = _product_grids(b, a, g)
    bad = ~((lhs == rhs) | (lhs == rhs.T))
    return [(int(x) + 1, int(y) + 1) for x, y in zip(*np.nonzero(bad))]


def _pick_witness(violations: list[tuple[int, int]]) -> Optional[tuple[int, int]]:
    # Prefer the least pair with x <= y; otherwise the least pair overall.
    if not violations:
        return None
    upper = [p for p in violations if p[0] <= p[1]]
    return min(upper) if upper else min(violations)


@dataclass(frozen=True)
class HalfIsoVerdict:
    is_half_iso: bool
    is_special: bool
    is_isomorphism: bool
    is_anti_isomorphism: bool
    nonspecial_witness: Optional[tuple[int, int]] = None


def specialness(a: CayleyTable, b: CayleyTable, f: Permutation) -> HalfIsoVerdict:
    """Classify ``f: a -> b``; all flags are false when ``f`` is not a half-isomorphism."""
    check_same_order(a, b, f)
    if not is_half_isomorphism(a, b, f):
        return HalfIsoVerdict(False, False, False, False, None)
    special = _criterion_c(a, b, f)
    witness = None if special else _pick_witness(inverse_violations(a, b, f))
    return HalfIsoVerdict(
        is_half_iso=True,
        is_special=special,
        is_isomorphism=is_isomorphism(a, b, f),
        is_anti_isomorphism=is_anti_isomorphism(a, b, f),
        nonspecial_witness=witness,
    )


def is_special_half_isomorphism(a: CayleyTable, b: CayleyTable, f: Permutation) -> bool:
    return is_half_isomorphism(a, b, f) and _criterion_c(a, b, f)


def _require_half_iso(a, b, f):
    check_same_order(a, b, f)
    if not is_half_isomorphism(a, b, f):
        raise PreconditionError("permutation is not a half-isomorphism between the tables")


def psi_image(a: CayleyTable, b: CayleyTable, f: Permutation) -> frozenset[tuple[int, int]]:
    """Pull back the commuting pairs of ``b`` along ``f``: ``{(f⁻¹x, f⁻¹y)}``."""
    _require_half_iso(a, b, f)
    g = f.inverse()
    return frozenset((g(x), g(y)) for x, y in commuting_set(b).pairs())


@dataclass(frozen=True)
class SpecialnessCriteria:
    inverse_is_half_iso: bool
    product_sets_equal: bool
    commuting_preserved: bool
    psi_bijective: bool

    @property
    def values(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.inverse_is_half_iso,
            self.product_sets_equal,
            self.commuting_preserved,
            self.psi_bijective,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.values)) == 1


def specialness_criteria(a: CayleyTable, b: CayleyTable, f: Permutation) -> SpecialnessCriteria:
    """Evaluate the four equivalent specialness criteria independently."""
    _require_half_iso(a, b, f)
    inv_ok = is_half_isomorphism(b, a, f.inverse())

    lhs, rhs = _product_grids(a, b, f)
    left = np.sort(np.stack([lhs, lhs.T]), axis=0)
    right = np.sort(np.stack([rhs, rhs.T]), axis=0)
    sets_equal = bool((left == right).all())

    preserved = _criterion_c(a, b, f)
    bijective = psi_image(a, b, f) == commuting_set(a).pairs()
    return SpecialnessCriteria(inv_ok, sets_equal, preserved, bijective)


def check_theorem31_agreement(a: CayleyTable, b: CayleyTable, f: Permutation) -> bool:
    return specialness_criteria(a, b, f).agree


def _search(a: CayleyTable, b: CayleyTable) -> Iterator[tuple[int, ...]]:
    """Backtracking over partial bijections; yields 0-based image tuples."""
    n = a.n
    A, B = a.rows(), b.rows()
    deg_a = commutation_degrees(a)
    deg_b = commutation_degrees(b)
    # pulling back commuting pairs is injective, so deg_b(f(x)) <= deg_a(x)
    order = sorted(range(n), key=lambda x: (-deg_a[x], x))
    candidates = [[v for v in range(n) if deg_b[v] <= deg_a[x]] for x in range(n)]
    preimages: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            preimages[A[p][q]].append((p, q))

    img = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def consistent(x: int) -> bool:
        v = img[x]
        Bv = B[v]
        Ax = A[x]
        for y in assigned:
            w = img[y]
            iz = img[Ax[y]]
            if iz >= 0 and iz != Bv[w] and iz != B[w][v]:
                return False
            iz = img[A[y][x]]
            if iz >= 0 and iz != B[w][v] and iz != Bv[w]:
                return False
        for p, q in preimages[x]:
            ip, iq = img[p], img[q]
            if ip >= 0 and iq >= 0 and v != B[ip][iq] and v != B[iq][ip]:
                return False
        return True

    def extend(depth: int):
        if depth == n:
            yield tuple(img)
            return
        x = order[depth]
        assigned.append(x)
        for v in candidates[x]:
            if used[v]:
                continue
            img[x] = v
            used[v] = True
            if consistent(x):
                yield from extend(depth + 1)
            img[x] = -1
            used[v] = False
        assigned.pop()

    yield from extend(0)


SearchMode = Literal["all", "special_only", "first"]


def search_half_isomorphisms(
    a: CayleyTable, b: CayleyTable, mode: SearchMode = "all", cap: Optional[int] = None
) -> list[Permutation]:
    """All half-isomorphisms ``a -> b`` (or the first, or only special ones), sorted."""
    n = check_same_order(a, b)
    limit = brute_cap() if cap is None else cap
    if n > limit:
        raise CapExceededError(f"order {n} exceeds the search cap {limit} (set HISO_BRUTE_CAP)")
    if mode not in ("all", "special_only", "first"):
        raise ValueError(f"unknown search mode {mode!r}")

    found = []
    for images in _search(a, b):
        f = Permutation.from_zero(images)
        if mode == "special_only" and not _criterion_c(a, b, f):
            continue
        found.append(f)
        if mode == "first":
            break
    found.sort()
    return found
