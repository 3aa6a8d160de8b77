"""Principal h-groupoids and principal h-quasigroups of a finite table.

For a noncommutative table ``t``, its principal h-groupoids are the tables on
the same carrier whose product set ``{x·y, y·x}`` agrees with ``{x*y, y*x}``
for every pair; there are ``2**((n*n - |K|) / 2)`` of them. The quasigroups
among them are indexed by one bit per equivalence class of noncommuting
ordered pairs, which is what :func:`pair_partition` computes.
"""

from __future__ import annotations

import itertools
import warnings
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .analysis import _search, commuting_mask, is_special_half_isomorphism
from .errors import CapExceededError, CommutativeInputError, PreconditionError, SizeMismatchError
from .groups import half_groups
from .isomorphism import is_isomorphic
from .magma import (
    CayleyTable,
    Permutation,
    apply_iso,
    brute_cap,
    check_same_order,
    classify,
    is_commutative,
    is_latin,
)

DEFAULT_R_CAP = 20


def is_principal_h_groupoid(base: CayleyTable, cand: CayleyTable) -> bool:
    check_same_order(base, cand)
    a, b = base.op, cand.op
    left = np.sort(np.stack([a, a.T]), axis=0)
    right = np.sort(np.stack([b, b.T]), axis=0)
    return bool((left == right).all())


@dataclass(frozen=True)
class PrincipalCount:
    """Sizes of the principal families as base-2 exponents."""

    log2_M: int
    r: int

    @property
    def log2_N(self) -> int:
        return self.r


def noncommuting_count(t: CayleyTable) -> int:
    return int(t.n * t.n - commuting_mask(t).sum())


def log2_principal_groupoids(t: CayleyTable) -> int:
    twice = noncommuting_count(t)
    if twice % 2:
        raise ArithmeticError("noncommuting pairs must come in swapped couples")
    return twice // 2


def principal_count(t: CayleyTable) -> PrincipalCount:
    if is_commutative(t):
        raise CommutativeInputError("principal families are defined for noncommutative tables")
    return PrincipalCount(log2_principal_groupoids(t), pair_partition(t).r)


@dataclass(frozen=True)
class PairPartition:
    """Equivalence classes of noncommuting ordered pairs (1-based).

    ``classes[i]`` is sorted and its first pair is the representative
    ``reps[i]``; classes are ordered by representative.
    """

    n: int
    classes: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def r(self) -> int:
        return len(self.classes)

    @property
    def reps(self) -> tuple[tuple[int, int], ...]:
        return tuple(c[0] for c in self.classes)

    def class_index(self) -> np.ndarray:
        """0-based ``n×n`` array: class number of each pair, ``-1`` on commuting pairs."""
        idx = np.full((self.n, self.n), -1, dtype=np.intp)
        for i, members in enumerate(self.classes):
            for x, y in members:
                idx[x - 1, y - 1] = i
        return idx

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def pair_partition(t: CayleyTable) -> PairPartition:
    """Union-find closure of the pair relation on noncommuting ordered pairs.

    Pairs are joined with their swap, and with any pair sharing the same
    left (or right) element whose two-sided product set overlaps theirs.
    Overlaps are found by bucketing pairs on each of their two products.
    """
    if is_commutative(t):
        raise CommutativeInputError("every pair commutes; there is nothing to partition")
    if not classify(t).is_quasigroup:
        warnings.warn("pair partition of a non-quasigroup: class sizes are not bounded below", stacklevel=2)
    rows = t.rows()
    n = t.n
    noncomm = [(x, y) for x in range(n) for y in range(n) if rows[x][y] != rows[y][x]]
    ds = DisjointSet(noncomm)
    for x, y in noncomm:
        ds.merge((x, y), (y, x))

    by_left: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    by_right: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    for x, y in noncomm:
        for value in (rows[x][y], rows[y][x]):
            by_left[(x, value)].append((x, y))
            by_right[(y, value)].append((x, y))
    for bucket in itertools.chain(by_left.values(), by_right.values()):
        first = bucket[0]
        for other in bucket[1:]:
            ds.merge(first, other)

    classes = sorted(
        tuple(sorted((x + 1, y + 1) for x, y in subset)) for subset in ds.subsets()
    )
    return PairPartition(n, tuple(classes))


@dataclass(frozen=True)
class SigmaVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("sigma entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


def sigma_table(t: CayleyTable, p: PairPartition, s) -> CayleyTable:
    """Swap ``x*y`` to ``y*x`` on every class whose bit is 1."""
    bits = s.bits if isinstance(s, SigmaVector) else tuple(s)
    if len(bits) != p.r:
        raise SizeMismatchError(f"sigma has length {len(bits)}, partition has {p.r} classes")
    if p.n != t.n:
        raise SizeMismatchError("partition and table orders differ")
    return _sigma_apply(t, p.class_index(), np.array(bits, dtype=bool))


def _sigma_apply(t: CayleyTable, idx: np.ndarray, bits: np.ndarray) -> CayleyTable:
    flip = np.zeros(idx.shape, dtype=bool)
    mask = idx >= 0
    flip[mask] = bits[idx[mask]]
    return CayleyTable(np.where(flip, t.op.T, t.op), zero_based=True)


def iter_sigma_tables(
    t: CayleyTable, p: Optional[PairPartition] = None, limit: Optional[int] = None
) -> Iterator[tuple[SigmaVector, CayleyTable]]:
    """``(sigma, Q_sigma)`` in lexicographic sigma order, at most ``limit`` of them."""
    p = pair_partition(t) if p is None else p
    idx = p.class_index()
    count = 0
    for bits in itertools.product((0, 1), repeat=p.r):
        if limit is not None and count >= limit:
            return
        yield SigmaVector(bits), _sigma_apply(t, idx, np.array(bits, dtype=bool))
        count += 1


def enumerate_N(
    t: CayleyTable, limit: Optional[int] = None, r_cap: int = DEFAULT_R_CAP
) -> list[CayleyTable]:
    """All principal h-quasigroups of a noncommutative quasigroup ``t``."""
    if not classify(t).is_quasigroup:
        raise PreconditionError("principal h-quasigroups are defined for quasigroups")
    p = pair_partition(t)
    if limit is None and p.r > r_cap:
        raise CapExceededError(
            f"r = {p.r} gives 2^{p.r} tables, above the cap 2^{r_cap}; pass an explicit limit"
        )
    out = []
    for sigma, q in iter_sigma_tables(t, p, limit):
        if not is_latin(q):
            raise AssertionError(f"sigma {sigma} produced a non-Latin table")
        out.append(q)
    return out


def enumerate_MI(t: CayleyTable, cap: Optional[int] = None) -> list[CayleyTable]:
    """Principal h-groupoids of ``t`` that are isomorphic to ``t``, sorted by table."""
    groups = half_groups(t, cap=cap)
    seen: dict[bytes, CayleyTable] = {}
    for f in groups.half_s:
        u = apply_iso(t, f)
        seen.setdefault(u.key(), u)
    out = [seen[k] for k in sorted(seen)]
    if len(out) != groups.index_mi:
        raise AssertionError(f"|M_I| = {len(out)} but [Half_S : Aut] = {groups.index_mi}")
    return out


def _first_special(a: CayleyTable, b: CayleyTable) -> Optional[Permutation]:
    for images in _search(a, b):
        f = Permutation.from_zero(images)
        if is_special_half_isomorphism(a, b, f):
            return f
    return None


def are_half_isomorphic(
    a: CayleyTable,
    b: CayleyTable,
    strategy: str = "auto",
    r_cap: int = DEFAULT_R_CAP,
    cap: Optional[int] = None,
) -> Optional[Permutation]:
    """A special half-isomorphism ``a -> b`` between quasigroups, or ``None``.

    ``strategy="sigma"`` runs over the principal h-quasigroups of ``a`` and
    looks for one isomorphic to ``b``; ``"search"`` backtracks directly over
    bijections; ``"auto"`` prefers the first when ``2**r`` is within the cap.
    """
    check_same_order(a, b)
    if not (classify(a).is_quasigroup and classify(b).is_quasigroup):
        raise PreconditionError("both tables must be quasigroups")
    limit = brute_cap() if cap is None else cap
    if strategy not in ("auto", "sigma", "search"):
        raise ValueError(f"unknown strategy {strategy!r}")

    if is_commutative(a):
        # the only principal h-groupoid of a commutative table is itself
        families = None
        r = 0
    else:
        families = pair_partition(a)
        r = families.r

    use_sigma = strategy == "sigma" or (strategy == "auto" and r <= r_cap)
    if use_sigma:
        if r > r_cap:
            raise CapExceededError(f"2^{r} principal h-quasigroups exceed the cap 2^{r_cap}")
        tables = [a] if families is None else (q for _, q in iter_sigma_tables(a, families))
        for q in tables:
            g = is_isomorphic(q, b)
            if g is not None:
                return g
        return None

    if a.n > limit:
        raise CapExceededError(
            f"r = {r} exceeds 2^{r_cap} and order {a.n} exceeds the search cap {limit}"
        )
    return _first_special(a, b)
