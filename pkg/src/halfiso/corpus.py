"""Built-in tables: the printed examples plus small group generators.

Printed tables are copied cell for cell. Generated group tables number the
elements in a fixed natural order with the identity as element 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import UnknownTableError
from .magma import CayleyTable, load_table


@dataclass(frozen=True)
class CorpusEntry:
    key: str
    table: CayleyTable
    provenance: str


_EX1_C6 = [
    [1, 2, 3, 4, 5, 6],
    [2, 3, 4, 5, 6, 1],
    [3, 4, 5, 6, 1, 2],
    [4, 5, 6, 1, 2, 3],
    [5, 6, 1, 2, 3, 4],
    [6, 1, 2, 3, 4, 5],
]

_EX1_L = [
    [1, 2, 3, 4, 5, 6],
    [2, 3, 4, 5, 6, 1],
    [3, 1, 5, 6, 4, 2],
    [4, 5, 6, 1, 2, 3],
    [5, 6, 1, 2, 3, 4],
    [6, 4, 2, 3, 1, 5],
]

_EX41_STAR = [
    [1, 2, 3, 4, 6, 5, 7, 8],
    [2, 1, 4, 3, 5, 6, 8, 7],
    [4, 3, 1, 2, 7, 8, 5, 6],
    [3, 4, 2, 1, 8, 7, 6, 5],
    [5, 6, 8, 7, 1, 2, 4, 3],
    [6, 5, 7, 8, 2, 1, 3, 4],
    [8, 7, 6, 5, 3, 4, 1, 2],
    [7, 8, 5, 6, 4, 3, 2, 1],
]

_EX41_DOT = [
    [1, 2, 4, 3, 6, 5, 7, 8],
    [2, 1, 3, 4, 5, 6, 8, 7],
    [3, 4, 1, 2, 7, 8, 5, 6],
    [4, 3, 2, 1, 8, 7, 6, 5],
    [5, 6, 8, 7, 1, 2, 4, 3],
    [6, 5, 7, 8, 2, 1, 3, 4],
    [8, 7, 6, 5, 3, 4, 1, 2],
    [7, 8, 5, 6, 4, 3, 2, 1],
]

_EX61_BOL = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, 1, 4, 6, 3, 5, 8, 7],
    [3, 4, 1, 2, 7, 8, 5, 6],
    [4, 3, 2, 8, 1, 7, 6, 5],
    [5, 6, 7, 1, 8, 2, 3, 4],
    [6, 5, 8, 7, 2, 1, 4, 3],
    [7, 8, 5, 3, 6, 4, 1, 2],
    [8, 7, 6, 5, 4, 3, 2, 1],
]

_EX61_D8 = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, 1, 4, 3, 6, 5, 8, 7],
    [3, 4, 1, 2, 7, 8, 5, 6],
    [4, 3, 2, 1, 8, 7, 6, 5],
    [5, 7, 6, 8, 1, 3, 2, 4],
    [6, 8, 5, 7, 2, 4, 1, 3],
    [7, 5, 8, 6, 3, 1, 4, 2],
    [8, 6, 7, 5, 4, 2, 3, 1],
]

_PRINTED = {
    "ex1-c6": (_EX1_C6, "printed table, cyclic group of order 6"),
    "ex1-L": (_EX1_L, "printed table, nonassociative loop half-isomorphic to ex1-c6"),
    "ex41-star": (_EX41_STAR, "printed table, noncommutative quasigroup of order 8"),
    "ex41-dot": (_EX41_DOT, "printed table, principal h-quasigroup of ex41-star"),
    "ex61-bol": (_EX61_BOL, "printed table, right Bol loop of order 8"),
    "ex61-d8": (_EX61_D8, "printed table, dihedral group of order 8 relabelled"),
}

PRINTED_KEYS = tuple(_PRINTED)

# Generated groups used as default corpus members in checks and demos.
GENERATED_KEYS = (
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:7",
    "cyclic:8",
    "dihedral:6",
    "dihedral:8",
    "symmetric:3",
    "quaternion:8",
)

MAX_PERM_DEGREE = 5


def cyclic_table(n: int) -> CayleyTable:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    ar = np.arange(n)
    return CayleyTable((ar[:, None] + ar[None, :]) % n, name=f"cyclic:{n}", zero_based=True)


def dihedral_table(order: int) -> CayleyTable:
    """Dihedral group of the given (even) order; element ``j*m + i`` is ``r^i s^j``."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be an even integer >= 2")
    m = order // 2
    op = np.empty((order, order), dtype=np.int64)
    for a, b in itertools.product(range(order), repeat=2):
        i, s = a % m, a // m
        k, t = b % m, b // m
        rot = (i + (k if s == 0 else -k)) % m
        op[a, b] = ((s + t) % 2) * m + rot
    return CayleyTable(op, name=f"dihedral:{order}", zero_based=True)


def _permutation_group(perms: list[tuple[int, ...]], name: str) -> CayleyTable:
    index = {p: i for i, p in enumerate(perms)}
    op = np.empty((len(perms), len(perms)), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            op[i, j] = index[tuple(p[q[k]] for k in range(len(q)))]
    return CayleyTable(op, name=name, zero_based=True)


def _is_even(p: tuple[int, ...]) -> bool:
    inversions = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return inversions % 2 == 0


def symmetric_table(n: int) -> CayleyTable:
    if not 1 <= n <= MAX_PERM_DEGREE:
        raise ValueError(f"symmetric degree must be in 1..{MAX_PERM_DEGREE}")
    return _permutation_group(list(itertools.permutations(range(n))), f"symmetric:{n}")


def alternating_table(n: int) -> CayleyTable:
    if not 1 <= n <= MAX_PERM_DEGREE:
        raise ValueError(f"alternating degree must be in 1..{MAX_PERM_DEGREE}")
    perms = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return _permutation_group(perms, f"alternating:{n}")


def quaternion_table() -> CayleyTable:
    # order: 1, -1, i, -i, j, -j, k, -k
    basis = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    index = {b: i for i, b in enumerate(basis)}
    op = np.empty((8, 8), dtype=np.int64)
    for a, (sa, ua) in enumerate(basis):
        for b, (sb, ub) in enumerate(basis):
            s, u = mult[(ua, ub)]
            op[a, b] = index[(sa * sb * s, u)]
    return CayleyTable(op, name="quaternion:8", zero_based=True)


_GENERATORS = {
    "cyclic": cyclic_table,
    "dihedral": dihedral_table,
    "symmetric": symmetric_table,
    "alternating": alternating_table,
}


def is_builtin_key(key: str) -> bool:
    if key in _PRINTED or key == "quaternion:8":
        return True
    family, sep, arg = key.partition(":")
    return bool(sep) and family in _GENERATORS and arg.isdigit()


def builtin_entry(key: str) -> CorpusEntry:
    if key in _PRINTED:
        rows, prov = _PRINTED[key]
        return CorpusEntry(key, CayleyTable(rows, name=key), prov)
    if key == "quaternion:8":
        return CorpusEntry(key, quaternion_table(), "generated quaternion group")
    family, sep, arg = key.partition(":")
    if sep and family in _GENERATORS and arg.isdigit():
        try:
            table = _GENERATORS[family](int(arg))
        except ValueError as exc:
            raise UnknownTableError(f"{key}: {exc}") from None
        return CorpusEntry(key, table, f"generated {family} group")
    raise UnknownTableError(f"unknown table key {key!r}")


def builtin(key: str) -> CayleyTable:
    return builtin_entry(key).table


def corpus(keys=None) -> list[CorpusEntry]:
    if keys is None:
        keys = PRINTED_KEYS + GENERATED_KEYS
    return [builtin_entry(k) for k in keys]


def resolve_table(arg: str) -> CayleyTable:
    """Corpus key or file path; keys win unless the argument starts with ``./``."""
    if not arg.startswith("./") and is_builtin_key(arg):
        return builtin(arg)
    if Path(arg).exists() or arg.startswith("./") or "/" in arg or arg.endswith(".txt"):
        return load_table(arg)
    raise UnknownTableError(f"unknown table key {arg!r} and no such file")
