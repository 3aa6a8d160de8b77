"""Finite binary operations as Cayley tables, and permutations of their carriers.

Elements are the integers ``1..n``. Row index is the left operand, so
``table.entry(r, c) == r∘c``. Internally the table is kept as a read-only
0-based ``numpy`` array (``table.op``) which is what the search code indexes.
"""

from __future__ import annotations

import enum
import os
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import PermutationFormatError, SizeMismatchError, TableFormatError

DEFAULT_BRUTE_CAP = 10


def brute_cap() -> int:
    """Largest order for n!-style searches; ``HISO_BRUTE_CAP`` overrides it."""
    raw = os.environ.get("HISO_BRUTE_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_BRUTE_CAP
    return int(raw)


class CayleyTable:
    """Immutable Cayley table of a binary operation on ``{1..n}``."""

    __slots__ = ("_op", "name", "_rows")

    def __init__(self, entries, name: Optional[str] = None, *, zero_based: bool = False):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise SizeMismatchError(f"table must be a nonempty square array, got shape {arr.shape}")
        if not zero_based:
            arr = arr - 1
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError(f"table entries must lie in 1..{n}")
        arr = arr.astype(np.int16)
        arr.setflags(write=False)
        self._op = arr
        self.name = name
        self._rows = None

    @property
    def n(self) -> int:
        return self._op.shape[0]

    @property
    def op(self) -> np.ndarray:
        """0-based read-only operation array."""
        return self._op

    @property
    def entries(self) -> np.ndarray:
        """1-based copy of the table, as printed."""
        return self._op.astype(np.int64) + 1

    def rows(self) -> list[list[int]]:
        """0-based nested lists; faster than numpy for scalar lookups in search loops."""
        if self._rows is None:
            self._rows = self._op.tolist()
        return self._rows

    def entry(self, r: int, c: int) -> int:
        return int(self._op[r - 1, c - 1]) + 1

    def __call__(self, x: int, y: int) -> int:
        return self.entry(x, y)

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._op, other._op))

    def __hash__(self):
        return hash((self.n, self._op.tobytes()))

    def key(self) -> bytes:
        return self._op.tobytes()

    def renamed(self, name: Optional[str]) -> "CayleyTable":
        return CayleyTable(self._op, name=name, zero_based=True)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<CayleyTable{label} n={self.n}>"


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i-1] == f(i)``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise PermutationFormatError(f"not a bijection of 1..{len(imgs)}: {imgs}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_zero(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(int(v) + 1 for v in images))

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def zero(self) -> tuple[int, ...]:
        return tuple(v - 1 for v in self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (f * g)(x) = f(g(x))
        if self.n != other.n:
            raise SizeMismatchError("cannot compose permutations of different order")
        return Permutation(tuple(self.images[g - 1] for g in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __str__(self):
        return " ".join(map(str, self.images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(s: str, n: int) -> Permutation:
    """Parse an image list ``"2 1 3"`` or cycle notation ``"(3 5 7)(4 6 8)"``."""
    text = s.strip()
    if not text:
        raise PermutationFormatError("empty permutation string")
    if text.startswith("("):
        if _CYCLE_RE.sub("", text).strip():
            raise PermutationFormatError(f"malformed cycle notation: {s!r}")
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for body in _CYCLE_RE.findall(text):
            items = body.replace(",", " ").split()
            try:
                cyc = [int(v) for v in items]
            except ValueError:
                raise PermutationFormatError(f"non-integer in cycle: {body!r}") from None
            for v in cyc:
                if not 1 <= v <= n:
                    raise PermutationFormatError(f"value {v} out of range 1..{n}")
                if v in seen:
                    raise PermutationFormatError(f"repeated value {v}")
                seen.add(v)
            for i, v in enumerate(cyc):
                images[v - 1] = cyc[(i + 1) % len(cyc)]
        return Permutation(tuple(images))

    try:
        values = [int(v) for v in text.split()]
    except ValueError:
        raise PermutationFormatError(f"malformed image list: {s!r}") from None
    if len(values) != n:
        raise PermutationFormatError(f"expected {n} images, got {len(values)}")
    for v in values:
        if not 1 <= v <= n:
            raise PermutationFormatError(f"value {v} out of range 1..{n}")
    if len(set(values)) != n:
        dup = next(v for v in values if values.count(v) > 1)
        raise PermutationFormatError(f"repeated value {dup}")
    return Permutation(tuple(values))


class Kind(enum.Enum):
    GROUPOID = "groupoid"
    QUASIGROUP = "quasigroup"
    LOOP = "loop"


@dataclass(frozen=True)
class AlgebraClass:
    kind: Kind
    identity: Optional[int] = None

    def __post_init__(self):
        if (self.kind is Kind.LOOP) != (self.identity is not None):
            raise ValueError("identity is present exactly for loops")

    @property
    def is_quasigroup(self) -> bool:
        return self.kind in (Kind.QUASIGROUP, Kind.LOOP)

    @property
    def is_loop(self) -> bool:
        return self.kind is Kind.LOOP


def is_latin(t: CayleyTable) -> bool:
    op = t.op
    target = np.arange(t.n)
    return bool(
        (np.sort(op, axis=1) == target).all() and (np.sort(op, axis=0) == target[:, None]).all()
    )


def identity_element(t: CayleyTable) -> Optional[int]:
    """1-based two-sided identity, if any."""
    op = t.op
    ar = np.arange(t.n)
    for e in range(t.n):
        if np.array_equal(op[e], ar) and np.array_equal(op[:, e], ar):
            return e + 1
    return None


def classify(t: CayleyTable) -> AlgebraClass:
    if not is_latin(t):
        return AlgebraClass(Kind.GROUPOID)
    e = identity_element(t)
    if e is None:
        return AlgebraClass(Kind.QUASIGROUP)
    return AlgebraClass(Kind.LOOP, e)


def is_associative(t: CayleyTable) -> bool:
    op = t.op.astype(np.intp)
    # left[x, y, z] = (x∘y)∘z ; right[x, y, z] = x∘(y∘z)
    left = op[op]
    right = op[:, op]
    return bool(np.array_equal(left, right))


def is_commutative(t: CayleyTable) -> bool:
    return bool(np.array_equal(t.op, t.op.T))


def transpose(t: CayleyTable) -> CayleyTable:
    name = f"{t.name}^T" if t.name else None
    return CayleyTable(t.op.T, name=name, zero_based=True)


def apply_iso(t: CayleyTable, f: Permutation) -> CayleyTable:
    """Table ``u`` with ``u(x, y) = f⁻¹(t(f(x), f(y)))``; ``f`` is then an isomorphism u → t."""
    if f.n != t.n:
        raise SizeMismatchError(f"permutation of order {f.n} on table of order {t.n}")
    fz = np.array(f.zero, dtype=np.intp)
    finv = np.empty_like(fz)
    finv[fz] = np.arange(t.n)
    return CayleyTable(finv[t.op[np.ix_(fz, fz)]], zero_based=True)


def parse_table(text: str, name: Optional[str] = None) -> CayleyTable:
    """Parse the plain-text table format (``#`` comments, order line, n rows)."""
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.split("\n"), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise TableFormatError("missing order line")
    no, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise TableFormatError(f"malformed header {header!r}, expected the order n", no) from None
    if n < 1:
        raise TableFormatError(f"order must be positive, got {n}", no)
    body = lines[1:]
    if len(body) != n:
        raise TableFormatError(f"expected {n} rows, found {len(body)}")
    rows = []
    for no, line in body:
        fields = line.split()
        if len(fields) != n:
            raise TableFormatError(f"expected {n} entries, found {len(fields)}", no)
        row = []
        for col, field in enumerate(fields, start=1):
            try:
                v = int(field)
            except ValueError:
                raise TableFormatError(f"non-integer entry {field!r}", no, col) from None
            if not 1 <= v <= n:
                raise TableFormatError(f"entry {v} out of range 1..{n}", no, col)
            row.append(v)
        rows.append(row)
    return CayleyTable(rows, name=name)


def format_table(t: CayleyTable) -> str:
    """Canonical text form: order line then rows, single spaces, LF endings."""
    out = [str(t.n)]
    out.extend(" ".join(map(str, row)) for row in t.entries.tolist())
    return "\n".join(out) + "\n"


def load_table(path, name: Optional[str] = None) -> CayleyTable:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    return parse_table(text, name=name if name is not None else str(path))


def check_same_order(*items: Sequence) -> int:
    sizes = {x.n for x in items}
    if len(sizes) != 1:
        raise SizeMismatchError(f"order mismatch: {sorted(sizes)}")
    return sizes.pop()
