"""Isomorphism search between Cayley tables.

Backtracking with two kinds of pruning: per-element invariants restrict the
candidate images, and every new assignment ``x -> v`` is propagated through
products (``x∘y`` must go to ``v·f(y)``) until a fixed point or a conflict.
"""

from __future__ import annotations

from typing import Optional

from .errors import CapExceededError
from .magma import CayleyTable, Permutation, check_same_order

ISO_CAP = 64


def _power_chain_length(row_of, x: int) -> int:
    seen = {x}
    s = x
    while True:
        s = row_of[s][x]
        if s in seen:
            return len(seen)
        seen.add(s)


def fingerprints(t: CayleyTable) -> list[tuple]:
    """Isomorphism-invariant signature of each element (0-based index)."""
    rows = t.rows()
    n = t.n
    cols = [[rows[y][x] for y in range(n)] for x in range(n)]
    square_roots = [0] * n
    for y in range(n):
        square_roots[rows[y][y]] += 1
    out = []
    for x in range(n):
        row, col = rows[x], cols[x]
        out.append(
            (
                row[x] == x,
                len(set(row)),
                len(set(col)),
                sum(1 for y in range(n) if row[y] == col[y]),
                sum(1 for y in range(n) if row[y] == y),
                sum(1 for y in range(n) if col[y] == y),
                sum(1 for y in range(n) if row[y] == x),
                square_roots[x],
                _power_chain_length(rows, x),
            )
        )
    return out


def is_isomorphic(a: CayleyTable, b: CayleyTable, cap: int = ISO_CAP) -> Optional[Permutation]:
    """An isomorphism ``f: a -> b`` (``f(x∘y) = f(x)·f(y)``), or ``None``."""
    n = check_same_order(a, b)
    if n > cap:
        raise CapExceededError(f"order {n} exceeds the isomorphism cap {cap}")
    fa, fb = fingerprints(a), fingerprints(b)
    if sorted(fa) != sorted(fb):
        return None
    A, B = a.rows(), b.rows()
    candidates = [[v for v in range(n) if fb[v] == fa[x]] for x in range(n)]

    img = [-1] * n
    inv = [-1] * n
    mapped: list[int] = []

    def assign(x0: int, v0: int) -> Optional[int]:
        """Propagate ``x0 -> v0``; returns the undo mark or None on conflict."""
        mark = len(mapped)
        stack = [(x0, v0)]
        while stack:
            x, v = stack.pop()
            if img[x] >= 0:
                if img[x] != v:
                    undo(mark)
                    return None
                continue
            if inv[v] >= 0 or fa[x] != fb[v]:
                undo(mark)
                return None
            img[x] = v
            inv[v] = x
            mapped.append(x)
            Ax, Bv = A[x], B[v]
            for y in mapped:
                w = img[y]
                stack.append((Ax[y], Bv[w]))
                stack.append((A[y][x], B[w][v]))
        return mark

    def undo(mark: int):
        while len(mapped) > mark:
            x = mapped.pop()
            inv[img[x]] = -1
            img[x] = -1

    def solve() -> bool:
        if len(mapped) == n:
            return True
        best, best_c = -1, None
        for x in range(n):
            if img[x] < 0:
                c = [v for v in candidates[x] if inv[v] < 0]
                if best_c is None or len(c) < len(best_c):
                    best, best_c = x, c
                    if len(c) <= 1:
                        break
        for v in best_c:
            mark = assign(best, v)
            if mark is None:
                continue
            if solve():
                return True
            undo(mark)
        return False

    if not solve():
        return None
    return Permutation.from_zero(img)
