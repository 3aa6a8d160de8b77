"""Independent reference computations used by the tests.

Everything here works straight from the definitions over all n! bijections
or all 2^m sign choices. None of it shares code with the search paths it
checks beyond reading ``CayleyTable.op``.
"""

import itertools

import numpy as np

from halfiso.magma import CayleyTable, Permutation


def all_permutations(n):
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def _grids(a, b, perms):
    lhs = perms[:, a.op]
    rhs = b.op[perms[:, :, None], perms[:, None, :]]
    return lhs, rhs


def brute_half_isos(a, b):
    """Sorted list of all half-isomorphisms a -> b."""
    perms = all_permutations(a.n)
    lhs, rhs = _grids(a, b, perms)
    ok = ((lhs == rhs) | (lhs == rhs.transpose(0, 2, 1))).all(axis=(1, 2))
    return [Permutation.from_zero(p) for p in perms[ok]]


def brute_isos(a, b):
    perms = all_permutations(a.n)
    lhs, rhs = _grids(a, b, perms)
    ok = (lhs == rhs).all(axis=(1, 2))
    return [Permutation.from_zero(p) for p in perms[ok]]


def brute_anti_isos(a, b):
    perms = all_permutations(a.n)
    lhs, rhs = _grids(a, b, perms)
    ok = (lhs == rhs.transpose(0, 2, 1)).all(axis=(1, 2))
    return [Permutation.from_zero(p) for p in perms[ok]]


def count_commuting(t):
    n = t.n
    return sum(1 for x in range(1, n + 1) for y in range(1, n + 1) if t(x, y) == t(y, x))


def is_latin_naive(rows):
    n = len(rows)
    full = set(range(n))
    return all(set(r) == full for r in rows) and all({rows[i][j] for i in range(n)} == full for j in range(n))


def brute_principal_quasigroups(t):
    """Latin members of M(t): every way of orienting each noncommuting unordered pair."""
    op = t.op
    n = t.n
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n) if op[x, y] != op[y, x]]
    m = len(pairs)
    masks = ((np.arange(2**m)[:, None] >> np.arange(m)[None, :]) & 1).astype(bool)
    tables = np.broadcast_to(op, (2**m, n, n)).copy()
    xs = np.array([p[0] for p in pairs], dtype=np.intp)
    ys = np.array([p[1] for p in pairs], dtype=np.intp)
    xy = op[xs, ys]
    yx = op[ys, xs]
    tables[:, xs, ys] = np.where(masks, yx, xy)
    tables[:, ys, xs] = np.where(masks, xy, yx)
    target = np.arange(n)
    latin = (np.sort(tables, axis=2) == target).all(axis=(1, 2)) & (
        np.sort(tables, axis=1) == target[:, None]
    ).all(axis=(1, 2))
    return {tables[i].astype(np.int16).tobytes() for i in np.flatnonzero(latin)}, m


def random_latin_square(n, rng):
    """Uniform-ish random Latin square by randomized backtracking (0-based rows)."""
    grid = [[-1] * n for _ in range(n)]

    def fill(k):
        if k == n * n:
            return True
        r, c = divmod(k, n)
        used = set(grid[r][:c]) | {grid[i][c] for i in range(r)}
        for v in rng.permutation(n).tolist():
            if v not in used:
                grid[r][c] = v
                if fill(k + 1):
                    return True
        grid[r][c] = -1
        return False

    fill(0)
    return grid


def random_noncommutative_quasigroup(n, rng):
    while True:
        rows = random_latin_square(n, rng)
        t = CayleyTable(rows, zero_based=True)
        if not np.array_equal(t.op, t.op.T):
            return t
