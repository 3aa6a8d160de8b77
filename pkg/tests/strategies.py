import numpy as np
from hypothesis import strategies as st

from halfiso.magma import CayleyTable, Permutation


@st.composite
def tables(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    return CayleyTable(rows, zero_based=True)


@st.composite
def latin_squares(draw, min_n=1, max_n=7):
    """Isotopes of cyclic groups: permuted rows, columns and symbols."""
    n = draw(st.integers(min_n, max_n))
    rp = draw(st.permutations(range(n)))
    cp = draw(st.permutations(range(n)))
    sp = np.array(draw(st.permutations(range(n))))
    base = (np.array(rp)[:, None] + np.array(cp)[None, :]) % n
    return CayleyTable(sp[base], zero_based=True)


@st.composite
def table_and_perm(draw, source=tables):
    t = draw(source())
    f = Permutation.from_zero(draw(st.permutations(range(t.n))))
    return t, f
