import pytest

from halfiso.corpus import builtin
from halfiso.errors import CommutativeInputError, PreconditionError
from halfiso.groups import (
    anti_automorphism_exists,
    conjugate,
    half_groups,
    index_relation_check,
    is_group,
    verify_prop22,
)
from halfiso.magma import Permutation, is_commutative
from halfiso.analysis import is_special_half_isomorphism, search_half_isomorphisms

from oracles import brute_anti_isos, brute_isos


def test_ex41_counts(ex41):
    star, dot = ex41
    gs, gd = half_groups(star), half_groups(dot)
    assert len(gs.aut) == 4 and len(gs.half) == 48 and gs.index_mi == 12
    assert len(gd.aut) == 8 and gd.index_mi == 6
    assert gs.index_mi * len(gs.aut) == gd.index_mi * len(gd.aut) == 48


def test_aut_and_ant_match_brute_force(corpus_tables):
    for key, t in corpus_tables.items():
        g = half_groups(t)
        assert list(g.aut) == brute_isos(t, t), key
        assert list(g.ant) == brute_anti_isos(t, t), key


def test_order_one():
    g = half_groups(builtin("cyclic:1"))
    e = (Permutation.identity(1),)
    assert g.aut == g.ant == g.half_s == g.half == e


def test_structure_invariants(corpus_tables):
    for key, t in corpus_tables.items():
        g = half_groups(t)
        aut, ant, hs, h = map(set, (g.aut, g.ant, g.half_s, g.half))
        assert aut <= hs <= h and ant <= hs
        if not is_commutative(t):
            assert not aut & ant
        assert Permutation.identity(t.n) in aut
        assert len(hs) % len(aut) == 0
        assert h == hs, key
        assert is_group(hs)
        if ant:
            assert len(ant) == len(aut)
        assert verify_prop22(t, g), key
        assert list(g.half) == sorted(g.half)


def test_d8_half_is_twice_aut():
    g = half_groups(builtin("dihedral:8"))
    assert len(g.half) == 2 * len(g.aut) == 16
    assert set(g.half) == set(g.half_t)


@pytest.mark.parametrize("key, count", [("dihedral:8", 8), ("symmetric:3", 6), ("quaternion:8", 24)])
def test_groups_have_anti_automorphisms(key, count):
    t = builtin(key)
    assert anti_automorphism_exists(t)
    g = half_groups(t)
    assert len(g.ant) == len(g.aut) == count
    inversion = Permutation(tuple(next(y for y in range(1, t.n + 1) if t(x, y) == 1) for x in range(1, t.n + 1)))
    assert inversion in g.ant


def test_ex41_has_no_anti_automorphisms(ex41):
    star = ex41[0]
    assert anti_automorphism_exists(star) == bool(brute_anti_isos(star, star))
    assert not anti_automorphism_exists(star)


def test_commutative_input_is_rejected():
    with pytest.raises(CommutativeInputError):
        anti_automorphism_exists(builtin("cyclic:4"))


def test_index_relation(ex41):
    star, dot = ex41
    assert index_relation_check(star, dot, Permutation.identity(8))
    assert index_relation_check(star, star, Permutation.identity(8))
    s3 = builtin("symmetric:3")
    for f in half_groups(s3).ant:
        assert index_relation_check(s3, s3, f)


def test_index_relation_needs_special(ex1):
    with pytest.raises(PreconditionError):
        index_relation_check(*ex1, Permutation.identity(6))


def test_conjugation_carries_half_groups(corpus_tables):
    keys = [k for k, t in corpus_tables.items() if t.n == 8]
    for ka in keys:
        for kb in keys:
            a, b = corpus_tables[ka], corpus_tables[kb]
            special = search_half_isomorphisms(a, b, "special_only")
            if not special:
                continue
            f = special[0]
            assert is_special_half_isomorphism(a, b, f)
            ha, hb = half_groups(a), half_groups(b)
            assert {conjugate(f, g) for g in ha.half} == set(hb.half)
            assert {conjugate(f, g) for g in ha.half_s} == set(hb.half_s)


def test_aut_not_preserved_by_half_isomorphy(ex41):
    star, dot = ex41
    assert is_special_half_isomorphism(star, dot, Permutation.identity(8))
    assert len(half_groups(star).aut) != len(half_groups(dot).aut)
