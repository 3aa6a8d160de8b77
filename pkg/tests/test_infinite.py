import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from halfiso.corpus import builtin
from halfiso.errors import PreconditionError
from halfiso.infinite import (
    IDENTITY,
    FinSuppElement,
    LoopPair,
    find_phi_violation,
    half_condition,
    left_divide,
    nonspecial_witness_infinite,
    phi,
    phi_inverse,
    product,
    random_element,
    right_bol_holds,
    right_divide,
    verify_half_automorphism,
)
from halfiso.magma import CayleyTable, Permutation, apply_iso, parse_permutation


@pytest.fixture(scope="module")
def pair1():
    return LoopPair.build(builtin("ex1-c6"), builtin("ex1-L"), Permutation.identity(6))


@pytest.fixture(scope="module")
def pair61():
    return LoopPair.build(builtin("ex61-bol"), builtin("ex61-d8"), parse_permutation("(3 5 7)(4 6 8)", 8))


def elements(n, max_index=12):
    return st.dictionaries(st.integers(1, max_index), st.integers(1, n), max_size=max_index).map(FinSuppElement.of)


def test_element_invariants():
    assert FinSuppElement.of({3: 1, 2: 5}).support == ((2, 5),)
    with pytest.raises(ValueError):
        FinSuppElement(((1, 1),))
    with pytest.raises(ValueError):
        FinSuppElement(((0, 2),))
    assert FinSuppElement.of({4: 2})[4] == 2 and FinSuppElement.of({4: 2})[5] == 1


def test_product_examples(pair1):
    assert product(pair1, IDENTITY, IDENTITY) == IDENTITY
    x, y = 3, 2
    odd = product(pair1, FinSuppElement.of({1: x}), FinSuppElement.of({1: y}))
    even = product(pair1, FinSuppElement.of({2: x}), FinSuppElement.of({2: y}))
    assert odd == FinSuppElement.of({1: pair1.star(x, y)})
    assert even == FinSuppElement.of({2: pair1.dot(x, y)})
    assert odd != FinSuppElement.of({1: pair1.dot(x, y)})


def test_phi_examples(pair61):
    f = pair61.f
    assert phi(pair61, IDENTITY) == IDENTITY
    assert phi(pair61, FinSuppElement.of({1: 3})) == FinSuppElement.of({2: f(3)})
    assert phi(pair61, FinSuppElement.of({3: 3})) == FinSuppElement.of({1: 3})
    assert phi(pair61, FinSuppElement.of({2: 3})) == FinSuppElement.of({4: 3})


@settings(max_examples=100)
@given(st.data())
def test_phi_is_bijective(pair61, data):
    a = data.draw(elements(pair61.n))
    assert phi_inverse(pair61, phi(pair61, a)) == a
    assert phi(pair61, phi_inverse(pair61, a)) == a


@settings(max_examples=100)
@given(st.data())
def test_loop_axioms_coordinatewise(pair61, data):
    a = data.draw(elements(pair61.n))
    b = data.draw(elements(pair61.n))
    assert product(pair61, IDENTITY, a) == a == product(pair61, a, IDENTITY)
    x = left_divide(pair61, a, b)
    assert product(pair61, a, x) == b
    y = right_divide(pair61, a, b)
    assert product(pair61, y, a) == b


@settings(max_examples=100)
@given(st.data())
def test_right_bol_on_samples(pair61, data):
    x, y, z = (data.draw(elements(pair61.n)) for _ in range(3))
    assert right_bol_holds(pair61, x, y, z)


@settings(max_examples=100)
@given(st.data())
def test_phi_is_a_shift_away_from_index_1(pair1, data):
    # without a first coordinate phi only moves coordinates of the same parity
    a = data.draw(elements(pair1.n).map(lambda e: FinSuppElement(tuple(p for p in e.support if p[0] > 1))))
    b = data.draw(elements(pair1.n).map(lambda e: FinSuppElement(tuple(p for p in e.support if p[0] > 1))))
    lhs = phi(pair1, product(pair1, a, b))
    assert lhs == product(pair1, phi(pair1, a), phi(pair1, b))


def test_identity_pair_satisfies_condition(pair1):
    assert half_condition(pair1, phi, IDENTITY, IDENTITY)


def test_phi_fails_when_orientations_clash(pair1):
    # coordinate 2 needs the swapped product, coordinate 4 the unswapped one
    a = FinSuppElement.of({1: 3, 2: 3})
    b = FinSuppElement.of({1: 2, 2: 2})
    lhs = phi(pair1, product(pair1, a, b))
    assert lhs == FinSuppElement.of({2: 4})
    assert product(pair1, phi(pair1, a), phi(pair1, b)) == IDENTITY
    assert product(pair1, phi(pair1, b), phi(pair1, a)) == FinSuppElement.of({2: 4, 4: 4})
    assert not half_condition(pair1, phi, a, b)


def test_phi_fails_on_samples_for_both_pairs(pair1, pair61):
    for p in (pair1, pair61):
        assert find_phi_violation(p, 10_000, seed=0) is not None
        assert not verify_half_automorphism(p, 10_000, seed=0)


def test_find_phi_violation_is_seeded(pair1):
    first = find_phi_violation(pair1, 500, seed=3)
    assert first == find_phi_violation(pair1, 500, seed=3)
    if first is not None:
        assert not half_condition(pair1, phi, *first)


def test_random_elements_reproducible(pair1):
    a = random_element(pair1, np.random.default_rng(9))
    b = random_element(pair1, np.random.default_rng(9))
    assert a == b and all(j <= 12 for j, _ in a.support)


def test_nonspecial_witness(pair1, pair61):
    assert pair1.witness == (3, 5)
    a, b = nonspecial_witness_infinite(pair1)
    assert a == FinSuppElement.of({2: 3}) and b == FinSuppElement.of({2: 5})
    assert not half_condition(pair1, phi_inverse, a, b)
    # the swapped order is not a witness: 5.3 = 1 = 5*3
    assert half_condition(pair1, phi_inverse, b, a)
    a, b = nonspecial_witness_infinite(pair61)
    assert not half_condition(pair61, phi_inverse, a, b)


def test_corrupted_pair_is_detected(pair1):
    broken = LoopPair(pair1.star, pair1.dot, pair1.f, (1, 1))
    with pytest.raises(PreconditionError):
        nonspecial_witness_infinite(broken)


def test_build_rejects_special_and_non_half_iso():
    c6 = builtin("ex1-c6")
    with pytest.raises(PreconditionError):
        LoopPair.build(c6, c6, Permutation.identity(6))
    with pytest.raises(PreconditionError):
        LoopPair.build(c6, builtin("ex1-L"), parse_permutation("(1 2)", 6))
    with pytest.raises(PreconditionError):
        LoopPair.build(builtin("ex41-star"), builtin("ex41-dot"), Permutation.identity(8))


def test_build_relabels_identity():
    c6, L = builtin("ex1-c6"), builtin("ex1-L")
    swap_a = parse_permutation("(1 4)", 6)
    swap_b = parse_permutation("(1 2)", 6)
    # move identities away from 1; f becomes swap_b^-1 . id . swap_a
    star = apply_iso(c6, swap_a)
    dot = apply_iso(L, swap_b)
    f = swap_b.inverse() * swap_a
    p = LoopPair.build(star, dot, f)
    assert p.star.entry(1, 3) == 3 and p.dot.entry(4, 1) == 4
    assert p.f(1) == 1
    a, b = nonspecial_witness_infinite(p)
    assert not half_condition(p, phi_inverse, a, b)
