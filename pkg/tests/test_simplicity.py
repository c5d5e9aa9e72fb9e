from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcluster.cluster import drop_coefficients, exchange_monomials, mutate_sequence
from qcluster.correspondence import build_model, initial_labels
from qcluster.laurent import LaurentPoly, mono_mul
from qcluster.model_d import initial_seed_d
from qcluster.qchar import (
    Label,
    height,
    is_trivial,
    label_monomial,
    prime_labels,
    qchar_simple,
    trunc_qchar_prime,
    window,
    ymonomial,
)
from qcluster.simplicity import (
    NoFactorization,
    all_factorizations,
    crossing_pair_a,
    decompose_tensor,
    factorize_simple,
    simple_pair,
    simple_product,
)

A2, D4 = height("A", 2), height("D", 4)


def _name(xi):
    return f"{xi.kind}{xi.n}"


SMALL = [height("A", n) for n in range(1, 5)] + [D4]


def product_monomial(xi, labels):
    m = ()
    for lab in labels:
        m = mono_mul(m, label_monomial(xi, lab))
    return m


def test_crossing_pair_examples():
    assert crossing_pair_a(0, 1, 1, 2)
    assert not crossing_pair_a(1, 1, 2, 2)
    assert not crossing_pair_a(1, 3, 1, 3)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_crossing_pair_is_symmetric(i, j, k, l):
    assert crossing_pair_a(i, j, k, l) == crossing_pair_a(k, l, i, j)


def test_simple_pair_examples():
    assert simple_pair(D4, Label(0, 1, True), Label(0, 2, True)).to_json() == {"simple": True, "case": "c"}
    assert simple_pair(D4, Label(3, 1), Label(0, 1, True)).to_json() == {"simple": True, "case": "e"}
    assert simple_pair(D4, Label(1, 0), Label(2, 1)).to_json() == {"simple": False, "case": "a"}
    assert simple_pair(A2, Label(0, 1), Label(1, 2)).to_json() == {"simple": False, "case": "A"}


def test_simple_pair_special_tags():
    assert simple_pair(A2, Label(0, 0), Label(1, 2)).case == "trivial"
    verdict = simple_pair(A2, Label(1, 1), Label(0, 2))
    assert verdict.simple and verdict.case == "frozen"


@pytest.mark.parametrize("xi", SMALL + [height("A", 5), height("D", 5)], ids=_name)
def test_simple_pair_is_symmetric_and_reflexive(xi):
    labs = prime_labels(xi)
    for p in labs:
        assert simple_pair(xi, p, p).simple
        for q in labs:
            assert simple_pair(xi, p, q).simple == simple_pair(xi, q, p).simple


@pytest.mark.parametrize("xi", SMALL, ids=_name)
def test_frozen_labels_are_simple_with_everything(xi):
    labs = prime_labels(xi)
    frozen = set(labs) - set(prime_labels(xi, frozen=False))
    assert frozen
    for f in frozen:
        assert all(simple_pair(xi, f, p).simple for p in labs)


def test_simple_product():
    assert simple_product(A2, [Label(1, 2)])
    assert simple_product(A2, [])
    assert not simple_product(A2, [Label(2, 2), Label(0, 1), Label(1, 2)])


@pytest.mark.parametrize("kind,n", [("A", n) for n in range(1, 6)] + [("D", 4), ("D", 5)])
def test_clusters_are_simple_products(kind, n):
    md = build_model(kind, n)
    xi = height(kind, n)
    for c in md.clusters():
        assert simple_product(xi, c)


def test_factorize_examples():
    xi = height("A", 4)
    assert factorize_simple(xi, ymonomial(xi, {(2, 2): 1, (3, 5): 1})) == (Label(2, 3),)
    m = ymonomial(A2, {(1, 1): 1, (2, 2): 1, (2, 4): 1})
    assert factorize_simple(A2, m, check_unique=True) == (Label(1, 3), Label(2, 2))
    m = ymonomial(D4, {(3, 0): 1, (4, 0): 1, (1, 4): 1, (2, 3): 1})
    assert factorize_simple(D4, m, check_unique=True) == (Label(1, 2, True),)
    assert factorize_simple(D4, LaurentPoly.mono(m)) == (Label(1, 2, True),)
    assert factorize_simple(A2, ()) == ()


def test_factorize_errors():
    with pytest.raises(NoFactorization):
        factorize_simple(A2, ymonomial(A2, {(1, 1): -1}))
    # outside the window
    with pytest.raises(NoFactorization):
        factorize_simple(A2, ymonomial(A2, {(1, 5): 1}))


def test_square_of_a_prime_has_one_factorization():
    m = ymonomial(A2, {(1, 1): 2, (2, 4): 2})
    assert all_factorizations(A2, m) == [(Label(1, 2), Label(1, 2))]


@pytest.mark.parametrize("xi", SMALL, ids=_name)
def test_factorization_round_trip(xi):
    labs = prime_labels(xi)
    for size in (1, 2, 3):
        for ms in combinations_with_replacement(labs, size):
            if simple_product(xi, ms):
                assert factorize_simple(xi, product_monomial(xi, ms)) == tuple(sorted(ms))


@pytest.mark.parametrize("xi", SMALL, ids=_name)
def test_realness(xi):
    coords = sorted(window(xi))
    for bits in product((0, 1), repeat=len(coords)):
        m = ymonomial(xi, dict(zip(coords, bits)))
        once = factorize_simple(xi, m)
        assert factorize_simple(xi, mono_mul(m, m)) == tuple(sorted(once + once))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=6, max_size=6))
def test_factorization_is_unique_a3(exps):
    xi = height("A", 3)
    m = ymonomial(xi, dict(zip(sorted(window(xi)), exps)))
    (only,) = all_factorizations(xi, m)
    assert product_monomial(xi, only) == m


def test_decompose_tensor_a2():
    got = decompose_tensor(A2, label_monomial(A2, Label(0, 1)), label_monomial(A2, Label(1, 2)))
    assert got == {(Label(0, 2), Label(1, 1)): 1, (Label(2, 2),): 1}


@pytest.mark.parametrize("xi", [A2, height("A", 3), D4], ids=_name)
def test_decompose_tensor_of_simple_pairs(xi):
    labs = prime_labels(xi)
    for p, q in combinations_with_replacement(labs, 2):
        m1, m2 = label_monomial(xi, p), label_monomial(xi, q)
        got = decompose_tensor(xi, m1, m2)
        if simple_pair(xi, p, q).simple:
            assert got == {tuple(sorted((p, q))): 1}
        else:
            assert len(got) >= 2
        assert all(c > 0 for c in got.values())
        total = sum((qchar_simple(xi, product_monomial(xi, k)) * c for k, c in got.items()), LaurentPoly())
        assert total == trunc_qchar_prime(xi, p) * trunc_qchar_prime(xi, q)


@pytest.mark.parametrize("n", [4, 5])
def test_tsystem_matches_exchange_relation(n):
    xi = height("D", n)
    md = build_model("D", n)
    label = {drop_coefficients(v): md.label_of(v) for v in md.variables}
    frozen = initial_labels("D", n)[n:]
    seed = initial_seed_d(n)
    for i in range(1, n + 1):
        row_labels = [label[v] for v in seed.mutable] + frozen
        assert row_labels[i - 1] == Label(n + 1, i)
        expected = {}
        for exps in exchange_monomials(seed, i):
            key = tuple(sorted(
                lab for r, e in exps.items() for lab in [row_labels[r - 1]] * e if not is_trivial(xi, lab)
            ))
            expected[key] = 1
        got = decompose_tensor(xi, label_monomial(xi, Label(n + 1, i)), label_monomial(xi, Label(i, 0)))
        assert got == expected
        seed = mutate_sequence(seed, [i])
        assert label[seed.mutable[i - 1]] == Label(i, 0)
