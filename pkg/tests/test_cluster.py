import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qcluster.cluster import (
    BudgetExceeded,
    IncompleteGraph,
    IndexOutOfRange,
    NotSkewSymmetric,
    Seed,
    add_principal_coefficients,
    compatible,
    d_vector,
    exchange_graph,
    f_polynomial,
    initial_seed,
    is_dynkin,
    mutate_matrix,
    mutate_seed,
    mutate_sequence,
    with_principal_coefficients,
)
from qcluster.laurent import x, y

A2 = [[0, 1], [-1, 0]]


@st.composite
def skew_matrices(draw, max_n=4, frozen=2, weight=2):
    n = draw(st.integers(1, max_n))
    upper = draw(arrays(np.int64, (n, n), elements=st.integers(-weight, weight)))
    b = np.triu(upper, 1)
    b = b - b.T
    extra = draw(arrays(np.int64, (draw(st.integers(0, frozen)), n), elements=st.integers(-2, 2)))
    return np.vstack([b, extra])


def test_mutate_matrix_rank2():
    assert mutate_matrix(A2, 1).tolist() == [[0, -1], [1, 0]]


def test_mutate_matrix_linear_a3():
    b = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]
    assert mutate_matrix(b, 2).tolist() == [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]


def test_mutate_matrix_direction_range():
    with pytest.raises(IndexOutOfRange):
        mutate_matrix(A2, 3)
    with pytest.raises(IndexOutOfRange):
        mutate_matrix(A2, 0)


@given(skew_matrices(), st.data())
def test_matrix_mutation_is_involution_and_keeps_skew(b, data):
    k = data.draw(st.integers(1, b.shape[1]))
    once = mutate_matrix(b, k)
    n = b.shape[1]
    assert (once[:n] == -once[:n].T).all()
    assert (mutate_matrix(once, k) == b).all()


def test_seed_mutation_rank2():
    s = mutate_seed(initial_seed(A2), 1)
    assert s.cluster[0] == (x(2) + 1) * x(1) ** -1
    assert s.cluster[1] == x(2)


def test_seed_mutation_a1_without_arrows():
    s = mutate_seed(initial_seed([[0]]), 1)
    assert s.cluster[0] == 2 * x(1) ** -1


@given(skew_matrices(max_n=3), st.data())
def test_seed_mutation_is_involution(b, data):
    s = initial_seed(b)
    k = data.draw(st.integers(1, s.rank))
    back = mutate_seed(mutate_seed(s, k), k)
    assert back.cluster == s.cluster
    assert (back.matrix == s.matrix).all()


# small weights and short sequences: wild quivers make the expansions explode
@given(skew_matrices(max_n=3, frozen=1, weight=1), st.lists(st.integers(1, 3), max_size=4))
def test_frozen_entries_never_change(b, ks):
    s = initial_seed(b)
    ks = [k for k in ks if k <= s.rank]
    out = mutate_sequence(s, ks)
    assert out.cluster[s.rank:] == s.cluster[s.rank:]


def test_seed_rejects_non_skew_principal_part():
    with pytest.raises(NotSkewSymmetric):
        Seed((x(1), x(2)), [[0, 1], [1, 0]])


def test_seed_json_round_trip():
    s = mutate_sequence(initial_seed([[0, 1], [-1, 0], [1, 1]]), [1, 2])
    back = Seed.from_json(s.to_json())
    assert back.cluster == s.cluster and (back.matrix == s.matrix).all() and back.frozen == 1


def test_a2_exchange_graph():
    g = exchange_graph(initial_seed(A2))
    want = {
        x(1),
        x(2),
        (x(2) + 1) * x(1) ** -1,
        (x(1) + x(2) + 1) * (x(1) * x(2)) ** -1,
        (x(1) + 1) * x(2) ** -1,
    }
    assert g.complete
    assert set(g.variables) == want
    assert len(g.seeds) == 5
    assert len(g.adjacency()) == 5


def test_budget():
    g = exchange_graph(initial_seed(A2), max_seeds=2)
    assert not g.complete and len(g.seeds) == 2
    with pytest.raises(BudgetExceeded):
        exchange_graph(initial_seed(A2), max_seeds=2, strict=True)
    with pytest.raises(IncompleteGraph):
        compatible(x(1), x(2), g)


def test_compatibility_a2():
    g = exchange_graph(initial_seed(A2))
    assert compatible(x(1), (x(1) + 1) * x(2) ** -1, g)
    assert not compatible(x(1), (x(2) + 1) * x(1) ** -1, g)
    for v in g.variables:
        assert compatible(v, v, g)


def test_exchange_partners_are_not_compatible():
    g = exchange_graph(initial_seed([[0, 1, 0], [-1, 0, 1], [0, -1, 0]]))
    for a, b, _ in g.edges:
        (old,) = a - b
        (new,) = b - a
        assert not compatible(old, new, g)


def test_with_principal_coefficients():
    assert with_principal_coefficients([[0]]).tolist() == [[0], [1]]
    assert with_principal_coefficients(A2).tolist() == [[0, 1], [-1, 0], [1, 0], [0, 1]]
    with pytest.raises(NotSkewSymmetric):
        with_principal_coefficients([[0, 1], [0, 0]])


def test_f_polynomial_a1():
    s = add_principal_coefficients(initial_seed([[0]]))
    assert f_polynomial(s.cluster[0]) == 1
    assert f_polynomial(mutate_seed(s, 1).cluster[0]) == 1 + y(1)


def test_d_vector():
    v = (x(1) + x(2) + 1) * (x(1) * x(2)) ** -1
    assert d_vector(v, 2) == (1, 1)
    assert d_vector(x(1), 2) == (-1, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_linear_a_counts(n):
    b = np.zeros((n, n), dtype=int)
    for i in range(n - 1):
        b[i + 1, i], b[i, i + 1] = 1, -1
    g = exchange_graph(initial_seed(b))
    catalan = [1, 1, 2, 5, 14, 42, 132][n + 1]
    assert len(g.variables) == n * (n + 3) // 2
    assert len(g.seeds) == catalan


def test_is_dynkin():
    assert is_dynkin([[0]]) == "A"
    d4 = np.zeros((4, 4), dtype=int)
    for leaf in (0, 2, 3):
        d4[leaf, 1], d4[1, leaf] = 1, -1
    assert is_dynkin(d4) == "D"
    assert is_dynkin([[0, 2], [-2, 0]]) is None
