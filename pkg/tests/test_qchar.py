import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcluster.laurent import LaurentPoly, mono_inv, mono_mul, parse, t
from qcluster.qchar import (
    UNIT,
    InvalidLabel,
    Label,
    NotExpressibleInT,
    ParityViolation,
    a_variable,
    catalog,
    dominant_monomials,
    height,
    highest_monomial,
    in_window,
    is_minuscule,
    label_monomial,
    prime_labels,
    qchar_simple,
    renormalize_and_tsub,
    t_exponents,
    t_monomial,
    trunc_qchar_prime,
    trunc_qchar_prime_a,
    trunc_qchar_prime_d,
    window,
    ymonomial,
)

A2, D4 = height("A", 2), height("D", 4)


def Ym(xi, *keys):
    """Dominant monomial with the given (i, p) keys, repeats allowed."""
    exps = {}
    for k in keys:
        exps[k] = exps.get(k, 0) + 1
    return LaurentPoly.mono(ymonomial(xi, exps))


def A_inv(xi, i, p):
    return LaurentPoly.mono(mono_inv(a_variable(xi, i, p - 1)))


def test_height_functions():
    assert height("A", 3).xi == (1, 2, 3)
    assert D4.xi == (2, 1, 0, 0)
    assert height("D", 5).xi == (3, 2, 1, 0, 0)
    with pytest.raises(ValueError):
        height("D", 2)


def test_order_on_type_d_nodes():
    assert D4.prec(5, 3) and D4.prec(3, 2) and D4.prec(1, 0)
    assert not D4.prec(3, 4) and not D4.prec(4, 3) and not D4.preceq(3, 4)


def test_a_variable_examples():
    assert LaurentPoly.mono(a_variable(A2, 1, 1)) == parse("Y[1,1]*Y[1,3]*Y[2,2]^-1")
    assert LaurentPoly.mono(a_variable(D4, 2, 1)) == parse("Y[2,1]*Y[2,3]*Y[1,2]^-1*Y[3,2]^-1*Y[4,2]^-1")
    assert LaurentPoly.mono(a_variable(height("A", 1), 1, 1)) == parse("Y[1,1]*Y[1,3]")


def test_parity_is_enforced():
    with pytest.raises(ParityViolation):
        ymonomial(A2, {(1, 2): 1})
    with pytest.raises(ParityViolation):
        a_variable(A2, 1, 2)
    # boundary nodes are erased whatever the spectral parameter
    assert ymonomial(A2, {(0, 5): 1, (3, 0): 2}) == ()


def test_window_examples():
    assert window(A2) == {(1, 1), (1, 3), (2, 2), (2, 4)}
    assert window(D4) == {(1, 2), (1, 4), (2, 1), (2, 3), (3, 0), (3, 2), (4, 0), (4, 2)}
    for n in range(1, 7):
        assert len(window(height("A", n))) == 2 * n


def test_type_a_characters():
    assert trunc_qchar_prime_a(2, 0, 1) == Ym(A2, (1, 3))
    assert trunc_qchar_prime_a(2, 0, 2) == Ym(A2, (2, 4))
    assert trunc_qchar_prime_a(2, 1, 2) == Ym(A2, (1, 1), (2, 4)) * (1 + A_inv(A2, 1, 2))
    # frozen labels have a single term
    assert trunc_qchar_prime_a(2, 1, 1) == Ym(A2, (1, 1), (1, 3))
    assert trunc_qchar_prime_a(2, 1, 3) == Ym(A2, (1, 1)) * (1 + A_inv(A2, 1, 2) + A_inv(A2, 1, 2) * A_inv(A2, 2, 3))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_type_a_chain_matches_hand_product(n):
    xi = height("A", n)
    for i in range(1, n + 1):
        for j in range(i, n + 2):
            total, prefix = LaurentPoly.const(1), LaurentPoly.const(1)
            for k in range(i, j):
                prefix = prefix * A_inv(xi, k, k + 1)
                total = total + prefix
            lab = Label(i, j)
            want = LaurentPoly.const(1) if i == j else total
            assert trunc_qchar_prime(xi, lab) == LaurentPoly.mono(label_monomial(xi, lab)) * want


def test_type_d_characters():
    assert renormalize_and_tsub(trunc_qchar_prime_d(4, Label(3, 2)), D4) == 1 + t(3)
    assert highest_monomial(D4, trunc_qchar_prime_d(4, Label(3, 2))) == ymonomial(D4, {(2, 3): 1, (3, 0): 1})
    chi = trunc_qchar_prime_d(4, Label(0, 2, True))
    assert highest_monomial(D4, chi) == ymonomial(D4, {(2, 3): 1, (3, 0): 1, (4, 0): 1})
    assert renormalize_and_tsub(chi, D4) == (
        1 + t(3) + t(4) + t(3) * t(4) + t(3) * t(4) * t(2) + t(3) * t(4) * t(2) * t(1)
    )
    assert trunc_qchar_prime_d(4, Label(5, 1)) == Ym(D4, (1, 4))


def test_coefficient_two():
    got = renormalize_and_tsub(trunc_qchar_prime_d(4, Label(0, 1, True)), D4)
    assert len(got.terms) == 10
    assert got.coefficient(next(iter((t(2) * t(3) * t(4)).terms))) == 2
    assert got.substitute({v: LaurentPoly.const(1) for v in got.variables()}) == 11


def test_renormalize_examples():
    assert renormalize_and_tsub(trunc_qchar_prime_a(4, 0, 3), height("A", 4)) == 1
    xi = height("A", 5)
    assert renormalize_and_tsub(trunc_qchar_prime(xi, Label(2, 5)), xi) == 1 + t(2) + t(2) * t(3) + t(2) * t(3) * t(4)


def test_renormalize_rejects_foreign_terms():
    chi = Ym(A2, (1, 1)) + Ym(A2, (2, 2))
    with pytest.raises(NotExpressibleInT):
        renormalize_and_tsub(chi, A2, label=ymonomial(A2, {(1, 1): 1}))


def test_invalid_labels():
    with pytest.raises(InvalidLabel):
        trunc_qchar_prime(A2, Label(2, 1))
    with pytest.raises(InvalidLabel):
        trunc_qchar_prime(A2, Label(0, 1, True))
    with pytest.raises(InvalidLabel):
        trunc_qchar_prime(D4, Label(1, 2))  # type D needs j above i
    with pytest.raises(InvalidLabel):
        Label.parse("L(1;2)")
    assert Label.parse(" L(0, 2)+ ") == Label(0, 2, True)


@pytest.mark.parametrize("kind,n", [("A", n) for n in range(1, 7)] + [("D", 4), ("D", 5)])
def test_catalog_characters_are_label_times_a_inverses(kind, n):
    xi = height(kind, n)
    for lab, chi in catalog(xi).items():
        top = label_monomial(xi, lab)
        assert highest_monomial(xi, chi) == top
        assert in_window(xi, chi)
        for m in chi.terms:
            v = t_exponents(xi, mono_mul(m, mono_inv(top)))
            assert v is not None and min(v, default=0) >= 0


@pytest.mark.parametrize("n", range(1, 7))
def test_ident_holds_for_every_quadruple(n):
    xi = height("A", n)

    def chi(a, b):
        return trunc_qchar_prime(xi, Label(a, b)) if a <= b else LaurentPoly.const(1)

    for i in range(n + 2):
        for j in range(i + 1, n + 2):
            for k in range(j, n + 2):
                for l in range(k + 1, n + 2):
                    assert chi(i, k) * chi(j, l) == chi(i, l) * chi(j, k) + chi(i, j - 1) * chi(k + 1, l)


def test_dominant_monomials_of_a_prime():
    xi = height("A", 4)
    for lab in prime_labels(xi):
        if 1 <= lab.i and lab.j <= 4:
            chi = trunc_qchar_prime(xi, lab)
            assert dominant_monomials(chi) == {label_monomial(xi, lab): 1}
            assert is_minuscule(chi)


def test_dominant_monomials_of_a_crossing_product():
    xi = height("A", 5)
    for k, i, j, l in [(1, 2, 3, 4), (1, 1, 2, 5), (2, 3, 3, 4)]:
        prod = trunc_qchar_prime(xi, Label(i, j)) * trunc_qchar_prime(xi, Label(k, l))
        M = mono_mul(label_monomial(xi, Label(i, j)), label_monomial(xi, Label(k, l)))
        lower = LaurentPoly.mono(M)
        for m in range(k, j + 1):
            lower = lower * A_inv(xi, m, m + 1)
        assert dominant_monomials(prod) == {M: 1, next(iter(lower.terms)): 1}
        assert not is_minuscule(prod)


def test_dominant_monomials_of_unit():
    assert dominant_monomials(LaurentPoly.const(1)) == {(): 1}


def test_qchar_simple():
    lab = Label(1, 2)
    assert qchar_simple(A2, label_monomial(A2, lab)) == trunc_qchar_prime(A2, lab)
    m = ymonomial(A2, {(1, 1): 1, (2, 2): 1, (2, 4): 1})
    assert qchar_simple(A2, m) == trunc_qchar_prime(A2, Label(1, 3)) * trunc_qchar_prime(A2, Label(2, 2))
    assert qchar_simple(A2, ()) == 1
    assert label_monomial(A2, UNIT) == ()


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_t_exponents_inverts_t_monomials(vec):
    m = ()
    for i, k in zip(D4.nodes, vec):
        if k:
            m = mono_mul(m, tuple((var, k * e) for var, e in t_monomial(D4, i)))
    assert t_exponents(D4, m) == tuple(vec)


def test_t_exponents_rejects_non_root_lattice():
    assert t_exponents(A2, ymonomial(A2, {(1, 1): 1})) is None
