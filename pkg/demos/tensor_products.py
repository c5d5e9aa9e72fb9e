"""Simplicity of tensor products and their composition factors.

A product of two primes is simple exactly when the two cluster variables
share a cluster.  When it is not, the product splits into two simple pieces,
which are the two monomials of an exchange relation.

Run with ``python3 demos/tensor_products.py``.
"""
from qcluster.qchar import Label, height, label_monomial
from qcluster.simplicity import decompose_tensor, factorize_simple, simple_pair

for kind, n, p, q in [
    ("A", 2, Label(0, 1), Label(1, 2)),
    ("A", 3, Label(1, 2), Label(2, 3)),
    ("D", 4, Label(0, 1, True), Label(0, 2, True)),
    ("D", 4, Label(5, 2), Label(2, 0)),
]:
    xi = height(kind, n)
    verdict = simple_pair(xi, p, q)
    got = decompose_tensor(xi, label_monomial(xi, p), label_monomial(xi, q))
    pieces = "  +  ".join(f"{c}*[{' '.join(map(str, k))}]" for k, c in got.items())
    print(f"{kind}{n}: {p} x {q}  simple={verdict.simple} (case {verdict.case})")
    print(f"      = {pieces}")

xi = height("A", 4)
m = label_monomial(xi, Label(1, 3))
m2 = tuple((v, e + 1) for v, e in m)
factors = " ".join(map(str, factorize_simple(xi, m2)))
print(f"\nA4: the square of the label of L(1,3) factors as {factors}")
