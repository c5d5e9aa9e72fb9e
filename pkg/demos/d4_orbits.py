"""Type D4: sixteen orbits, their roots, weights, prime labels and characters.

Run with ``python3 demos/d4_orbits.py``.
"""
from qcluster import model_d
from qcluster.qchar import height, renormalize_and_tsub, trunc_qchar_prime

n = 4
xi = height("D", n)

print(f"{'orbit':<14}{'root':<16}{'weight':<10}{'label':<10}renormalized character")
for o in model_d.orbits_d(n):
    i, m = model_d.orbit_to_weight(n, o)
    lab = model_d.orbit_to_prime_d(n, o)
    chi = renormalize_and_tsub(trunc_qchar_prime(xi, lab), xi)
    print(f"{str(o):<14}{str(model_d.orbit_to_root(n, o)):<16}c^{m}*w{i:<5} {str(lab):<10}{chi.canonical_string()}")

print(f"\n{len(model_d.sym_triangulations_d(n))} centrally symmetric triangulations")
