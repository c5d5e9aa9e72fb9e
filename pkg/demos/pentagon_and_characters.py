"""Type A2: the pentagon's five diagonals as cluster variables and as primes.

Run with ``python3 demos/pentagon_and_characters.py``.
"""
from qcluster.correspondence import build_model
from qcluster.qchar import renormalize_and_tsub, trunc_qchar_prime

md = build_model("A", 2)

print(f"{'diagonal':<10}{'label':<8}{'expansion':<56}F at yhat")
for v in sorted(md.variables, key=md.label_of):
    lab = md.label_of(v)
    print(f"{str(md.objects[v]):<10}{str(lab):<8}{md.expansion(v).canonical_string():<56}"
          f"{md.fpoly_in_t(v).canonical_string()}")

print("\nclusters (each is a triangulation of the pentagon):")
for c in sorted(sorted(map(str, c)) for c in md.clusters()):
    print("  ", ", ".join(c))

# The renormalized character of each prime is the same polynomial in t.
v = md.variable_of(max(md.labels.values()))
chi = trunc_qchar_prime(md.xi, md.label_of(v))
print(f"\n{md.label_of(v)}: character {chi.canonical_string()}")
print(f"renormalized: {renormalize_and_tsub(chi, md.xi).canonical_string()}")
