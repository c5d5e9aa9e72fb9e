"""Finite-type cluster algebras of types A and D next to the truncated
q-characters of their monoidal categorifications.

The cluster side (seeds, mutation, exchange graphs, F-polynomials) and the
representation side (Y-ring, prime characters, simplicity criteria) are
computed independently; :mod:`qcluster.verify` checks that they agree.
"""
from .cluster import Seed, exchange_graph, f_polynomial, initial_seed, mutate_matrix, mutate_seed
from .correspondence import build_model
from .laurent import LaurentPoly, parse
from .qchar import Label, height, renormalize_and_tsub, trunc_qchar_prime
from .simplicity import decompose_tensor, factorize_simple, simple_pair

__all__ = [
    "Label",
    "LaurentPoly",
    "Seed",
    "build_model",
    "decompose_tensor",
    "exchange_graph",
    "f_polynomial",
    "factorize_simple",
    "height",
    "initial_seed",
    "mutate_matrix",
    "mutate_seed",
    "parse",
    "renormalize_and_tsub",
    "simple_pair",
    "trunc_qchar_prime",
]
