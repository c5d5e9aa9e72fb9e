"""Cluster variables of the model seeds matched to diagonals and prime labels.

One exchange graph is computed on the model seed extended by principal
coefficients.  Each variable is matched to a diagonal (or orbit) through its
denominator vector, which must equal the model's almost positive root.  This
route never consults flips, so agreement with the model is a real check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import model_a, model_d
from .cluster import (
    ExchangeGraph,
    add_principal_coefficients,
    d_vector,
    drop_coefficients,
    exchange_graph,
    f_polynomial,
)
from .laurent import PY, T, LaurentPoly, mono_inv, mono_mul, mono_pow
from .qchar import HeightFunction, Label, height, label_monomial, t_exponents


@dataclass
class ModelData:
    kind: str
    n: int
    xi: HeightFunction
    graph: ExchangeGraph
    objects: dict[LaurentPoly, object]
    labels: dict[LaurentPoly, Label]

    @property
    def variables(self) -> list[LaurentPoly]:
        return self.graph.variables

    def label_of(self, v: LaurentPoly) -> Label:
        return self.labels[v]

    def variable_of(self, lab: Label) -> LaurentPoly:
        return self._by_label[lab]

    def __post_init__(self):
        self._by_label = {lab: v for v, lab in self.labels.items()}

    def fpoly(self, v: LaurentPoly) -> LaurentPoly:
        """F-polynomial in the principal coefficients ``y``."""
        return f_polynomial(v)

    def fpoly_in_t(self, v: LaurentPoly) -> LaurentPoly:
        """F-polynomial evaluated at the induced ``yhat`` and renormalized.

        ``y_k`` goes to ``yhat_k`` as a ``t``-monomial (see :func:`yhat_map`);
        the result is then divided by its highest term so the constant is 1.
        """
        image = f_polynomial(v).substitute(
            {PY(k): LaurentPoly.mono(m) for k, m in yhat_map(self.kind, self.n).items()}
        )
        return _normalize_t(image)

    def expansion(self, v: LaurentPoly) -> LaurentPoly:
        """Laurent expansion with geometric coefficients only."""
        return drop_coefficients(v)

    def clusters(self) -> list[frozenset[Label]]:
        return [frozenset(self.labels[v] for v in key) for key in self.graph.seeds]


def _normalize_t(p: LaurentPoly) -> LaurentPoly:
    for m, c in p.items():
        shifted = p.mul_monomial(mono_inv(m))
        if shifted.is_polynomial():
            return shifted
    raise ValueError(f"{p} has no highest term")


def initial_labels(kind: str, n: int) -> list[Label]:
    """Prime labels of every row of the model's initial seed."""
    if kind == "A":
        return [model_a.segment_to_prime_a(n, s) for s in model_a.initial_segments_a(n)]
    return [Label(n + 1, k) for k in range(1, n + 1)] + model_d.frozen_labels_d(n)


@lru_cache(maxsize=None)
def yhat_map(kind: str, n: int) -> dict[int, tuple]:
    """``yhat_k = prod_j x_j^{b_jk}`` read through the labeling, as a ``t``-monomial.

    Each initial row ``x_j`` is replaced by the highest monomial of its prime's
    character; the product is then rewritten in ``t_i = A_{i,xi_i+1}^{-1}``.
    """
    kind = kind.upper()
    xi = height(kind, n)
    seed = model_seed(kind, n)
    labels = initial_labels(kind, n)
    out = {}
    for k in range(1, n + 1):
        m = ()
        for j, lab in enumerate(labels):
            b = int(seed.matrix[j, k - 1])
            if b:
                m = mono_mul(m, mono_pow(label_monomial(xi, lab), b))
        v = t_exponents(xi, m)
        if v is None:
            raise ValueError(f"yhat_{k} is not a t-monomial")
        out[k] = tuple((T(i), e) for i, e in zip(xi.nodes, v) if e)
    return out


def model_seed(kind: str, n: int):
    kind = kind.upper()
    if kind == "A":
        return model_a.initial_seed_a(n)
    if kind == "D":
        return model_d.initial_seed_d(n)
    raise ValueError(f"unsupported type {kind!r}")


def model_objects(kind: str, n: int) -> dict[tuple[int, ...], object]:
    """Almost positive root -> diagonal (type A) or orbit (type D)."""
    if kind == "A":
        objs = model_a.diagonals_a(n)
        root = model_a.segment_to_root
    else:
        objs = model_d.orbits_d(n)
        root = model_d.orbit_to_root
    table = {}
    for o in objs:
        r = root(n, o)
        if r in table:
            raise ValueError(f"root {r} labels both {table[r]} and {o}")
        table[r] = o
    return table


def object_label(kind: str, n: int, o) -> Label:
    if kind == "A":
        return model_a.segment_to_prime_a(n, o)
    return model_d.orbit_to_prime_d(n, o)


@lru_cache(maxsize=None)
def build_model(kind: str, n: int) -> ModelData:
    kind = kind.upper()
    seed = add_principal_coefficients(model_seed(kind, n))
    graph = exchange_graph(seed, strict=True)
    roots = model_objects(kind, n)
    objects, labels = {}, {}
    for v in graph.variables:
        d = d_vector(v, n)
        if d not in roots:
            raise ValueError(f"denominator vector {d} is not an almost positive root")
        objects[v] = roots[d]
        labels[v] = object_label(kind, n, roots[d])
    return ModelData(kind, n, height(kind, n), graph, objects, labels)
