"""Seeds, matrix and seed mutation, exchange graphs and F-polynomials.

Direction indices are 1-based throughout, matching the usual ``mu_k`` notation.
An exchange matrix has ``r`` rows (all cluster entries) and ``m`` columns (the
mutable ones); the last ``r - m`` rows belong to frozen variables.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .laurent import (
    LaurentPoly,
    Namespace,
    NonExactDivision,
    PY,
    X,
    parse,
)


class IndexOutOfRange(IndexError):
    pass


class NotSkewSymmetric(ValueError):
    pass


class NotPolynomial(ArithmeticError):
    pass


class IncompleteGraph(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def _as_matrix(B) -> np.ndarray:
    a = np.array(B, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("exchange matrix must be two-dimensional")
    a.setflags(write=False)
    return a


def is_skew_symmetric(B) -> bool:
    a = np.asarray(B)
    return a.shape[0] == a.shape[1] and bool((a == -a.T).all())


def principal_part(B) -> np.ndarray:
    a = np.asarray(B)
    return a[: a.shape[1], :]


def mutate_matrix(B, k: int) -> np.ndarray:
    """Matrix mutation in direction ``k`` (1-based)."""
    b = np.asarray(B, dtype=np.int64)
    if not 1 <= k <= b.shape[1]:
        raise IndexOutOfRange(f"direction {k} outside 1..{b.shape[1]}")
    c = k - 1
    col = b[:, c]
    row = b[c, :]
    out = b + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    out[c, :] = -b[c, :]
    out[:, c] = -b[:, c]
    out.setflags(write=False)
    return out


def with_principal_coefficients(B) -> np.ndarray:
    """Stack the identity under a square skew-symmetric ``B``."""
    b = np.asarray(B, dtype=np.int64)
    if not is_skew_symmetric(b):
        raise NotSkewSymmetric("principal coefficients need a skew-symmetric square matrix")
    return _as_matrix(np.vstack([b, np.eye(b.shape[0], dtype=np.int64)]))


@dataclass(frozen=True, eq=False)
class Seed:
    cluster: tuple[LaurentPoly, ...]
    matrix: np.ndarray
    frozen: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cluster", tuple(self.cluster))
        object.__setattr__(self, "matrix", _as_matrix(self.matrix))
        r, m = self.matrix.shape
        if r != len(self.cluster):
            raise ValueError(f"{len(self.cluster)} cluster entries for {r} matrix rows")
        if r - m != self.frozen:
            raise ValueError(f"{r}x{m} matrix does not leave {self.frozen} frozen rows")
        if not is_skew_symmetric(principal_part(self.matrix)):
            raise NotSkewSymmetric("principal part is not skew-symmetric")

    @property
    def rank(self) -> int:
        return self.matrix.shape[1]

    @property
    def mutable(self) -> tuple[LaurentPoly, ...]:
        return self.cluster[: self.rank]

    @cached_property
    def key(self) -> frozenset:
        return frozenset(self.mutable)

    def mutate(self, k: int) -> "Seed":
        return mutate_seed(self, k)

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.tolist(),
            "cluster": [p.canonical_string() for p in self.cluster],
            "frozen": self.frozen,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "Seed":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(parse(s) for s in data["cluster"]), data["matrix"], data["frozen"])


def initial_seed(B, frozen: int | None = None) -> Seed:
    """Seed with cluster ``x[1], ..., x[r]`` for an ``r x m`` matrix."""
    b = _as_matrix(B)
    r, m = b.shape
    return Seed(tuple(LaurentPoly.var(X(i + 1)) for i in range(r)), b, r - m if frozen is None else frozen)


def exchange_monomials(seed: Seed, k: int) -> tuple[dict[int, int], dict[int, int]]:
    """Positions (1-based) and exponents of the two exchange monomials at ``k``."""
    if not 1 <= k <= seed.rank:
        raise IndexOutOfRange(f"direction {k} outside 1..{seed.rank}")
    col = seed.matrix[:, k - 1]
    pos = {i + 1: int(b) for i, b in enumerate(col) if b > 0}
    neg = {i + 1: int(-b) for i, b in enumerate(col) if b < 0}
    return pos, neg


def _product(seed: Seed, exps: dict[int, int]) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for i, e in exps.items():
        out = out * seed.cluster[i - 1] ** e
    return out


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Seed mutation in direction ``k``; the new variable is an exact quotient.

    :raises NonExactDivision: the Laurent phenomenon failed (never on valid input)
    """
    pos, neg = exchange_monomials(seed, k)
    numerator = _product(seed, pos) + _product(seed, neg)
    try:
        new = numerator.exact_div(seed.cluster[k - 1])
    except NonExactDivision as exc:
        raise NonExactDivision(f"exchange relation at {k} is not Laurent: {exc}") from exc
    cluster = list(seed.cluster)
    cluster[k - 1] = new
    return Seed(tuple(cluster), mutate_matrix(seed.matrix, k), seed.frozen)


def mutate_sequence(seed: Seed, ks) -> Seed:
    for k in ks:
        seed = mutate_seed(seed, k)
    return seed


@dataclass
class ExchangeGraph:
    seeds: dict[frozenset, Seed]
    edges: set[tuple[frozenset, frozenset, int]]
    complete: bool
    frozen_values: tuple[LaurentPoly, ...] = ()
    _membership: dict = field(default=None, repr=False)

    @property
    def clusters(self) -> list[frozenset]:
        return list(self.seeds)

    @cached_property
    def variables(self) -> list[LaurentPoly]:
        found = set()
        for key in self.seeds:
            found |= key
        return sorted(found, key=LaurentPoly.canonical_string)

    def clusters_of(self, v: LaurentPoly) -> set[frozenset]:
        if self._membership is None:
            self._membership = {}
            for key in self.seeds:
                for w in key:
                    self._membership.setdefault(w, set()).add(key)
        return self._membership.get(v, set())

    def adjacency(self) -> set[frozenset]:
        """Undirected cluster adjacency as a set of two-element frozensets."""
        return {frozenset((a, b)) for a, b, _ in self.edges}


def exchange_graph(s0: Seed, max_seeds: int = 100_000, strict: bool = False) -> ExchangeGraph:
    """Breadth-first closure of ``s0`` under mutation.

    Seeds are identified by the set of their mutable cluster variables.  If the
    budget runs out the partial graph is returned with ``complete=False``
    (or :class:`BudgetExceeded` is raised when ``strict``).
    """
    if max_seeds < 1:
        raise ValueError("max_seeds must be positive")
    seeds = {s0.key: s0}
    edges = set()
    queue = deque([s0])
    complete = True
    while queue:
        s = queue.popleft()
        for k in range(1, s.rank + 1):
            t = mutate_seed(s, k)
            if t.key not in seeds:
                if len(seeds) >= max_seeds:
                    complete = False
                    continue
                seeds[t.key] = t
                queue.append(t)
            edges.add((s.key, t.key, k))
    if not complete and strict:
        raise BudgetExceeded(f"more than {max_seeds} seeds")
    return ExchangeGraph(seeds, edges, complete, s0.cluster[s0.rank:])


def compatible(v: LaurentPoly, w: LaurentPoly, graph: ExchangeGraph) -> bool:
    if not graph.complete:
        raise IncompleteGraph("compatibility needs a complete exchange graph")
    return bool(graph.clusters_of(v) & graph.clusters_of(w))


def add_principal_coefficients(seed: Seed) -> Seed:
    """Append frozen rows ``y[1..m]`` carrying the identity matrix.

    The existing frozen rows are kept, so one exchange graph yields both the
    geometric-coefficient expansion (set ``y`` to 1) and the F-polynomial (set
    every ``x`` to 1).
    """
    m = seed.rank
    matrix = np.vstack([seed.matrix, np.eye(m, dtype=np.int64)])
    cluster = seed.cluster + tuple(LaurentPoly.var(PY(i + 1)) for i in range(m))
    return Seed(cluster, matrix, seed.frozen + m)


def _ones(p: LaurentPoly, ns: Namespace) -> LaurentPoly:
    return p.specialize({v: 1 for v in p.variables() if v.ns == ns})


def drop_coefficients(v: LaurentPoly) -> LaurentPoly:
    """Specialize all principal coefficients ``y`` to 1."""
    return _ones(v, Namespace.PY)


def f_polynomial(v: LaurentPoly) -> LaurentPoly:
    """Specialize every ``x`` to 1, keeping the ``y`` variables."""
    f = _ones(v, Namespace.X)
    if not f.is_polynomial() or f.coefficient(()) != 1:
        raise NotPolynomial(f"F-polynomial {f} is not a polynomial with constant term 1")
    return f


def d_vector(v: LaurentPoly, rank: int) -> tuple[int, ...]:
    """Denominator vector with respect to the initial mutable variables."""
    return tuple(-v.min_exponent(X(i)) for i in range(1, rank + 1))


def is_dynkin(B) -> str | None:
    """Return ``"A"``/``"D"``/``"E"`` when the quiver of square ``B`` is a Dynkin tree."""
    b = np.asarray(B)
    n = b.shape[0]
    if np.abs(b).max(initial=0) > 1:
        return None
    adj = [set(np.nonzero(b[i])[0]) for i in range(n)]
    if sum(len(a) for a in adj) != 2 * (n - 1):
        return None
    seen, stack = {0}, [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n:
        return None
    degrees = sorted(len(a) for a in adj)
    if n == 1 or degrees[-1] <= 2:
        return "A"
    if degrees[-1] > 3 or degrees[-2] > 2:
        return None
    branch = next(i for i in range(n) if len(adj[i]) == 3)
    arms = []
    for start in adj[branch]:
        length, prev, cur = 1, branch, start
        while len(adj[cur]) == 2:
            prev, cur = cur, next(j for j in adj[cur] if j != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return "D"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return "E"
    return None
