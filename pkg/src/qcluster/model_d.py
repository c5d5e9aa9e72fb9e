"""Type D model: Theta-orbits of diagonals of the 2n-gon, diameters in two colors.

Vertices are ``0..2n-1`` with ``bar(a) = a + n (mod 2n)``.  A pair orbit is
stored by its lexicographically smallest representative; a diameter by its
endpoint in ``0..n-1`` plus a color, ``"tagged"`` standing for the tilde.

Node conventions follow the D4 label table: the tagged initial diameter sits
at node ``n-1`` and the plain one at node ``n``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import networkx as nx
import numpy as np

from .cluster import Seed, exchange_monomials, initial_seed, mutate_seed
from .qchar import Label

PLAIN, TAGGED = "plain", "tagged"


class FrozenOrbit(ValueError):
    pass


class PowerOutOfRange(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Orbit:
    a: int
    b: int
    color: str | None = None

    @property
    def is_diameter(self) -> bool:
        return self.color is not None

    def __str__(self):
        if self.is_diameter:
            return f"{self.a}~{self.a}:{self.color}"
        return f"{self.a}-{self.b}"


def bar(n: int, a: int) -> int:
    return (a + n) % (2 * n)


def pair(n: int, a: int, b: int) -> Orbit:
    """Orbit of the diagonal ``[a, b]`` (any representative)."""
    a, b = a % (2 * n), b % (2 * n)
    if b == bar(n, a):
        raise ValueError("use diameter() for [a, bar a]")
    if (b - a) % (2 * n) in (0, 1, 2 * n - 1):
        raise ValueError(f"[{a},{b}] is a side or a point")
    reps = [tuple(sorted((a, b))), tuple(sorted((bar(n, a), bar(n, b))))]
    return Orbit(*min(reps))


def diameter(n: int, a: int, color: str = PLAIN) -> Orbit:
    if color not in (PLAIN, TAGGED):
        raise ValueError(f"unknown color {color!r}")
    a %= n
    return Orbit(a, a + n, color)


def from_name(n: int, name: str) -> Orbit:
    """Orbit from the short names used in the data files: ``0-2``, ``1-0b``, ``~3-3b``.

    A ``b`` suffix marks a barred vertex; a leading ``~`` marks the tagged color.
    """
    m = re.fullmatch(r"\s*(~?)(\d+)(b?)-(\d+)(b?)\s*", name)
    if not m:
        raise ValueError(f"bad orbit name {name!r}")
    a = int(m.group(2)) + (n if m.group(3) else 0)
    b = int(m.group(4)) + (n if m.group(5) else 0)
    if b % (2 * n) == bar(n, a):
        return diameter(n, a, TAGGED if m.group(1) else PLAIN)
    if m.group(1):
        raise ValueError("only diameters carry a color")
    return pair(n, a, b)


def parse_orbit(n: int, text: str) -> Orbit:
    """Inverse of ``str(orbit)``: ``a-b`` or ``a~a:plain|tagged``."""
    m = re.fullmatch(r"\s*(\d+)~(\d+):(plain|tagged)\s*", text)
    if m:
        return diameter(n, int(m.group(1)), m.group(3))
    a, b = (int(s) for s in text.split("-"))
    return pair(n, a, b)


def representatives(n: int, o: Orbit) -> list[tuple[int, int]]:
    if o.is_diameter:
        return [(o.a, o.b)]
    return [(o.a, o.b), tuple(sorted((bar(n, o.a), bar(n, o.b))))]


def orbits_d(n: int) -> list[Orbit]:
    out = set()
    for a, b in combinations(range(2 * n), 2):
        if b - a in (1, 2 * n - 1):
            continue
        if b == bar(n, a):
            out.add(diameter(n, a, PLAIN))
            out.add(diameter(n, a, TAGGED))
        else:
            out.add(pair(n, a, b))
    return sorted(out, key=str)


def _cross(s, t) -> bool:
    a, b = s
    c, d = t
    return a < c < b < d or c < a < d < b


def crossing_count(n: int, o1: Orbit, o2: Orbit) -> int:
    """Pairs of centrally symmetric crossing points between two orbits."""
    if o1.is_diameter and o2.is_diameter:
        return int(o1.a != o2.a and o1.color != o2.color)
    hits = sum(_cross(s, t) for s in representatives(n, o1) for t in representatives(n, o2))
    # every crossing point has its mirror image among the representative pairs
    return hits // 2


def noncrossing_d(n: int, o1: Orbit, o2: Orbit) -> bool:
    if o1.is_diameter and o2.is_diameter:
        return o1.a == o2.a or o1.color == o2.color
    return not any(_cross(s, t) for s in representatives(n, o1) for t in representatives(n, o2))


def sym_triangulations_d(n: int) -> list[frozenset[Orbit]]:
    if n < 3:
        raise ValueError("type D needs rank at least 3")
    orbs = orbits_d(n)
    g = nx.Graph()
    g.add_nodes_from(orbs)
    g.add_edges_from((p, q) for p, q in combinations(orbs, 2) if noncrossing_d(n, p, q))
    return sorted((frozenset(c) for c in nx.find_cliques(g)), key=lambda c: sorted(map(str, c)))


def initial_orbits_d(n: int) -> list[Orbit]:
    """Mutable rows of the initial seed, by node: ``[i, bar(n-1)]``, then the two diameters."""
    return [pair(n, i, bar(n, n - 1)) for i in range(1, n - 1)] + [
        diameter(n, n - 1, TAGGED),
        diameter(n, n - 1, PLAIN),
    ]


def frozen_names_d(n: int) -> list[str]:
    return [f"x{i}{i + 1}" for i in range(1, n - 1)] + [f"f{n - 1}", f"f{n}"]


def initial_seed_d(n: int) -> Seed:
    """Initial seed: rows ``z_1..z_n`` (by node), then ``x_{12}..x_{n-2,n-1}, f_{n-1}, f_n``.

    Arrows: ``z_i -> z_{i+1}`` and ``x_{i,i+1} -> z_i -> x_{i-1,i}`` along the
    chain; ``z_{n-2} -> z_{n-1}, z_n``; ``z_{n-1}, z_n -> x_{n-2,n-1}``;
    ``x_{n-2,n-1} -> z_{n-2}``; ``f_{n-1} -> z_{n-1}``; ``f_n -> z_n``.
    """
    if n < 3:
        raise ValueError("type D needs rank at least 3")
    r = 2 * n
    B = [[0] * n for _ in range(r)]

    def frozen_row(i):  # x_{i,i+1}, 1 <= i <= n-2
        return n + i - 1

    def arrow(u, v):  # rows are 0-based
        if u < n:
            B[v][u] += 1
        if v < n:
            B[u][v] -= 1

    for i in range(n - 3):
        arrow(i, i + 1)
    for i in range(1, n - 2):
        arrow(frozen_row(i), i - 1)
        arrow(i, frozen_row(i))
    arrow(n - 3, n - 2)
    arrow(n - 3, n - 1)
    arrow(n - 2, frozen_row(n - 2))
    arrow(n - 1, frozen_row(n - 2))
    arrow(frozen_row(n - 2), n - 3)
    arrow(2 * n - 2, n - 2)
    arrow(2 * n - 1, n - 1)
    return initial_seed(B)


# -- root system ----------------------------------------------------------------


@lru_cache(maxsize=None)
def cartan_d(n: int) -> np.ndarray:
    C = 2 * np.eye(n, dtype=np.int64)
    edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    for a, b in edges:
        C[a - 1, b - 1] = C[b - 1, a - 1] = -1
    C.setflags(write=False)
    return C


def orbit_to_root(n: int, o: Orbit) -> tuple[int, ...]:
    init = initial_orbits_d(n)
    if o in init:
        return tuple(-int(o == p) for p in init)
    return tuple(crossing_count(n, o, p) for p in init)


def root_to_weight(n: int, root) -> np.ndarray:
    """Fundamental-weight coordinates of ``sum root_i alpha_i``."""
    return cartan_d(n) @ np.asarray(root, dtype=np.int64)


def reflect(n: int, i: int, lam) -> np.ndarray:
    lam = np.asarray(lam, dtype=np.int64)
    return lam - lam[i - 1] * cartan_d(n)[:, i - 1]


def coxeter(n: int, lam) -> np.ndarray:
    """Apply ``c = s_n s_{n-1} ... s_1`` (``s_1`` acts first)."""
    for i in range(1, n + 1):
        lam = reflect(n, i, lam)
    return lam


def fundamental(n: int, i: int) -> np.ndarray:
    e = np.zeros(n, dtype=np.int64)
    e[i - 1] = 1
    return e


def w0_fundamental(n: int, i: int) -> np.ndarray:
    """``w_0 varpi_i = -varpi_{sigma(i)}``; sigma swaps n-1 and n when n is odd."""
    j = i
    if n % 2 and i in (n - 1, n):
        j = 2 * n - 1 - i
    return -fundamental(n, j)


@lru_cache(maxsize=None)
def coxeter_h(n: int, i: int) -> int:
    target = w0_fundamental(n, i)
    lam = fundamental(n, i)
    for m in range(2 * n * n):
        if (lam == target).all():
            return m
        lam = coxeter(n, lam)
    raise RuntimeError("Coxeter orbit did not reach w0 varpi")


def coxeter_weight(n: int, i: int, m: int) -> np.ndarray:
    if not 0 <= m <= coxeter_h(n, i):
        raise PowerOutOfRange(f"c^{m} varpi_{i} needs 0 <= m <= {coxeter_h(n, i)}")
    lam = fundamental(n, i)
    for _ in range(m):
        lam = coxeter(n, lam)
    return lam


def weight_to_root(n: int, i: int, m: int) -> tuple[int, ...]:
    """``-alpha_i`` for ``m = 0``; otherwise ``c^{m-1} varpi_i - c^m varpi_i`` in root coordinates."""
    if m == 0:
        return tuple(-int(k == i) for k in range(1, n + 1))
    beta = coxeter_weight(n, i, m - 1) - coxeter_weight(n, i, m)
    coords = np.linalg.solve(cartan_d(n).astype(float), beta.astype(float))
    root = np.rint(coords).astype(np.int64)
    if not (cartan_d(n) @ root == beta).all():
        raise ArithmeticError("weight difference is not in the root lattice")
    return tuple(int(c) for c in root)


def orbit_to_weight(n: int, o: Orbit) -> tuple[int, int]:
    """``(i, m)`` with the orbit labeled by ``c^m varpi_i``."""
    root = orbit_to_root(n, o)
    for i in range(1, n + 1):
        for m in range(coxeter_h(n, i) + 1):
            if weight_to_root(n, i, m) == root:
                return i, m
    raise ValueError(f"no Coxeter weight for root {root}")


# -- prime labels -------------------------------------------------------------------


def orbit_to_prime_d(n: int, o: Orbit) -> Label:
    if o.is_diameter:
        i = o.a
        if i == n - 1:
            return Label(n + 1, n - 1) if o.color == TAGGED else Label(n + 1, n)
        return Label(n, i) if o.color == TAGGED else Label(n - 1, i)
    a, b = o.a, o.b
    if b < n:  # [i, j], both unbarred
        return Label(b - 1, a)
    jb = b - n
    if jb == n - 1:  # [i, bar(n-1)]
        return Label(n + 1, a)
    if a < jb:  # [j, bar i] = Theta [bar j, i]: x_{i bar j} with j < i
        return Label(a, jb, True)
    raise FrozenOrbit(f"{o} has no prime label")


@lru_cache(maxsize=None)
def _prime_table(n: int) -> dict[Label, Orbit]:
    return {orbit_to_prime_d(n, o): o for o in orbits_d(n)}


def prime_to_orbit_d(n: int, lab: Label) -> Orbit:
    try:
        return _prime_table(n)[lab]
    except KeyError:
        raise FrozenOrbit(f"{lab} is not a mutable cluster variable label") from None


def frozen_labels_d(n: int) -> list[Label]:
    """Prime labels of the frozen rows of :func:`initial_seed_d`."""
    return [Label(i, i) for i in range(1, n - 1)] + [Label(n - 1, n - 1), Label(n, n)]


def seqmut_relations(n: int):
    """Exchange relations along ``mu_n o ... o mu_1`` on the initial seed.

    Yields ``(i, seed_before, (pos, neg))`` where ``pos``/``neg`` map 1-based
    rows to exponents; row ``k < i`` then holds ``z_k^dagger``.
    """
    seed = initial_seed_d(n)
    for i in range(1, n + 1):
        yield i, seed, exchange_monomials(seed, i)
        seed = mutate_seed(seed, i)


def row_labels_after(n: int, step: int) -> list[Label]:
    """Prime labels of the rows just before mutating at ``step``."""
    mutable = [Label(k, 0) if k < step else Label(n + 1, k) for k in range(1, n + 1)]
    return mutable + frozen_labels_d(n)
