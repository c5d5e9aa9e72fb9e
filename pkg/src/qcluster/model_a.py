"""Type A model: diagonals of the (n+3)-gon with vertices ``0..n+2``.

Crossing is decided by interleaving of endpoints, never geometrically.
"""
from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

import networkx as nx

from .cluster import Seed, initial_seed
from .qchar import Label, UNIT


class NotADiagonalOfT(ValueError):
    pass


class Segment(NamedTuple):
    a: int
    b: int

    def __str__(self):
        return f"{self.a}-{self.b}"

    @classmethod
    def parse(cls, text: str) -> "Segment":
        a, b = (int(s) for s in text.split("-"))
        return cls(min(a, b), max(a, b))

    def is_diagonal(self, n: int) -> bool:
        return self.b - self.a >= 2 and (self.a, self.b) != (0, n + 2)


def crossing_a(s: Segment, t: Segment) -> bool:
    a, b = s
    c, d = t
    return a < c < b < d or c < a < d < b


def diagonals_a(n: int) -> list[Segment]:
    return [Segment(a, b) for a, b in combinations(range(n + 3), 2) if Segment(a, b).is_diagonal(n)]


def triangulations_a(n: int) -> list[frozenset[Segment]]:
    """All triangulations, as maximal sets of pairwise noncrossing diagonals."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    diags = diagonals_a(n)
    g = nx.Graph()
    g.add_nodes_from(diags)
    g.add_edges_from((s, t) for s, t in combinations(diags, 2) if not crossing_a(s, t))
    return sorted((frozenset(c) for c in nx.find_cliques(g)), key=sorted)


def flip(T, d: Segment) -> tuple[frozenset[Segment], tuple[int, int, int, int]]:
    """Replace ``d`` by the other diagonal of its quadrilateral.

    Returns the new triangulation and the quadruple ``a<b<c<d`` for which
    ``x_ac x_bd = x_ab x_cd + x_ad x_bc``.
    """
    T = frozenset(T)
    if d not in T:
        raise NotADiagonalOfT(f"{d} is not in the triangulation")
    rest = T - {d}
    n = len(T)
    # The quadrilateral's corners are the two apexes of the triangles on d.
    apexes = [
        v for v in range(n + 3)
        if v not in d and all(_edge(Segment(*sorted((v, u))), rest, n) for u in d)
    ]
    if len(apexes) != 2:
        raise NotADiagonalOfT(f"{d} does not bound two triangles of the triangulation")
    e = Segment(*sorted(apexes))
    quad = tuple(sorted((*d, *e)))
    return rest | {e}, quad


def _edge(s: Segment, diagonals: frozenset, n: int) -> bool:
    return s in diagonals or not s.is_diagonal(n)


def initial_segments_a(n: int) -> list[Segment]:
    """Row order of the initial seed: ``x_{0,2..n+1}`` then frozen ``x_{i,i+1}``."""
    return [Segment(0, i) for i in range(2, n + 2)] + [Segment(i, i + 1) for i in range(1, n + 1)]


def initial_seed_a(n: int) -> Seed:
    """Fan triangulation from vertex 0, with frozen sides ``[i, i+1]``.

    Arrows: ``x_{0,i} -> x_{0,i+1}``, ``x_{0,i+1} -> x_{i,i+1}`` and
    ``x_{i+1,i+2} -> x_{0,i+1}``.  Row ``b_{uv} > 0`` counts arrows ``v -> u``.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    rows = initial_segments_a(n)
    pos = {s: r for r, s in enumerate(rows)}
    B = [[0] * n for _ in rows]

    def arrow(u, v):
        if pos[u] < n:
            B[pos[v]][pos[u]] += 1
        if pos[v] < n:
            B[pos[u]][pos[v]] -= 1

    for i in range(1, n + 1):
        top = Segment(0, i + 1)
        if i < n:
            arrow(top, Segment(0, i + 2))
            arrow(Segment(i + 1, i + 2), top)
        arrow(top, Segment(i, i + 1))
    return initial_seed(B)


def segment_to_root(n: int, s: Segment) -> tuple[int, ...]:
    """Almost positive root: ``-e_i`` on the initial fan, else crossing counts."""
    fan = initial_segments_a(n)[:n]
    if s in fan:
        return tuple(-int(f == s) for f in fan)
    return tuple(int(crossing_a(s, f)) for f in fan)


def segment_to_prime_a(n: int, s: Segment) -> Label:
    """``x_ab -> L(a, b-1)``; the three specialized sides go to the unit."""
    if (s.a, s.b) in ((0, 1), (n + 1, n + 2), (0, n + 2)):
        return UNIT
    return Label(s.a, s.b - 1)


def prime_to_segment_a(label: Label) -> Segment:
    return Segment(label.i, label.j + 1)


def ptolemy_relations(n: int):
    """Every quadrilateral ``a<b<c<d`` with its exchange relation segments.

    Yields ``(a, b, c, d), (ac, bd), ((ab, cd), (ad, bc))``.
    """
    for a, b, c, d in combinations(range(n + 3), 4):
        S = Segment
        yield (a, b, c, d), (S(a, c), S(b, d)), ((S(a, b), S(c, d)), (S(a, d), S(b, c)))
