"""Simplicity of tensor products of primes, factorization and composition factors."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .laurent import LaurentPoly, Monomial, mono_inv, mono_mul
from .qchar import (
    HeightFunction,
    Label,
    dominant_monomials,
    is_frozen,
    is_trivial,
    label_monomial,
    prime_labels,
    qchar_simple,
    t_exponents,
    window,
)


class NoFactorization(ValueError):
    pass


class NonUniqueFactorization(ValueError):
    pass


class NegativeMultiplicity(ArithmeticError):
    pass


class NonTermination(RuntimeError):
    pass


@dataclass(frozen=True)
class SimplicityVerdict:
    simple: bool
    case: str

    def to_json(self) -> dict:
        return {"simple": self.simple, "case": self.case}


def crossing_pair_a(i: int, j: int, k: int, l: int) -> bool:
    """``(i,j)`` and ``(k,l)`` cross iff ``i < k <= j < l`` or ``k < i <= l < j``."""
    return i < k <= j < l or k < i <= l < j


def _case_d(xi: HeightFunction, p: Label, q: Label) -> SimplicityVerdict:
    n = xi.n
    lt, le = xi.prec, xi.preceq
    if p.dagger and not q.dagger:
        p, q = q, p
    i, j, k, l = p.i, p.j, q.i, q.j
    if not p.dagger and not q.dagger:
        if {i, k} == {n - 1, n}:
            return SimplicityVerdict(j == l or i == j or k == l, "b")
        crossing = (lt(i, k) and le(k, j) and lt(j, l)) or (lt(k, i) and le(i, l) and lt(l, j))
        return SimplicityVerdict(not crossing, "a")
    if p.dagger and q.dagger:
        ok = (le(j, l) and lt(l, k) and le(k, i)) or (le(l, j) and lt(j, i) and le(i, k))
        return SimplicityVerdict(ok, "c")
    if le(n - 2, i):
        ok = (
            i == j
            or (lt(i, j) and le(j, l) and lt(l, k))
            or (lt(l, k) and lt(k, i) and lt(i, j))
            or (lt(l, i) and lt(i, j) and le(j, k))
        )
        return SimplicityVerdict(ok, "d")
    ok = i == j or (i != n + 1 and le(l, j) and le(j, k)) or (i == n + 1 and le(k, j))
    return SimplicityVerdict(ok, "e")


def simple_pair(xi: HeightFunction, p1: Label, p2: Label) -> SimplicityVerdict:
    """Is ``L(p1) (x) L(p2)`` simple?  Reports which case of the criterion applied."""
    if is_trivial(xi, p1) or is_trivial(xi, p2):
        return SimplicityVerdict(True, "trivial")
    if xi.kind == "A":
        verdict = SimplicityVerdict(not crossing_pair_a(p1.i, p1.j, p2.i, p2.j), "A")
    else:
        verdict = _case_d(xi, p1, p2)
    if is_frozen(xi, p1) or is_frozen(xi, p2):
        return SimplicityVerdict(verdict.simple, "frozen")
    return verdict


def simple_product(xi: HeightFunction, labels) -> bool:
    labels = list(labels)
    return all(simple_pair(xi, a, b).simple for a, b in combinations(labels, 2))


@lru_cache(maxsize=None)
def _prime_table(xi: HeightFunction):
    """Window coordinates, primes by decreasing size as dense vectors, and
    for each prime a bitmask of the primes it is simple with."""
    coords = sorted(window(xi))
    pos = {c: k for k, c in enumerate(coords)}
    labs = sorted(
        ((lab, label_monomial(xi, lab)) for lab in prime_labels(xi)),
        key=lambda p: (-sum(e for _, e in p[1]), p[0]),
    )
    vecs = []
    for _, m in labs:
        v = [0] * len(coords)
        for var, e in m:
            v[pos[var.idx]] = e
        vecs.append(tuple(v))
    masks = []
    for a, _ in labs:
        mask = 0
        for bit, (b, _) in enumerate(labs):
            if simple_pair(xi, a, b).simple:
                mask |= 1 << bit
        masks.append(mask)
    cover = [sum(1 << bit for bit, v in enumerate(vecs) if v[c]) for c in range(len(coords))]
    return pos, [lab for lab, _ in labs], vecs, masks, cover


def _factorizations(xi: HeightFunction, m: Monomial, limit: int | None):
    """Backtracking over primes in decreasing label size.

    Each prime may only be followed by primes at the same or later position,
    so every multiset is produced once.  ``allowed`` is the bitmask of primes
    simple with everything chosen so far.
    """
    pos, labels, vecs, masks, cover = _prime_table(xi)
    target = [0] * len(pos)
    for var, e in m:
        if var.idx not in pos:
            return []
        target[pos[var.idx]] = e
    found: list[tuple[Label, ...]] = []
    chosen: list[int] = []

    def search(rest: list[int], start: int, allowed: int):
        if limit is not None and len(found) >= limit:
            return
        first = next((c for c, e in enumerate(rest) if e), None)
        if first is None:
            found.append(tuple(sorted(labels[k] for k in chosen)))
            return
        # Some later allowed prime has to cover the first nonzero coordinate.
        if not cover[first] & allowed >> start << start:
            return
        for idx in range(start, len(vecs)):
            if not allowed >> idx & 1:
                continue
            v = vecs[idx]
            if any(a > b for a, b in zip(v, rest)):
                continue
            chosen.append(idx)
            search([b - a for a, b in zip(v, rest)], idx, allowed & masks[idx])
            chosen.pop()

    search(target, 0, (1 << len(vecs)) - 1)
    return found


def all_factorizations(xi: HeightFunction, m: Monomial) -> list[tuple[Label, ...]]:
    return _factorizations(xi, tuple(m), None)


def factorize_simple(xi: HeightFunction, m: Monomial | LaurentPoly, check_unique: bool = False) -> tuple[Label, ...]:
    """Pairwise-simple multiset of primes whose labels multiply to ``m``."""
    if isinstance(m, LaurentPoly):
        (m, c), = m.items()
    if any(e < 0 for _, e in m):
        raise NoFactorization(f"{m} is not dominant")
    found = _factorizations(xi, tuple(m), None if check_unique else 1)
    if not found:
        raise NoFactorization(f"no factorization of {LaurentPoly.mono(m)}")
    if check_unique and len(found) > 1:
        raise NonUniqueFactorization(f"{len(found)} factorizations of {LaurentPoly.mono(m)}")
    return found[0]


def _below(xi: HeightFunction, low: Monomial, high: Monomial) -> bool:
    v = t_exponents(xi, mono_mul(low, mono_inv(high)))
    return v is not None and min(v) >= 0 and any(v)


def decompose_tensor(
    xi: HeightFunction, m1: Monomial, m2: Monomial, max_steps: int = 10_000
) -> dict[tuple[Label, ...], int]:
    """Composition factors of ``L(m1) (x) L(m2)``, keyed by prime factorization.

    Repeatedly peels off the character of a maximal dominant monomial; ties
    among incomparable maxima go to the smallest in canonical order.
    """
    chi = qchar_simple(xi, m1) * qchar_simple(xi, m2)
    factors: Counter = Counter()
    for _ in range(max_steps):
        if not chi:
            return dict(sorted(factors.items()))
        dom = dominant_monomials(chi)
        if not dom:
            raise NegativeMultiplicity(f"leftover {chi} has no dominant monomial")
        top = min(d for d in dom if not any(_below(xi, d, e) for e in dom if e != d))
        mult = dom[top]
        if mult < 0:
            raise NegativeMultiplicity(f"{LaurentPoly.mono(top)} has multiplicity {mult}")
        factors[factorize_simple(xi, top)] += mult
        chi = chi - qchar_simple(xi, top) * mult
    raise NonTermination("character was not consumed")
