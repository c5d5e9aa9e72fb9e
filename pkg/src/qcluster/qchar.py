"""Height functions, the Y-ring window and truncated q-characters of primes.

Only the two linear height functions are catalogued: ``xi_i = i`` in type
A_n, and ``xi_i = n-1-i`` (``i < n``), ``xi_n = 0`` in type D_n.  Nodes ``0``
and ``n+1`` are boundary nodes whose ``Y`` variables equal 1; they are erased
when monomials are built.

A prime character is stored through its renormalized form, a polynomial in
``t_i = A_{i, xi_i + 1}^{-1}``; :func:`renormalize_and_tsub` recovers that
form from the Y-expansion by an independent triangular solve.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .laurent import LaurentPoly, Monomial, Namespace, T, Yv, mono_inv, mono_mul, monomial


class ParityViolation(ValueError):
    pass


class InvalidLabel(ValueError):
    pass


class NotExpressibleInT(ArithmeticError):
    pass


# -- height functions ---------------------------------------------------------


@dataclass(frozen=True)
class HeightFunction:
    kind: str
    n: int
    xi: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("A", "D"):
            raise ValueError(f"unsupported type {self.kind!r}")
        if len(self.xi) != self.n:
            raise ValueError("one height per node")
        for i in self.nodes:
            for j in self.neighbors(i):
                if abs(self(i) - self(j)) != 1:
                    raise ValueError(f"|xi_{i} - xi_{j}| must be 1 on edge {i}-{j}")

    def __call__(self, i: int) -> int:
        return self.xi[i - 1]

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, i: int) -> tuple[int, ...]:
        n = self.n
        if self.kind == "A" or n < 3:
            return tuple(j for j in (i - 1, i + 1) if 1 <= j <= n)
        if i == n:
            return (n - 2,)
        if i == n - 1:
            return (n - 2,)
        if i == n - 2:
            return tuple(j for j in (n - 3, n - 1, n) if j >= 1)
        return tuple(j for j in (i - 1, i + 1) if j >= 1)

    def cartan(self) -> list[list[int]]:
        return [[2 if i == j else -int(j in self.neighbors(i)) for j in self.nodes] for i in self.nodes]

    # order used for type D labels: 0 is maximal, n+1 minimal, n-1 and n incomparable
    def _rank(self, i: int) -> float:
        if i == 0:
            return float("inf")
        if i == self.n + 1:
            return float("-inf")
        return self(i)

    def prec(self, a: int, b: int) -> bool:
        """Strict order ``a < b`` (false for the incomparable pair n-1, n)."""
        if a == b or {a, b} == {self.n - 1, self.n}:
            return False
        return self._rank(a) < self._rank(b)

    def preceq(self, a: int, b: int) -> bool:
        return a == b or self.prec(a, b)


def height_a(n: int) -> HeightFunction:
    if n < 1:
        raise ValueError("rank must be at least 1")
    return HeightFunction("A", n, tuple(range(1, n + 1)))


def height_d(n: int) -> HeightFunction:
    if n < 3:
        raise ValueError("type D needs rank at least 3")
    return HeightFunction("D", n, tuple(n - 1 - i for i in range(1, n)) + (0,))


def height(kind: str, n: int) -> HeightFunction:
    return {"A": height_a, "D": height_d}[kind.upper()](n)


# -- Y monomials ---------------------------------------------------------------


def ymonomial(xi: HeightFunction, exps: Mapping[tuple[int, int], int] | Iterable) -> Monomial:
    """Monomial in ``Y[i,p]``; boundary nodes are erased, parity is enforced."""
    items = exps.items() if isinstance(exps, Mapping) else exps
    out = []
    for (i, p), e in items:
        if i in (0, xi.n + 1):
            continue
        if not 1 <= i <= xi.n:
            raise ValueError(f"node {i} outside 0..{xi.n + 1}")
        if (p - xi(i)) % 2:
            raise ParityViolation(f"Y[{i},{p}] has the wrong parity for this height function")
        out.append((Yv(i, p), e))
    return monomial(out)


def a_variable(xi: HeightFunction, i: int, p: int) -> Monomial:
    """The monomial ``A_{i,p+1} = Y_{i,p} Y_{i,p+2} prod_{j~i} Y_{j,p+1}^{-1}``."""
    exps = [((i, p), 1), ((i, p + 2), 1)] + [((j, p + 1), -1) for j in xi.neighbors(i)]
    return ymonomial(xi, exps)


def t_monomial(xi: HeightFunction, i: int) -> Monomial:
    """``t_i = A_{i, xi_i + 1}^{-1}`` as a Y-monomial."""
    return mono_inv(a_variable(xi, i, xi(i)))


def window(xi: HeightFunction) -> set[tuple[int, int]]:
    return {(i, xi(i)) for i in xi.nodes} | {(i, xi(i) + 2) for i in xi.nodes}


def in_window(xi: HeightFunction, chi: LaurentPoly) -> bool:
    w = window(xi)
    return all(v.ns == Namespace.Y and v.idx in w for v in chi.variables())


def dominant_monomials(chi: LaurentPoly) -> dict[Monomial, int]:
    return {m: c for m, c in chi.items() if all(e >= 0 for _, e in m)}


def is_minuscule(chi: LaurentPoly) -> bool:
    return len(dominant_monomials(chi)) == 1


def t_exponents(xi: HeightFunction, ratio: Monomial) -> tuple[int, ...] | None:
    """Integer vector ``v`` with ``ratio = prod t_i^{v_i}``, or ``None``.

    The ``Y[i, xi_i + 2]`` coordinates give a unitriangular system when nodes
    are processed by decreasing height; the remaining coordinates are then
    checked by rebuilding the monomial.
    """
    e = dict(ratio)
    v: dict[int, int] = {}
    for i in sorted(xi.nodes, key=lambda k: -xi(k)):
        higher = sum(v[j] for j in xi.neighbors(i) if xi(j) == xi(i) + 1)
        v[i] = higher - e.get(Yv(i, xi(i) + 2), 0)
    vec = tuple(v[i] for i in xi.nodes)
    rebuilt: Monomial = ()
    for i, k in zip(xi.nodes, vec):
        if k:
            rebuilt = mono_mul(rebuilt, tuple((var, k * ex) for var, ex in t_monomial(xi, i)))
    return vec if rebuilt == tuple(sorted(ratio)) else None


def t_to_y(xi: HeightFunction, tpoly: LaurentPoly) -> LaurentPoly:
    return tpoly.substitute({T(i): LaurentPoly.mono(t_monomial(xi, i)) for i in xi.nodes})


# -- labels --------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Label:
    """Prime label ``L(i,j)``; ``dagger`` marks the type D family ``L(i,j)+``."""

    i: int
    j: int
    dagger: bool = False

    def __str__(self):
        return f"L({self.i},{self.j})" + ("+" if self.dagger else "")

    @classmethod
    def parse(cls, text: str) -> "Label":
        m = re.fullmatch(r"\s*L\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(\+|†|\^?dag)?\s*", text)
        if not m:
            raise InvalidLabel(f"cannot parse label {text!r}")
        return cls(int(m.group(1)), int(m.group(2)), m.group(3) is not None)


UNIT = Label(0, 0)


def is_valid(xi: HeightFunction, lab: Label) -> bool:
    n = xi.n
    if not (0 <= lab.i <= n + 1 and 0 <= lab.j <= n + 1):
        return False
    if xi.kind == "A":
        return not lab.dagger and lab.i <= lab.j
    if lab.dagger:
        return xi.preceq(n - 2, lab.j) and xi.prec(lab.j, lab.i) and xi.preceq(lab.i, 0)
    return xi.preceq(n + 1, lab.i) and xi.preceq(lab.i, lab.j) and xi.preceq(lab.j, 0)


def _check(xi: HeightFunction, lab: Label):
    if not is_valid(xi, lab):
        raise InvalidLabel(f"{lab} is not a prime label in type {xi.kind}{xi.n}")


def label_monomial(xi: HeightFunction, lab: Label) -> Monomial:
    _check(xi, lab)
    n = xi.n

    def h(k):
        return xi(k) if 1 <= k <= n else 0

    if lab.dagger:
        exps = [((n, 0), 1), ((n - 1, 0), 1), ((lab.i, h(lab.i) + 2), 1), ((lab.j, h(lab.j) + 2), 1)]
    else:
        exps = [((lab.i, h(lab.i)), 1), ((lab.j, h(lab.j) + 2), 1)]
    return ymonomial(xi, exps)


def is_trivial(xi: HeightFunction, lab: Label) -> bool:
    return label_monomial(xi, lab) == ()


def is_frozen(xi: HeightFunction, lab: Label) -> bool:
    return not lab.dagger and lab.i == lab.j and 1 <= lab.i <= xi.n


def prime_labels(xi: HeightFunction, frozen: bool = True) -> list[Label]:
    """All nontrivial prime labels, optionally without the frozen ``L(i,i)``."""
    n = xi.n
    cands = [Label(i, j, d) for i in range(n + 2) for j in range(n + 2) for d in (False, True)]
    out = [
        lab for lab in cands
        if is_valid(xi, lab) and not is_trivial(xi, lab) and (frozen or not is_frozen(xi, lab))
    ]
    return sorted(out)


# -- closed-form renormalized characters -----------------------------------------


def _chain(nodes: Iterable[int]) -> LaurentPoly:
    """``1 + t_a + t_a t_b + ...`` along the given node sequence."""
    total = LaurentPoly.const(1)
    prefix = LaurentPoly.const(1)
    for k in nodes:
        prefix = prefix * LaurentPoly.var(T(k))
        total = total + prefix
    return total


def _chi_d(n: int, j: int) -> LaurentPoly:
    # chain A_{n-2,2}, A_{n-3,3}, ..., A_{j+1,xi_j}: nodes n-2 down to j+1
    return _chain(range(n - 2, j, -1))


def renormalized_prime(xi: HeightFunction, lab: Label) -> LaurentPoly:
    """Renormalized truncated q-character of a prime, as a polynomial in ``t``."""
    _check(xi, lab)
    n, i, j = xi.n, lab.i, lab.j
    if xi.kind == "A":
        if i == 0 or i == n + 1:
            return LaurentPoly.const(1)
        # A_{i,i+1} ... A_{j-1,j}: nodes i .. j-1
        return _chain(range(i, j))
    t = lambda k: LaurentPoly.var(T(k))  # noqa: E731
    if lab.dagger:
        cj, ci = _chi_d(n, j), _chi_d(n, i)
        return 1 + (t(n - 1) + t(n)) * cj + t(n - 1) * t(n) * ci * cj
    if i == n + 1 or i == j:
        return LaurentPoly.const(1)
    if i == n:
        return 1 + t(n) * _chi_d(n, j)
    # n-1 >= i >= j numerically: nodes i, i-1, ..., j+1
    return _chain(range(i, j, -1))


def trunc_qchar_prime(xi: HeightFunction, lab: Label) -> LaurentPoly:
    _check(xi, lab)
    return _catalog(xi)[lab]


def trunc_qchar_prime_a(n: int, i: int, j: int) -> LaurentPoly:
    return trunc_qchar_prime(height_a(n), Label(i, j))


def trunc_qchar_prime_d(n: int, lab: Label) -> LaurentPoly:
    return trunc_qchar_prime(height_d(n), lab)


@lru_cache(maxsize=None)
def _catalog(xi: HeightFunction) -> dict[Label, LaurentPoly]:
    out = {}
    for i in range(xi.n + 2):
        for j in range(xi.n + 2):
            for d in (False, True):
                lab = Label(i, j, d)
                if is_valid(xi, lab):
                    out[lab] = t_to_y(xi, renormalized_prime(xi, lab)).mul_monomial(label_monomial(xi, lab))
    return out


def catalog(xi: HeightFunction) -> dict[Label, LaurentPoly]:
    """Truncated q-characters of every valid label (trivial ones included)."""
    return dict(_catalog(xi))


# -- renormalization -------------------------------------------------------------


def highest_monomial(xi: HeightFunction, chi: LaurentPoly) -> Monomial:
    """The monomial every other term lies below by a product of ``t`` variables."""
    for m in sorted(dominant_monomials(chi)):
        inv = mono_inv(m)
        ok = True
        for other in chi.terms:
            v = t_exponents(xi, mono_mul(other, inv))
            if v is None or min(v, default=0) < 0:
                ok = False
                break
        if ok:
            return m
    raise NotExpressibleInT("no highest monomial")


def renormalize_and_tsub(chi: LaurentPoly, xi: HeightFunction, label: Monomial | None = None) -> LaurentPoly:
    """Divide by the highest monomial and rewrite the rest in the ``t`` variables."""
    top = highest_monomial(xi, chi) if label is None else label
    inv = mono_inv(top)
    out: dict = {}
    for m, c in chi.items():
        v = t_exponents(xi, mono_mul(m, inv))
        if v is None or min(v, default=0) < 0:
            raise NotExpressibleInT(f"term {m} is not the label times t-monomials")
        tm = tuple((T(i), k) for i, k in zip(xi.nodes, v) if k)
        out[tm] = out.get(tm, 0) + c
    return LaurentPoly(out)


def qchar_simple(xi: HeightFunction, m: Monomial) -> LaurentPoly:
    """Truncated q-character of the simple module with dominant label ``m``."""
    from .simplicity import factorize_simple

    chi = LaurentPoly.const(1)
    for lab in factorize_simple(xi, m):
        chi = chi * trunc_qchar_prime(xi, lab)
    return chi
