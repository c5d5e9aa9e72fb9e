"""Sparse multivariate Laurent polynomials with integer coefficients.

Variables live in four namespaces (cluster ``x``, principal coefficient ``y``,
loop variables ``Y[i,p]`` and the ``t`` variables); a :class:`VarId` orders
first by namespace and then by index, which fixes the canonical term order.

Values are immutable.  A monomial is a tuple of ``(VarId, exponent)`` pairs
sorted by ``VarId`` with no zero exponents; a polynomial maps monomials to
nonzero integer coefficients.
"""
from __future__ import annotations

import re
from enum import IntEnum
from typing import Iterable, Mapping, NamedTuple


class Namespace(IntEnum):
    X = 0
    PY = 1
    Y = 2
    T = 3


_PREFIX = {Namespace.X: "x", Namespace.PY: "y", Namespace.Y: "Y", Namespace.T: "t"}
_BY_PREFIX = {v: k for k, v in _PREFIX.items()}


class VarId(NamedTuple):
    ns: Namespace
    idx: tuple

    def __str__(self):
        return f"{_PREFIX[self.ns]}[{','.join(map(str, self.idx))}]"


def X(k: int) -> VarId:
    return VarId(Namespace.X, (k,))


def PY(k: int) -> VarId:
    return VarId(Namespace.PY, (k,))


def Yv(i: int, p: int) -> VarId:
    return VarId(Namespace.Y, (i, p))


def T(k: int) -> VarId:
    return VarId(Namespace.T, (k,))


Monomial = tuple  # tuple[tuple[VarId, int], ...]
ONE: Monomial = ()


class LaurentError(ArithmeticError):
    pass


class NonInvertibleImage(LaurentError):
    """A negative power of a variable was mapped to a non-unit."""


class NonExactDivision(LaurentError):
    """The divisor does not divide the dividend in the Laurent ring."""


class ParseError(ValueError):
    pass


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_inv(m: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in m)


def mono_pow(m: Monomial, k: int) -> Monomial:
    if k == 0:
        return ONE
    return tuple((v, e * k) for v, e in m)


def monomial(exps: Mapping[VarId, int] | Iterable[tuple[VarId, int]]) -> Monomial:
    """Canonical monomial from a mapping, merging repeats and dropping zeros."""
    items = exps.items() if isinstance(exps, Mapping) else exps
    d: dict[VarId, int] = {}
    for v, e in items:
        d[v] = d.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in d.items() if e))


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({ONE: c} if c else {})

    @classmethod
    def var(cls, v: VarId, e: int = 1) -> "LaurentPoly":
        return cls._raw({((v, e),): 1} if e else {ONE: 1})

    @classmethod
    def mono(cls, m: Monomial | Mapping[VarId, int], c: int = 1) -> "LaurentPoly":
        if not isinstance(m, tuple):
            m = monomial(m)
        return cls._raw({m: c} if c else {})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for m in self._terms for _, e in m)

    def variables(self) -> set[VarId]:
        return {v for m in self._terms for v, _ in m}

    def min_exponent(self, v: VarId) -> int:
        """Smallest exponent of ``v`` over all terms (absent counts as 0)."""
        return min((dict(m).get(v, 0) for m in self._terms), default=0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items())

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit (a single term with coefficient +-1)."""
        if not self.is_unit():
            raise NonInvertibleImage(f"{self} is not a unit")
        (m, c), = self._terms.items()
        return LaurentPoly._raw({mono_inv(m): c})

    def mul_monomial(self, m: Monomial, c: int = 1) -> "LaurentPoly":
        return LaurentPoly._raw({mono_mul(k, m): v * c for k, v in self._terms.items()})

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / d`` in the Laurent ring; raises if it does not exist.

        Long division in lex order over the variables involved.  The quotient's
        Newton polytope is a Minkowski summand of the dividend's, so every
        quotient exponent lies in a box computed up front; leaving it means the
        division is not exact, which keeps the loop finite.
        """
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return self
        if d.is_monomial():
            (m, c), = d._terms.items()
            out = {}
            minv = mono_inv(m)
            for k, v in self._terms.items():
                q, r = divmod(v, c)
                if r:
                    raise NonExactDivision(f"coefficient {v} not divisible by {c}")
                out[mono_mul(k, minv)] = q
            return LaurentPoly._raw(out)

        vars_ = sorted(self.variables() | d.variables())
        pos = {v: i for i, v in enumerate(vars_)}
        nv = len(vars_)

        def dense(m):
            e = [0] * nv
            for v, k in m:
                e[pos[v]] = k
            return tuple(e)

        num = {dense(m): c for m, c in self._terms.items()}
        den = [(dense(m), c) for m, c in d._terms.items()]
        lo = [min(e[i] for e in num) - min(e[i] for e, _ in den) for i in range(nv)]
        hi = [max(e[i] for e in num) - max(e[i] for e, _ in den) for i in range(nv)]
        lt, lc = max(den)
        quotient = {}
        rem = num
        while rem:
            top = max(rem)
            c = rem[top]
            q, r = divmod(c, lc)
            qm = tuple(a - b for a, b in zip(top, lt))
            if r or any(x < l or x > h for x, l, h in zip(qm, lo, hi)):
                raise NonExactDivision("divisor does not divide dividend")
            quotient[qm] = q
            for dm, dc in den:
                key = tuple(a + b for a, b in zip(qm, dm))
                s = rem.get(key, 0) - q * dc
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return LaurentPoly._raw(
            {tuple((vars_[i], e) for i, e in enumerate(qm) if e): c for qm, c in quotient.items()}
        )

    # -- substitution -------------------------------------------------------

    def substitute(self, assignment: Mapping[VarId, "LaurentPoly | int"]) -> "LaurentPoly":
        """Replace variables by polynomials; unassigned variables pass through.

        A variable that occurs with a negative exponent must be sent to a unit.
        """
        if not assignment:
            return self
        images = {v: LaurentPoly._coerce(p) for v, p in assignment.items()}
        cache: dict[tuple[VarId, int], LaurentPoly] = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                img = images[v]
                if e < 0:
                    if not img.is_unit():
                        raise NonInvertibleImage(f"{v}^{e} with non-unit image {img}")
                    cache[key] = img.inverse() ** (-e)
                else:
                    cache[key] = img ** e
            return cache[key]

        result = LaurentPoly()
        for m, c in self._terms.items():
            keep = tuple((v, e) for v, e in m if v not in images)
            term = LaurentPoly._raw({keep: c})
            for v, e in m:
                if v in images:
                    term = term * power(v, e)
            result = result + term
        return result

    def specialize(self, values: Mapping[VarId, int]) -> "LaurentPoly":
        """Set variables to +-1 (or other integers when they occur positively)."""
        return self.substitute({v: LaurentPoly.const(c) for v, c in values.items()})

    def rename(self, mapping: Mapping[VarId, VarId]) -> "LaurentPoly":
        out: dict = {}
        for m, c in self._terms.items():
            nm = monomial((mapping.get(v, v), e) for v, e in m)
            s = out.get(nm, 0) + c
            if s:
                out[nm] = s
            else:
                out.pop(nm, None)
        return LaurentPoly._raw(out)

    # -- comparison / rendering --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def canonical_string(self) -> str:
        if not self._terms:
            return "0"
        if len(self._terms) == 1 and ONE in self._terms:
            return str(self._terms[ONE])
        parts = []
        for m, c in self.sorted_terms():
            s = f"{'+' if c > 0 else '-'}{abs(c)}"
            for v, e in m:
                s += f"*{v}^{e}"
            parts.append(s)
        return " ".join(parts)

    __str__ = canonical_string

    def __repr__(self):
        return f"LaurentPoly({self.canonical_string()!r})"

    def to_json(self) -> list:
        return [
            {"coef": c, "exps": [[str(v), e] for v, e in m]}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list) -> "LaurentPoly":
        out = LaurentPoly()
        for term in data:
            m = monomial((parse_var(v), e) for v, e in term["exps"])
            out = out + LaurentPoly.mono(m, term["coef"])
        return out


_VAR_RE = re.compile(r"^([xyYt])\[(-?\d+(?:,-?\d+)*)\]$")


def parse_var(text: str) -> VarId:
    m = _VAR_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad variable {text!r}")
    return VarId(_BY_PREFIX[m.group(1)], tuple(int(s) for s in m.group(2).split(",")))


_TERM_SPLIT = re.compile(r"(?<![\^\[,])(?=[+-])")


def parse(text: str) -> LaurentPoly:
    """Parse the canonical text form (and the looser ``1 + t[3]*t[2]^2`` style)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty input")
    result = LaurentPoly()
    for chunk in _TERM_SPLIT.split(s):
        if not chunk:
            continue
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise ParseError(f"dangling sign in {text!r}")
        coef = 1
        exps: list[tuple[VarId, int]] = []
        for factor in chunk.split("*"):
            if re.fullmatch(r"\d+", factor):
                coef *= int(factor)
                continue
            base, _, power = factor.partition("^")
            try:
                e = int(power) if power else 1
            except ValueError:
                raise ParseError(f"bad exponent in {factor!r}") from None
            exps.append((parse_var(base), e))
        result = result + LaurentPoly.mono(monomial(exps), sign * coef)
    return result


def x(k: int) -> LaurentPoly:
    return LaurentPoly.var(X(k))


def y(k: int) -> LaurentPoly:
    return LaurentPoly.var(PY(k))


def t(k: int) -> LaurentPoly:
    return LaurentPoly.var(T(k))


def Y(i: int, p: int, e: int = 1) -> LaurentPoly:
    return LaurentPoly.var(Yv(i, p), e)
