"""Reference tables for D4 shipped as plain-text data files.

Each file holds one record per line with ``#`` comments.  Orbit names use the
short form understood by :func:`qcluster.model_d.from_name`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .laurent import LaurentPoly, parse
from .model_d import Orbit, from_name
from .qchar import Label

RANK = 4


@dataclass(frozen=True)
class OrbitRow:
    name: str
    orbit: Orbit
    root: tuple[int, ...]
    node: int
    power: int


@dataclass(frozen=True)
class CharacterRow:
    name: str
    orbit: Orbit
    label: Label
    monomial: LaurentPoly
    tpoly: LaurentPoly


@dataclass(frozen=True)
class PairRow:
    names: tuple[str, str]
    orbits: tuple[Orbit, Orbit]
    case: str


def _lines(filename: str):
    text = resources.files("qcluster.data").joinpath(filename).read_text(encoding="utf-8")
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def parse_root(text: str, n: int = RANK) -> tuple[int, ...]:
    """``-a1`` or ``a1+2a2+a3`` -> coordinates in the simple-root basis."""
    coords = [0] * n
    sign = -1 if text.startswith("-") else 1
    for term in text.lstrip("-").split("+"):
        m = re.fullmatch(r"(\d*)a(\d+)", term)
        if not m:
            raise ValueError(f"bad root {text!r}")
        coords[int(m.group(2)) - 1] += sign * int(m.group(1) or 1)
    return tuple(coords)


def parse_weight(text: str) -> tuple[int, int]:
    """``c^2*w3`` -> ``(3, 2)``; ``w1`` -> ``(1, 0)``; ``c*w4`` -> ``(4, 1)``."""
    m = re.fullmatch(r"(?:c(?:\^(\d+))?\*)?w(\d+)", text)
    if not m:
        raise ValueError(f"bad weight {text!r}")
    if text.startswith("c"):
        power = int(m.group(1) or 1)
    else:
        power = 0
    return int(m.group(2)), power


def orbit_labels() -> list[OrbitRow]:
    rows = []
    for line in _lines("d4_orbit_labels.txt"):
        name, root, weight = line.split()
        node, power = parse_weight(weight)
        rows.append(OrbitRow(name, from_name(RANK, name), parse_root(root), node, power))
    return rows


def prime_characters() -> list[CharacterRow]:
    rows = []
    for line in _lines("d4_prime_characters.txt"):
        name, label, mono, tpoly = (s.strip() for s in line.split("|"))
        rows.append(CharacterRow(name, from_name(RANK, name), Label.parse(label), parse(mono), parse(tpoly)))
    return rows


def compatible_pairs() -> list[PairRow]:
    rows = []
    for line in _lines("d4_compatible_pairs.txt"):
        a, b, case = line.split()
        rows.append(PairRow((a, b), (from_name(RANK, a), from_name(RANK, b)), case))
    return rows


def catalog_names() -> set[str]:
    """Orbit names used by the character table, one per cluster variable."""
    return {r.name for r in prime_characters()}
