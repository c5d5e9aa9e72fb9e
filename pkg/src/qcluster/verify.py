"""Consistency checks tying the cluster side to the q-character side.

Every check is a plain function ``(kind, n) -> (status, details)`` so the CLI
can fan them out over worker processes.  Details are JSON-ready.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import comb

from . import model_a, model_d, tables
from .cluster import compatible, drop_coefficients, exchange_graph, initial_seed
from .correspondence import build_model, model_seed
from .laurent import LaurentPoly
from .qchar import (
    Label,
    dominant_monomials,
    height,
    is_trivial,
    label_monomial,
    prime_labels,
    renormalize_and_tsub,
    trunc_qchar_prime,
    window,
    ymonomial,
)
from .simplicity import all_factorizations, decompose_tensor, factorize_simple, simple_pair

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# Desk-scale limits for the checks whose cost grows quickly with the rank.
POSITIVITY_MAX = {"A": 5, "D": 4}
FACTORIZATION_MAX_A = 4


@dataclass
class Check:
    name: str
    status: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


@dataclass
class VerificationReport:
    checks: list[Check]

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(c.status for c in self.checks)
        return {s: counts.get(s, 0) for s in (PASS, FAIL, SKIPPED)}

    @property
    def exit_code(self) -> int:
        return 1 if self.summary[FAIL] else 0

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "summary": self.summary}

    def to_table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=4)
        lines = [f"{c.name:<{width}}  {c.status}" for c in self.checks]
        s = self.summary
        lines.append(f"{s[PASS]} passed, {s[FAIL]} failed, {s[SKIPPED]} skipped")
        return "\n".join(lines)


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def expected_counts(kind: str, n: int) -> dict[str, int]:
    if kind == "A":
        return {"variables": n * (n + 3) // 2, "clusters": catalan(n + 1)}
    known = {4: 50, 5: 182}
    out = {"variables": n * n}
    if n in known:
        out["clusters"] = known[n]
    return out


def model_triangulations(kind: str, n: int) -> list[frozenset]:
    return model_a.triangulations_a(n) if kind == "A" else model_d.sym_triangulations_d(n)


def noncrossing(kind: str, n: int, o1, o2) -> bool:
    if kind == "A":
        return not model_a.crossing_a(o1, o2)
    return model_d.noncrossing_d(n, o1, o2)


# -- checks ----------------------------------------------------------------------


def check_counts(kind: str, n: int):
    md = build_model(kind, n)
    got = {
        "variables": len(md.variables),
        "clusters": len(md.graph.seeds),
        "triangulations": len(model_triangulations(kind, n)),
    }
    want = expected_counts(kind, n)
    ok = all(got[k] == v for k, v in want.items()) and got["clusters"] == got["triangulations"]
    return _status(ok), {"computed": got, "expected": want}


def check_clusters_are_triangulations(kind: str, n: int):
    """The clusters, read through the model bijection, are the triangulations."""
    md = build_model(kind, n)
    clusters = {frozenset(md.objects[v] for v in key) for key in md.graph.seeds}
    tri = set(model_triangulations(kind, n))
    return _status(clusters == tri), {"clusters": len(clusters), "triangulations": len(tri)}


def check_fpoly_qchar(kind: str, n: int):
    md = build_model(kind, n)
    bad = []
    for v in md.variables:
        lab = md.label_of(v)
        want = renormalize_and_tsub(trunc_qchar_prime(md.xi, lab), md.xi)
        if md.fpoly_in_t(v) != want:
            bad.append(str(lab))
    return _status(not bad), {"variables": len(md.variables), "mismatches": bad}


def compatibility_table(kind: str, n: int) -> list[tuple[Label, Label, bool, bool, bool]]:
    """``(p, q, simple, noncrossing, compatible)`` for every unordered pair."""
    md = build_model(kind, n)
    vs = md.variables
    rows = []
    for v, w in combinations_with_replacement(vs, 2):
        p, q = md.label_of(v), md.label_of(w)
        rows.append((
            p,
            q,
            simple_pair(md.xi, p, q).simple,
            noncrossing(kind, n, md.objects[v], md.objects[w]),
            compatible(v, w, md.graph),
        ))
    return rows


def check_compatibility(kind: str, n: int):
    rows = compatibility_table(kind, n)
    bad = [[str(p), str(q), s, x, c] for p, q, s, x, c in rows if not s == x == c]
    xi = height(kind, n)
    frozen = [lab for lab in prime_labels(xi) if lab not in {r[0] for r in rows} | {r[1] for r in rows}]
    frozen_bad = [
        [str(f), str(p)] for f in frozen for p in prime_labels(xi) if not simple_pair(xi, f, p).simple
    ]
    return _status(not bad and not frozen_bad), {
        "pairs": len(rows),
        "discrepancies": bad,
        "frozen_not_simple": frozen_bad,
    }


def check_positivity(kind: str, n: int):
    if n > POSITIVITY_MAX[kind]:
        return SKIPPED, {"reason": f"positivity is checked up to rank {POSITIVITY_MAX[kind]}"}
    graph = exchange_graph(model_seed(kind, n))
    bad = 0
    for seed in graph.seeds.values():
        rerooted = exchange_graph(initial_seed(seed.matrix))
        bad += sum(1 for v in rerooted.variables if min(v.terms.values()) <= 0)
    return _status(bad == 0), {"initial_clusters": len(graph.seeds), "nonpositive": bad}


def cluster_monomials(graph, degree: int = 2) -> dict[tuple, LaurentPoly]:
    """Cluster monomials of total degree at most ``degree``, keyed by their
    sorted variable multiset."""
    out = {}
    for key in graph.seeds:
        vs = sorted(key, key=LaurentPoly.canonical_string)
        for d in range(degree + 1):
            for combo in combinations_with_replacement(vs, d):
                names = tuple(v.canonical_string() for v in combo)
                if names not in out:
                    prod = LaurentPoly.const(1)
                    for v in combo:
                        prod = prod * v
                    out[names] = prod
    return out


def check_independence(kind: str, n: int):
    if n > POSITIVITY_MAX[kind]:
        return SKIPPED, {"reason": f"independence is checked up to rank {POSITIVITY_MAX[kind]}"}
    graph = exchange_graph(model_seed(kind, n))
    monos = cluster_monomials(graph)
    distinct = len(set(monos.values()))
    return _status(distinct == len(monos)), {"monomials": len(monos), "distinct": distinct}


def ident_instances(n: int):
    """Each quadruple ``i<j<=k<l`` with the labels of the identity
    ``(i,k)(j,l) = (i,l)(j,k) + (i,j-1)(k+1,l)``."""
    for i, j, k, l in product(range(n + 2), repeat=4):
        if i < j <= k < l <= n + 1:
            yield (i, j, k, l), (
                (Label(i, k), Label(j, l)),
                ((Label(i, l), Label(j, k)), (Label(i, j - 1), Label(k + 1, l))),
            )


def check_ident(kind: str, n: int):
    if kind != "A":
        return SKIPPED, {"reason": "type A only"}
    xi = height("A", n)

    def ch(lab):
        return trunc_qchar_prime(xi, lab)

    ptolemy = {quad: (lhs, rhs) for quad, lhs, rhs in model_a.ptolemy_relations(n)}
    bad, unmatched = [], []
    for (i, j, k, l), ((p, q), ((r, s), (u, w))) in ident_instances(n):
        if ch(p) * ch(q) != ch(r) * ch(s) + ch(u) * ch(w):
            bad.append([i, j, k, l])
        quad = (i, j, k + 1, l + 1)
        lhs, rhs = ptolemy[quad]
        seg = model_a.prime_to_segment_a
        terms = {frozenset(t) for t in rhs}
        if set(lhs) != {seg(p), seg(q)} or terms != {frozenset((seg(r), seg(s))), frozenset((seg(u), seg(w)))}:
            unmatched.append([i, j, k, l])
    total = sum(1 for _ in ident_instances(n))
    return _status(not bad and not unmatched and total == len(ptolemy)), {
        "instances": total,
        "ptolemy_relations": len(ptolemy),
        "failures": bad,
        "unmatched": unmatched,
    }


def window_monomials(xi, max_exp: int):
    coords = sorted(window(xi))
    for es in product(range(max_exp + 1), repeat=len(coords)):
        yield ymonomial(xi, [(c, e) for c, e in zip(coords, es) if e])


def check_factorization(kind: str, n: int):
    if kind != "A" or n > FACTORIZATION_MAX_A:
        return SKIPPED, {"reason": f"type A up to rank {FACTORIZATION_MAX_A}"}
    xi = height(kind, n)
    counts = Counter(len(all_factorizations(xi, m)) for m in window_monomials(xi, 2))
    real_bad = []
    for m in window_monomials(xi, 1):
        once = factorize_simple(xi, m)
        twice = factorize_simple(xi, tuple((v, 2 * e) for v, e in m))
        if twice != tuple(sorted(once + once)):
            real_bad.append(LaurentPoly.mono(m).canonical_string())
    ok = set(counts) == {1} and not real_bad
    return _status(ok), {
        "monomials": sum(counts.values()),
        "factorization_counts": {str(k): v for k, v in sorted(counts.items())},
        "not_real": real_bad,
    }


def tsystem_rows(n: int):
    """Per mutation step: composition factors of ``L(n+1,i) (x) L(i,0)`` and the
    two exchange monomials, both as label multisets."""
    xi = height("D", n)
    for i, _seed, (pos, neg) in model_d.seqmut_relations(n):
        labels = model_d.row_labels_after(n, i)

        def multiset(exps):
            return tuple(sorted(
                lab for r, e in exps.items() for lab in [labels[r - 1]] * e if not is_trivial(xi, lab)
            ))

        expected = {multiset(pos): 1, multiset(neg): 1}
        got = decompose_tensor(xi, label_monomial(xi, Label(n + 1, i)), label_monomial(xi, Label(i, 0)))
        yield i, got, expected


def check_tsystem(kind: str, n: int):
    if kind != "D":
        return SKIPPED, {"reason": "type D only"}
    steps = {}
    ok = True
    for i, got, expected in tsystem_rows(n):
        steps[str(i)] = [" ".join(map(str, k)) for k in got]
        ok &= got == expected
    return _status(ok), {"factors": steps}


def check_catalog(kind: str, n: int):
    """Every prime character renormalizes to a t-polynomial with constant 1
    and has its label as the only dominant monomial on non-dagger primes of type A."""
    xi = height(kind, n)
    bad = []
    for lab in prime_labels(xi):
        chi = trunc_qchar_prime(xi, lab)
        t = renormalize_and_tsub(chi, xi)
        if t.coefficient(()) != 1 or not t.is_polynomial():
            bad.append(str(lab))
        if kind == "A" and list(dominant_monomials(chi)) != [label_monomial(xi, lab)]:
            bad.append(str(lab))
    return _status(not bad), {"primes": len(prime_labels(xi)), "failures": bad}


def _d4_only(kind: str, n: int):
    return (kind, n) != ("D", tables.RANK)


def check_golden_labels(kind: str, n: int):
    if _d4_only(kind, n):
        return SKIPPED, {"reason": "D4 table"}
    rows = []
    ok = True
    for r in tables.orbit_labels():
        root = model_d.orbit_to_root(n, r.orbit)
        weight = model_d.orbit_to_weight(n, r.orbit)
        good = root == r.root and weight == (r.node, r.power)
        if r.power:
            beta = model_d.weight_to_root(n, r.node, r.power)
            good &= beta == r.root
        ok &= good
        rows.append({"orbit": r.name, "status": _status(good)})
    return _status(ok and len(rows) == n * n), {"rows": rows}


def check_golden_characters(kind: str, n: int):
    if _d4_only(kind, n):
        return SKIPPED, {"reason": "D4 table"}
    xi = height(kind, n)
    rows = []
    ok = True
    for r in tables.prime_characters():
        chi = trunc_qchar_prime(xi, r.label)
        good = (
            model_d.orbit_to_prime_d(n, r.orbit) == r.label
            and LaurentPoly.mono(label_monomial(xi, r.label)) == r.monomial
            and renormalize_and_tsub(chi, xi) == r.tpoly
        )
        ok &= good
        rows.append({"orbit": r.name, "label": str(r.label), "status": _status(good)})
    return _status(ok and len(rows) == n * n), {"rows": rows}


def golden_pair_rows(n: int = tables.RANK):
    """Per table row: names, verdict, expected case, status and an optional note.

    A row naming an orbit through a spelling absent from the character table
    is reported skipped.  Its note names the orbit the spelling denotes and the
    verdict under that reading; the pair still counts as listed.
    """
    xi = height("D", n)
    names = tables.catalog_names()
    catalog_name = {r.orbit: r.name for r in tables.prime_characters()}
    out = []
    for r in tables.compatible_pairs():
        labels = [model_d.orbit_to_prime_d(n, o) for o in r.orbits]
        verdict = simple_pair(xi, *labels)
        note = ""
        for name, o in zip(r.names, r.orbits):
            if name not in names:
                note = (
                    f"{name} is not a catalog name; as the mirror spelling of {catalog_name[o]} "
                    f"({model_d.orbit_to_prime_d(n, o)}) the verdict is {verdict.to_json()}"
                )
        good = verdict.simple and verdict.case == r.case
        status = SKIPPED if note else _status(good)
        out.append({
            "pair": list(r.names),
            "labels": [str(x) for x in labels],
            "case": r.case,
            "verdict": verdict.to_json(),
            "status": status,
            "note": note,
        })
    return out


def check_golden_pairs(kind: str, n: int):
    if _d4_only(kind, n):
        return SKIPPED, {"reason": "D4 table"}
    xi = height(kind, n)
    rows = golden_pair_rows(n)
    listed = {frozenset(r.orbits) for r in tables.compatible_pairs()}
    unlisted_simple = []
    for o1, o2 in combinations(model_d.orbits_d(n), 2):
        if frozenset((o1, o2)) in listed:
            continue
        p, q = model_d.orbit_to_prime_d(n, o1), model_d.orbit_to_prime_d(n, o2)
        if simple_pair(xi, p, q).simple:
            unlisted_simple.append([str(o1), str(o2)])
    ok = all(r["status"] != FAIL for r in rows) and not unlisted_simple
    return _status(ok), {"rows": rows, "unlisted_simple": unlisted_simple}


CHECKS = {
    "counts": check_counts,
    "clusters_are_triangulations": check_clusters_are_triangulations,
    "catalog": check_catalog,
    "fpoly_qchar": check_fpoly_qchar,
    "compatibility": check_compatibility,
    "ident_ptolemy": check_ident,
    "factorization": check_factorization,
    "tsystem": check_tsystem,
    "positivity": check_positivity,
    "independence": check_independence,
    "golden_labels": check_golden_labels,
    "golden_characters": check_golden_characters,
    "golden_pairs": check_golden_pairs,
}


def run_check(name: str, kind: str, n: int) -> Check:
    try:
        status, details = CHECKS[name](kind, n)
    except Exception as exc:  # a crash inside a check is a failed check
        status, details = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
    return Check(name, status, details)


def verify(kind: str, n: int, jobs: int = 1, only=None) -> VerificationReport:
    """Run the named checks (all by default); the report order is fixed."""
    kind = kind.upper()
    names = list(CHECKS) if only is None else [c for c in CHECKS if c in set(only)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(run_check, names, [kind] * len(names), [n] * len(names)))
    else:
        checks = [run_check(name, kind, n) for name in names]
    return VerificationReport(checks)
