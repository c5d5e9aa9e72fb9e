"""Command-line entry point: ``python3 -m qcluster <command> ...``.

Output is JSON on stdout unless ``--format table`` is given.  Exit status is
2 for usage errors and 1 when ``verify`` finds a failing check.
"""
from __future__ import annotations

import argparse
import json
import sys

from .cluster import Seed, exchange_graph, mutate_sequence
from .correspondence import build_model
from .laurent import LaurentError, LaurentPoly, ParseError, parse
from .qchar import (
    InvalidLabel,
    Label,
    height,
    label_monomial,
    renormalize_and_tsub,
    trunc_qchar_prime,
)
from .simplicity import NoFactorization, NonUniqueFactorization, decompose_tensor, factorize_simple, simple_pair
from .verify import CHECKS, verify


class UsageError(Exception):
    pass


def _kind(text: str) -> str:
    kind = text.upper()
    if kind not in ("A", "D"):
        raise argparse.ArgumentTypeError("type must be A or D")
    return kind


def _check_rank(kind: str, n: int):
    if n < (1 if kind == "A" else 4):
        raise UsageError(f"rank {n} is too small for type {kind}")


def _label(text: str) -> Label:
    try:
        return Label.parse(text)
    except InvalidLabel as exc:
        raise UsageError(str(exc)) from None


def _monomial(xi, text: str):
    """A Y-monomial written out, or a prime label standing for its monomial."""
    if text.strip().startswith("L("):
        return label_monomial(xi, _label(text))
    p = parse(text)
    if not p.is_monomial() or p.coefficient(next(iter(p.terms))) != 1:
        raise UsageError(f"{text!r} is not a monomial")
    return next(iter(p.terms))


def _labels(labs) -> list[str]:
    return [str(lab) for lab in labs]


# -- commands ---------------------------------------------------------------------


def cmd_mutate(args):
    with (sys.stdin if args.seed == "-" else open(args.seed, encoding="utf-8")) as fh:
        seed = Seed.from_json(fh.read())
    for k in args.directions:
        if not 1 <= k <= seed.rank:
            raise UsageError(f"direction {k} outside 1..{seed.rank}")
    return mutate_sequence(seed, args.directions).to_json()


def cmd_explore(args):
    if args.seed:
        with (sys.stdin if args.seed == "-" else open(args.seed, encoding="utf-8")) as fh:
            graph = exchange_graph(Seed.from_json(fh.read()), max_seeds=args.max_seeds)
        out = {"variables": len(graph.variables), "clusters": len(graph.seeds), "complete": graph.complete}
        if args.list:
            out["cluster_list"] = sorted(sorted(v.canonical_string() for v in key) for key in graph.seeds)
        return out
    if not args.type or not args.rank:
        raise UsageError("explore needs --seed or both --type and --rank")
    _check_rank(args.type, args.rank)
    md = build_model(args.type, args.rank)
    out = {"variables": len(md.variables), "clusters": len(md.graph.seeds), "complete": md.graph.complete}
    if args.list:
        out["cluster_list"] = sorted(sorted(_labels(c)) for c in md.clusters())
    return out


def cmd_fpoly(args):
    _check_rank(args.type, args.rank)
    md = build_model(args.type, args.rank)
    rows = []
    for v in sorted(md.variables, key=md.label_of):
        rows.append({
            "label": str(md.label_of(v)),
            "object": str(md.objects[v]),
            "fpoly": md.fpoly(v).canonical_string(),
            "t": md.fpoly_in_t(v).canonical_string(),
        })
    return rows


def cmd_qchar(args):
    _check_rank(args.type, args.rank)
    xi = height(args.type, args.rank)
    lab = _label(args.label)
    chi = trunc_qchar_prime(xi, lab)
    return {
        "label": str(lab),
        "monomial": LaurentPoly.mono(label_monomial(xi, lab)).canonical_string(),
        "character": chi.canonical_string(),
        "renormalized": renormalize_and_tsub(chi, xi).canonical_string(),
    }


def cmd_compat(args):
    _check_rank(args.type, args.rank)
    xi = height(args.type, args.rank)
    p, q = _label(args.label1), _label(args.label2)
    for lab in (p, q):
        label_monomial(xi, lab)  # validates against the type
    return simple_pair(xi, p, q).to_json()


def cmd_factorize(args):
    _check_rank(args.type, args.rank)
    xi = height(args.type, args.rank)
    m = _monomial(xi, args.monomial)
    return {"factors": _labels(factorize_simple(xi, m, check_unique=args.check_unique))}


def cmd_tensor(args):
    _check_rank(args.type, args.rank)
    xi = height(args.type, args.rank)
    got = decompose_tensor(xi, _monomial(xi, args.m1), _monomial(xi, args.m2))
    return {"factors": {" ".join(_labels(k)): v for k, v in got.items()}}


def cmd_verify(args):
    _check_rank(args.type, args.rank)
    return verify(args.type, args.rank, jobs=args.jobs, only=args.check)


# -- output -----------------------------------------------------------------------


def _table(obj) -> str:
    if hasattr(obj, "to_table"):
        return obj.to_table()
    if isinstance(obj, list) and obj and isinstance(obj[0], dict):
        keys = list(obj[0])
        widths = {k: max(len(k), *(len(str(r[k])) for r in obj)) for k in keys}
        lines = ["  ".join(k.ljust(widths[k]) for k in keys)]
        lines += ["  ".join(str(r[k]).ljust(widths[k]) for k in keys) for r in obj]
        return "\n".join(lines)
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {v}" for k, v in obj.items())
    return str(obj)


def _json(obj) -> str:
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, indent=2)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcluster", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "table"), default="json")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def typed(p, rank_required=True):
        p.add_argument("--type", type=_kind, required=rank_required)
        p.add_argument("--rank", type=int, required=rank_required)

    p = sub.add_parser("mutate", parents=[common], help="mutate a JSON seed along a direction sequence")
    p.add_argument("--seed", required=True, help="seed JSON file, or - for stdin")
    p.add_argument("directions", type=int, nargs="*")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("explore", parents=[common], help="exchange graph counts and clusters")
    typed(p, rank_required=False)
    p.add_argument("--seed", help="seed JSON file instead of a model seed")
    p.add_argument("--max-seeds", type=int, default=100_000)
    p.add_argument("--list", action="store_true", help="include every cluster")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("fpoly", parents=[common], help="F-polynomials of all cluster variables")
    typed(p)
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("qchar", parents=[common], help="truncated q-character of a prime")
    typed(p)
    p.add_argument("--label", required=True, help="e.g. L(0,2)+")
    p.set_defaults(func=cmd_qchar)

    p = sub.add_parser("compat", parents=[common], help="is the tensor product of two primes simple")
    typed(p)
    p.add_argument("label1")
    p.add_argument("label2")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("factorize", parents=[common], help="prime factorization of a dominant monomial")
    typed(p)
    p.add_argument("monomial", help="e.g. 'Y[1,1]*Y[2,2]*Y[2,4]' or a label")
    p.add_argument("--check-unique", action="store_true")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("tensor", parents=[common], help="composition factors of L(m1) (x) L(m2)")
    typed(p)
    p.add_argument("m1")
    p.add_argument("m2")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("verify", parents=[common], help="run the consistency checks")
    typed(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--check", action="append", choices=list(CHECKS), help="run only these checks")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except NonUniqueFactorization as exc:
        print(f"qcluster {args.command}: {exc}", file=sys.stderr)
        return 1
    except (UsageError, InvalidLabel, ParseError, NoFactorization, LaurentError, OSError, ValueError) as exc:
        print(f"qcluster {args.command}: {exc}", file=sys.stderr)
        return 2
    print(_table(result) if args.format == "table" else _json(result))
    return getattr(result, "exit_code", 0)


def main():
    sys.exit(run())
