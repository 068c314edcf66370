"""Command-line front end.

    nilpair catalog [--s V] [--export DIR]
    nilpair multiplier --algebra NAME|file:PATH [--debug-matrices]
    nilpair invariants --algebra NAME|file:PATH
    nilpair pair --n NAME --k NAME [--invariant s|t|dimM]
    nilpair classify --s SIGMA [--allow-trivial-k | --forbid-trivial-k]
    nilpair verify (--s SIGMA | --all)
    nilpair selfcheck [--max-dim D]

Every command takes ``--format table|json``, ``--eps`` and ``--params k=v``.
Exit status: 0 success, 1 unexplained verification mismatch, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra as alg
from .catalog import CatalogError, algebra_summary, entries, families_with_s, lookup, self_check
from .classifier import ClassificationError, classify
from .homology import d2_matrix, d3_matrix, multiplier_dim
from .invariants import SplitPair, pair_invariants
from .statements import verify

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


def _table(rows: list[dict], columns: list[str]) -> str:
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*columns).rstrip(), fmt.format(*("-" * w for w in widths))]
    out += [fmt.format(*row).rstrip() for row in cells]
    return "\n".join(out)


def _kv(d: dict) -> str:
    w = max(len(k) for k in d)
    return "\n".join(f"{k:<{w}}  {v}" for k, v in d.items())


def parse_params(items) -> dict:
    params = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"--params expects k=v, got {item!r}")
        params[key.strip()] = value.strip()
    return params


def resolve_algebra(spec: str, params: dict, eps) -> alg.LieAlgebra:
    if spec.startswith("file:"):
        return alg.load(spec[5:])
    return lookup(spec, params, eps)


# --------------------------------------------------------------------------
# commands


_SUMMARY_COLUMNS = ["name", "dim", "dim_L2", "dim_Z", "dim_M", "s", "t"]


def cmd_catalog(args, params) -> tuple[str, int]:
    if args.s is not None:
        fams = families_with_s(args.s, amended=args.amended)
        if args.format == "json":
            return _dumps({"s": args.s, "families": [f.name for f in fams]}), EXIT_OK
        return "\n".join(f.name for f in fams), EXIT_OK
    rows = []
    for entry in entries():
        L = lookup(entry.name, params, args.eps)
        rows.append(algebra_summary(L))
        if args.export:
            out = Path(args.export)
            out.mkdir(parents=True, exist_ok=True)
            safe = "".join(ch if ch.isalnum() else "_" for ch in entry.name).strip("_")
            alg.dump(L, out / f"{safe}.json")
    if args.format == "json":
        return _dumps(rows), EXIT_OK
    return _table(rows, _SUMMARY_COLUMNS), EXIT_OK


def cmd_multiplier(args, params) -> tuple[str, int]:
    L = resolve_algebra(args.algebra, params, args.eps)
    value = multiplier_dim(L)
    if args.format == "json":
        out = {"algebra": L.label, "dim": L.dim, "dim_M": value}
        if args.debug_matrices:
            out["d2"] = d2_matrix(L).to_json()
            out["d3"] = d3_matrix(L).to_json()
        return _dumps(out), EXIT_OK
    text = str(value)
    if args.debug_matrices:
        text += "\n" + _dumps({"d2": d2_matrix(L).to_json(), "d3": d3_matrix(L).to_json()})
    return text, EXIT_OK


def cmd_invariants(args, params) -> tuple[str, int]:
    L = resolve_algebra(args.algebra, params, args.eps)
    summary = algebra_summary(L)
    if args.format == "json":
        return _dumps(summary), EXIT_OK
    return _kv(summary), EXIT_OK


def cmd_pair(args, params) -> tuple[str, int]:
    p = SplitPair(resolve_algebra(args.n, params, args.eps),
                  resolve_algebra(args.k, params, args.eps))
    inv = pair_invariants(p)
    values = {"dimM": inv.dimM, "s": inv.s, "t": inv.t}
    if args.invariant:
        value = values[args.invariant]
        if args.format == "json":
            return _dumps({args.invariant: value}), EXIT_OK
        return str(value), EXIT_OK
    record = {"N": p.N.label, "L": p.L.label, "n": p.n, "m": p.m, "d": p.d, "c": p.c, **values}
    if args.format == "json":
        return _dumps(record), EXIT_OK
    return _kv(record), EXIT_OK


def cmd_classify(args, params) -> tuple[str, int]:
    report = classify(args.s, allow_trivial_K=args.allow_trivial_k)
    if args.format == "json":
        return report.dumps(), EXIT_OK
    return "\n".join(report.lines()), EXIT_OK


def cmd_verify(args, params) -> tuple[str, int]:
    sigmas = list(range(8)) if args.all else [args.s]
    results = [verify(s) for s in sigmas]
    status = EXIT_OK if all(v.ok for v in results) else EXIT_MISMATCH
    if args.format == "json":
        return _dumps([v.to_json() for v in results]), status
    lines = []
    for v in results:
        lines.append(f"s = {v.sigma}: {'ok' if v.ok else 'MISMATCH'} "
                     f"({len(v.matched)} matched, {len(v.annotated)} annotated, "
                     f"{len(v.unexplained)} unexplained)")
        for d in v.diff:
            tag = f"erratum [{d.erratum.kind}]" if d.erratum else "UNEXPLAINED"
            lines.append(f"  {d.side:<14} {d.label}  {tag}")
        for e in v.stale_errata:
            lines.append(f"  stale erratum: {e.side} {e.N} K={e.K}")
    return "\n".join(lines), status


def cmd_selfcheck(args, params) -> tuple[str, int]:
    rep = self_check(args.max_dim)
    status = EXIT_OK if rep.ok else EXIT_MISMATCH
    if args.format == "json":
        return _dumps({
            "ok": rep.ok,
            "checked": len(rep.checked),
            "mismatches": [f"{e.instance}: listed {e.expected}, computed {e.computed}"
                           for e in rep.mismatches],
            "eps_variation": rep.eps_variation,
            "omissions": [{"instance": e.instance, "s": e.computed, "note": e.note}
                          for e in rep.omissions],
            "printed_rows": [{"instance": e.instance, "s": e.computed, "expected": e.expected,
                              "note": e.note} for e in rep.printed_rows],
        }), status
    lines = [f"checked {len(rep.checked)} instances, {len(rep.mismatches)} mismatches"]
    lines += [f"  mismatch: {e.instance} listed {e.expected}, computed {e.computed}"
              for e in rep.mismatches]
    lines += [f"  s varies with eps: {name}" for name in rep.eps_variation]
    for e in rep.omissions:
        lines.append(f"  unlisted: {e.instance} has s = {e.computed}"
                     + (f" ({e.note})" if e.note else " (no note)"))
    for e in rep.printed_rows:
        lines.append(f"  printed row: {e.instance} has s = {e.computed}, listed {e.expected}")
    return "\n".join(lines), status


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--eps", default=None, help="value of ε for the one-parameter families")
    common.add_argument("--params", nargs="+", action="extend", default=[], metavar="K=V")

    parser = _Parser(prog="nilpair", description="Schur multipliers and s-invariants of nilpotent Lie algebras and pairs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", parents=[common], help="list catalog algebras and their invariants")
    p.add_argument("--s", type=int, default=None, help="list the families with this s-value")
    p.add_argument("--amended", action="store_true", help="include the computed omissions in --s")
    p.add_argument("--export", metavar="DIR", help="write each algebra as JSON into DIR")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("multiplier", parents=[common], help="dim M(L)")
    p.add_argument("--algebra", required=True)
    p.add_argument("--debug-matrices", action="store_true", help="also dump the boundary maps")
    p.set_defaults(func=cmd_multiplier)

    p = sub.add_parser("invariants", parents=[common], help="dim L^2, dim Z, dim M, s, t")
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("pair", parents=[common], help="invariants of the split pair (N, N ⊕ K)")
    p.add_argument("--n", required=True, dest="n")
    p.add_argument("--k", required=True, dest="k")
    p.add_argument("--invariant", choices=("s", "t", "dimM"))
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("classify", parents=[common], help="all pairs with s(N, L) = SIGMA")
    p.add_argument("--s", type=int, required=True)
    trivial = p.add_mutually_exclusive_group()
    trivial.add_argument("--allow-trivial-k", dest="allow_trivial_k", action="store_const", const=True)
    trivial.add_argument("--forbid-trivial-k", dest="allow_trivial_k", action="store_const", const=False)
    p.set_defaults(func=cmd_classify, allow_trivial_k=None)

    p = sub.add_parser("verify", parents=[common], help="diff classify against the reference lists")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--s", type=int)
    which.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selfcheck", parents=[common], help="recompute every listed s-value")
    p.add_argument("--max-dim", type=int, default=12)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        params = parse_params(args.params)
        text, status = args.func(args, params)
    except (InputError, alg.AlgebraError, CatalogError, ClassificationError, ValueError) as exc:
        msg = " ".join(str(exc).split())
        stderr.write(f"nilpair: error: {msg}\n")
        return EXIT_INPUT
    stdout.write(text.rstrip("\n") + "\n")
    return status


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
