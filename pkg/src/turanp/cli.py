"""Command-line interface.

Subcommands: construct, ep, free, formula, rewrite, oracle, verify,
lemmas.  Results go to stdout (JSON by default, CSV or graph6 via --out);
diagnostics go to stderr.  Exit codes: 0 success, 1 domain error or
failed verification, 2 usage error.  Outputs are byte-stable for fixed
inputs; search statistics sit under a "meta" key.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import families, formulas, oracle, patterns, rewrites, verify
from .graphs import Graph, GraphCapError, Graph6Error, ep_value, g6_decode, g6_encode


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _emit_csv(rows: list[dict]) -> None:
    if not rows:
        return
    fields = list(rows[0].keys())
    writer = csv.DictWriter(sys.stdout, fieldnames=fields)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def _read_graphs(args) -> list[tuple[str, Graph]]:
    """Graphs from --family and/or graph6 lines on stdin (--in -)."""
    out: list[tuple[str, Graph]] = []
    if getattr(args, "family", None):
        g = families.build_family(args.family)
        out.append((g6_encode(g), g))
    if getattr(args, "inp", None) == "-":
        for line in sys.stdin:
            line = line.strip()
            if line:
                out.append((line, g6_decode(line)))
    if not out:
        raise ValueError("no input graph: pass --family or --in -")
    return out


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split("+")]
    except ValueError as exc:
        raise ValueError(f"bad {what} list {text!r} (use e.g. 5+3)") from exc


def _parse_range(text: str, what: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"bad {what} range {text!r} (use a:b)")
    return range(int(lo), int(hi) + 1)


# ---------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------

def cmd_construct(args) -> int:
    g = families.build_family(args.family)
    if args.out == "g6":
        sys.stdout.write(g6_encode(g) + "\n")
        return 0
    row = {
        "family": args.family,
        "n": g.n,
        "edges": g.edge_count(),
        "g6": g6_encode(g),
        "degrees": list(sorted(g.degrees(), reverse=True)),
    }
    if args.out == "csv":
        row["degrees"] = "+".join(map(str, row["degrees"]))
        _emit_csv([row])
    else:
        _emit_json(row)
    return 0


def cmd_ep(args) -> int:
    rows = [{"g6": g6, "p": args.p, "ep": str(ep_value(g, args.p))}
            for g6, g in _read_graphs(args)]
    if args.out == "csv":
        _emit_csv(rows)
    else:
        for row in rows:
            _emit_json(row)
    return 0


def cmd_free(args) -> int:
    pattern = patterns.parse_pattern(args.pattern)
    rows = []
    for g6, g in _read_graphs(args):
        res = patterns.is_free(g, pattern, args.budget)
        rows.append({"g6": g6, "pattern": pattern.text(),
                     "free": "unknown" if res is patterns.UNKNOWN else res})
    if args.out == "csv":
        _emit_csv(rows)
    else:
        for row in rows:
            _emit_json(row)
    return 0


_FORMULAS: dict[str, tuple[tuple[str, ...], object]] = {
    "ex_path": (("n", "ell"), lambda a: formulas.ex_path(a.n, a.ell)),
    "eg_bound": (("n", "ell"), None),
    "ex_linear_forest": (("n", "lengths"),
                         lambda a: formulas.ex_linear_forest(a.n, a.lengths)),
    "ex_kP3": (("n", "k"), lambda a: formulas.ex_kP3(a.n, a.k)),
    "ex_star_forest": (("n", "degrees"),
                       lambda a: formulas.ex_star_forest(a.n, a.degrees)),
    "ex_broom4": (("n", "s"), lambda a: formulas.ex_broom4(a.n, a.s)),
    "ex_broom5": (("n", "s"), lambda a: formulas.ex_broom5_partial(a.n, a.s)),
    "exp_path": (("n", "ell", "p"), lambda a: formulas.exp_path(a.n, a.ell, a.p)),
    "exp_star": (("n", "r", "p"), lambda a: formulas.exp_star(a.n, a.r, a.p)),
    "exp_star_forest": (("n", "degrees", "p"),
                        lambda a: formulas.exp_star_forest(a.n, a.degrees, a.p)),
    "exp_linear_forest": (("n", "lengths", "p"),
                          lambda a: formulas.exp_linear_forest(a.n, a.lengths, a.p)),
    "exp_kP3": (("n", "k", "p"), lambda a: formulas.exp_kP3(a.n, a.k, a.p)),
    "exp_broom": (("n", "ell", "s", "p"),
                  lambda a: formulas.exp_broom(a.n, a.ell, a.s, a.p)),
    "exp_turan_clique": (("n", "r", "p"),
                         lambda a: formulas.exp_turan_clique(a.n, a.r, a.p)),
}


def cmd_formula(args) -> int:
    if args.name not in _FORMULAS:
        print(f"error: unknown formula {args.name!r}; known: "
              f"{', '.join(sorted(_FORMULAS))}", file=sys.stderr)
        return 2
    wanted, fn = _FORMULAS[args.name]
    missing = [f"--{w}" for w in wanted if getattr(args, w, None) is None]
    if missing:
        print(f"error: formula {args.name} needs {' '.join(missing)}",
              file=sys.stderr)
        return 2
    if args.name == "eg_bound":
        value = formulas.eg_bound(args.n, args.ell)
        obj = {"value": str(value), "in_window": True,
               "window": "upper bound, all n", "source": "erdos-gallai-1959"}
        _emit_json(obj)
        return 0
    res = fn(args)
    if isinstance(res, formulas.UnspecifiedBase) and args.resolve_base:
        if res.base_n <= oracle.ORACLE_CAP:
            base = oracle.ex_classical(res.base_n,
                                       patterns.BroomPattern(5, res.s))
            obj = res.to_json()
            obj["meta"]["base_value"] = str(base.edges)
            obj["value"] = str(res.total_given(base.edges))
            _emit_json(obj)
            return 0
        print(f"error: base instance n={res.base_n} exceeds oracle cap "
              f"{oracle.ORACLE_CAP}", file=sys.stderr)
        return 1
    _emit_json(res.to_json())
    return 0


def cmd_rewrite(args) -> int:
    if not args.demo:
        print("error: only --demo mode is available", file=sys.stderr)
        return 2
    kind = args.kind.replace("-", "_")
    rng = random.Random(args.seed)
    g, v, site = rewrites.demo_instance(kind, args.ell, args.s, rng)
    g2 = rewrites.apply_rewrite(g, v, site, args.ell, args.s)
    pvals = [args.p] if args.p else [2, 3, 4]
    obj = {
        "kind": kind,
        "ell": args.ell,
        "s": args.s,
        "v": v,
        "site": site.to_json(),
        "host": g6_encode(g),
        "result": g6_encode(g2),
        "ep": {str(p): [str(ep_value(g, p)), str(ep_value(g2, p))] for p in pvals},
    }
    _emit_json(obj)
    return 0


def cmd_oracle(args) -> int:
    pattern = patterns.parse_pattern(args.pattern)
    threads = args.threads
    prune = not args.no_prune
    if args.n_range or args.p_range:
        if not (args.n_range and args.p_range):
            print("error: give both --n-range and --p-range", file=sys.stderr)
            return 2
        rows = oracle.verify_range(pattern,
                                   _parse_range(args.n_range, "n"),
                                   _parse_range(args.p_range, "p"),
                                   threads=threads, prune=prune,
                                   override_cap=args.override_cap)
        if args.out == "csv":
            _emit_csv(rows)
        else:
            for row in rows:
                _emit_json(row)
        return 0
    if args.n is None or args.p is None:
        print("error: give --n and --p (or --n-range/--p-range)", file=sys.stderr)
        return 2
    rep = oracle.max_ep(args.n, pattern, args.p, threads=threads, prune=prune,
                        override_cap=args.override_cap)
    _emit_json(rep.to_json())
    return 0


def cmd_verify(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = verify.parse_config(fh.read())
    else:
        cfg = dict(verify.DEFAULT_CONFIG)
    only = args.only.split(",") if args.only else None
    results = verify.run_suite(cfg, only)
    rows = [r.to_json() for r in results]
    if args.out == "csv":
        _emit_csv(rows)
    else:
        for row in rows:
            _emit_json(row)
    return 0 if all(r.passed for r in results) else 1


def cmd_lemmas(args) -> int:
    cfg = dict(verify.DEFAULT_CONFIG)
    cfg["lemmas.span"] = args.span
    result = verify.check_lemmas(cfg)
    _emit_json(result.to_json())
    return 0 if result.passed else 1


# ---------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turanp",
        description="Degree-power Turan numbers for forbidden forests: "
                    "constructions, closed forms, detectors, rewrites, and "
                    "an exhaustive small-n oracle.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_common(p):
        p.add_argument("--out", choices=("json", "csv", "g6"), default="json")

    p = sub.add_parser("construct", help="build a named family, emit graph6")
    p.add_argument("--family", required=True)
    p.add_argument("--out", choices=("json", "csv", "g6"), default="g6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("ep", help="degree-power sum of graphs")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--family")
    p.add_argument("--in", dest="inp", metavar="-",
                   help="read graph6 lines from stdin")
    add_common(p)
    p.set_defaults(func=cmd_ep)

    p = sub.add_parser("free", help="decide forbidden-forest freeness")
    p.add_argument("--pattern", required=True)
    p.add_argument("--family")
    p.add_argument("--in", dest="inp", metavar="-")
    p.add_argument("--budget", type=int, default=None,
                   help="step budget; exhausted -> 'unknown'")
    add_common(p)
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--lengths", type=lambda t: _parse_int_list(t, "lengths"))
    p.add_argument("--degrees", type=lambda t: _parse_int_list(t, "degrees"))
    p.add_argument("--resolve-base", action="store_true",
                   help="resolve the B_{5,s} reduction base via the oracle")
    add_common(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("rewrite", help="demonstrate a pendent-structure rewrite")
    p.add_argument("--kind", required=True,
                   choices=("edge", "triangle", "diamond", "spindle",
                            "spindle-plus", "spindle_plus"))
    p.add_argument("--ell", type=int, default=7)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--p", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--demo", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("oracle", help="exhaustive max e_p over pattern-free graphs")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--n-range", dest="n_range")
    p.add_argument("--p-range", dest="p_range")
    p.add_argument("--threads", type=int, default=None,
                   help="worker count (default: TURANP_THREADS or 1)")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--override-cap", action="store_true",
                   help=f"allow n = {oracle.ORACLE_HARD_CAP}")
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--only", help="comma-separated subset of checks")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemmas", help="superadditivity and absorption grids")
    p.add_argument("--span", type=int, default=12)
    add_common(p)
    p.set_defaults(func=cmd_lemmas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (GraphCapError, Graph6Error, verify.ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
