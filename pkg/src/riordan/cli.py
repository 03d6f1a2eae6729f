"""Batch command-line interface.

Exit codes: 0 ok, 1 a theorem-tagged check failed, 2 usage or parse error,
3 hypothesis not met, 4 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from . import bounds as bnd
from . import exact as ex
from . import graph as gr
from . import spectra as spc
from . import verify as vf
from .corpus import DEFAULT_SEED
from .errors import RiordanError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_FATAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _graph_args(p: argparse.ArgumentParser):
    p.add_argument("--g", dest="g_expr", help="generating function g")
    p.add_argument("--f", dest="f_expr", help="generating function f")
    p.add_argument("--family", choices=sorted(gr.FAMILIES), help="named family instead of --g/--f")
    p.add_argument("--n", type=_int, help="order of the graph")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--output", help="write data here instead of stdout")
    p.add_argument("--config", help="JSON file whose keys mirror the long flags")


def _corpus_args(p: argparse.ArgumentParser, random_default: int):
    p.add_argument("--nmax", type=_int, default=64)
    p.add_argument("--seed", type=_int, default=DEFAULT_SEED)
    p.add_argument("--random-count", type=_int, default=random_default)
    p.add_argument("--jobs", type=_int, default=1)
    p.add_argument("--checkpoint", help="append-only JSON-lines checkpoint")
    p.add_argument("--findings", help="findings JSON-lines file (alias of --output)")
    p.add_argument("--summary", help="write per-claim counts as JSON here")
    p.add_argument("--timestamps", action="store_true", help="stamp findings with the UTC run time")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="riordan", description="Spectral analysis of Riordan graphs over GF(2).")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a graph and export it")
    _graph_args(p)
    _common(p)
    p.add_argument("--format", choices=("json", "dot", "csv", "text"), default="text")

    p = sub.add_parser("report", help="exact and floating-point summary as JSON")
    _graph_args(p)
    _common(p)

    p = sub.add_parser("bounds", help="evaluate every applicable eigenvalue bound")
    _graph_args(p)
    _common(p)

    p = sub.add_parser("verify", help="run a theorem suite over the standard corpus")
    p.add_argument("--suite", choices=(*vf.SUITES, "all"), default="all")
    _corpus_args(p, 200)
    _common(p)

    p = sub.add_parser("scan", help="run a conjecture scanner")
    p.add_argument("--conjecture", choices=vf.SCANS, required=True)
    _corpus_args(p, 50)
    _common(p)
    return ap


def _apply_config(ap: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = ap.parse_args(argv)
    if not args.config:
        return args
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read config {args.config}: {e}")
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    # config values act as defaults; explicit flags win
    fresh = ap.parse_args(argv)
    defaults = vars(ap.parse_args([args.command] + (["--conjecture", args.conjecture]
                                                     if args.command == "scan" else [])))
    aliases = {"g": "g_expr", "f": "f_expr"}
    for key, value in cfg.items():
        dest = aliases.get(key, key.replace("-", "_"))
        if dest in ("command", "config"):
            continue
        if dest not in defaults:
            raise UsageError(f"unknown config key {key!r}")
        if getattr(fresh, dest) == defaults[dest]:
            setattr(args, dest, value)
    return args


def _graph(args) -> gr.RiordanGraph:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    has_pair = args.g_expr is not None or args.f_expr is not None
    if has_pair == (args.family is not None):
        raise UsageError("give either --family or both --g and --f")
    if args.family is not None:
        return gr.family(args.family, args.n)
    if args.g_expr is None or args.f_expr is None:
        raise UsageError("both --g and --f are required")
    return gr.from_expressions(args.g_expr, args.f_expr, args.n)


def _emit(args, text: str):
    path = getattr(args, "output", None) or getattr(args, "findings", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _descriptor(G: gr.RiordanGraph) -> dict:
    return {"g_expr": G.g_expr, "f_expr": G.f_expr, "n": G.n, "family": G.family}


def cmd_build(args) -> int:
    G = _graph(args)
    if args.format == "text":
        _emit(args, gr.to_text(G))
    elif args.format == "dot":
        _emit(args, gr.to_dot(G, G.family or "G"))
    elif args.format == "csv":
        _emit(args, gr.to_csv(G))
    else:
        _emit(args, _dump({"graph": _descriptor(G), "edges": G.m,
                           "adjacency": [[int(x) for x in row] for row in G.adj]}))
    return EXIT_OK


def cmd_report(args) -> int:
    G = _graph(args)
    sp = spc.graph_spectra(G)
    doc = {
        "graph": _descriptor(G),
        "edges": G.m,
        "exact": ex.graph_summary(G).to_json(),
        "spectra": {
            "adjacency": sp.adjacency.to_json(),
            "laplacian": sp.laplacian.to_json(),
            "signless_laplacian": sp.signless.to_json(),
        },
        "classification": sorted(gr.classify(G)),
        "degrees": [int(d) for d in G.degrees()],
        "universal_vertices": gr.universal_vertices(G),
    }
    _emit(args, _dump(doc))
    return EXIT_OK


def cmd_bounds(args) -> int:
    G = _graph(args)
    reports = bnd.all_bounds(G, with_chromatic=G.n <= 32)
    _emit(args, _dump({"graph": _descriptor(G), "bounds": [r.to_json() for r in reports]}))
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


def _progress(label: str):
    def tick(i: int, total: int):
        if i == total or i % 25 == 0:
            print(f"{label}: {i}/{total}", file=sys.stderr, flush=True)
    return tick


def _finish(args, findings: list[vf.Finding]) -> int:
    _emit(args, vf.dumps_findings(findings))
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(_dump(vf.summarize(findings)))
    failed = vf.theorem_failures(findings)
    for f in failed:
        print(f"FAIL {f.claim_id} {json.dumps(f.graph)}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def _check_corpus_args(args):
    if args.nmax < 1:
        raise UsageError("--nmax must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.random_count < 0:
        raise UsageError("--random-count must be non-negative")


def cmd_verify(args) -> int:
    _check_corpus_args(args)
    findings = vf.run_suite(args.suite, args.nmax, args.seed, args.random_count, jobs=args.jobs,
                            checkpoint=args.checkpoint, timestamps=args.timestamps,
                            progress=_progress(f"verify {args.suite}"))
    return _finish(args, findings)


def cmd_scan(args) -> int:
    _check_corpus_args(args)
    findings = vf.run_scan(args.conjecture, args.nmax, args.seed, args.random_count, jobs=args.jobs,
                           checkpoint=args.checkpoint, timestamps=args.timestamps,
                           progress=_progress(f"scan {args.conjecture}"))
    return _finish(args, findings)


COMMANDS = {"build": cmd_build, "report": cmd_report, "bounds": cmd_bounds, "verify": cmd_verify,
            "scan": cmd_scan}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = _apply_config(ap, argv)
        return COMMANDS[args.command](args)
    except SystemExit as e:  # argparse
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    except UsageError as e:
        print(f"riordan: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RiordanError as e:
        print(f"riordan: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"riordan: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
