"""Command-line front end.

Exit codes follow the verdict: 0 for a definitive Holds (or plain
success), 1 for a definitive Fails, 2 for unknown-up-to-bound, 3 for
input errors of any kind. JSON output is key-sorted and, apart from the
elapsed_ms field, byte-stable for identical inputs and seeds.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from .alignment import is_exhaustive, lambda_min, mce
from .degrees import Degree, iter_degrees_upto, parse_degree
from .errors import KGraphError
from .generate import generate_kgraph
from .morphism import enumerate_paths, from_str, to_str
from .periodicity import (
    SearchConfig,
    aperiodicity_check,
    condition_b_check,
    local_periodicity_at,
    nlp_check,
)
from .reduction import gamma_construct
from .skeleton import KGraph, dumps, load
from .structure import cofinality_check, simplicity_verdict
from .verdicts import Verdict


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors, which collides with the
    unknown-verdict code; route usage errors to 3 instead."""

    def error(self, message):
        self.exit(3, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="kgraphs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, graph_arg=True):
        p = sub.add_parser(name, help=help_text)
        if graph_arg:
            p.add_argument("file", help="path to a .kg skeleton file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    cmd("validate", "parse a skeleton and check the square axioms")

    p = cmd("paths", "enumerate paths from a vertex up to a degree bound")
    p.add_argument("vertex")
    p.add_argument("--bound", default="2")

    p = cmd("mce", "minimal common extensions of two paths")
    p.add_argument("lam", help="first path, in range:edge.edge form")
    p.add_argument("mu", help="second path")

    p = cmd("exhaustive", "test a path family for exhaustiveness at a vertex")
    p.add_argument("vertex")
    p.add_argument("paths", nargs="+", help="family members, range:edge.edge form")

    p = cmd("periodicity", "local periodicity at one vertex and pair, or the graph-wide scan")
    p.add_argument("vertex", nargs="?")
    p.add_argument("m", nargs="?")
    p.add_argument("n", nargs="?")
    p.add_argument("--bound", default=None, help="degree bound for the graph-wide scan")
    p.add_argument("--depth", default=None)

    p = cmd("aperiodicity", "aperiodicity condition at a vertex")
    p.add_argument("vertex")
    p.add_argument("--depth", default=None)
    p.add_argument("--window", default=None)

    p = cmd("conditionb", "separation condition at a vertex")
    p.add_argument("vertex")
    p.add_argument("--depth", default=None)
    p.add_argument("--bound", default=None)

    p = cmd("gamma", "source-removal reduction")
    p.add_argument("--start", default=None)

    p = cmd("cofinal", "cofinality of the whole graph")
    p.add_argument("--depth", default=None)

    p = cmd("simplicity", "the combined simplicity criterion")
    p.add_argument("--bound", default=None)
    p.add_argument("--depth", default=None)

    p = cmd("generate", "emit a random valid skeleton", graph_arg=False)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-parallel", type=int, default=3)

    return parser


def _degree_arg(text: str, rank: int) -> Degree:
    t = text.strip()
    if "," not in t and "(" not in t:
        return Degree((int(t),) * rank)  # a bare integer broadcasts
    d = parse_degree(t)
    if d.rank != rank:
        raise KGraphError(f"degree {t!r} has rank {d.rank}, graph has rank {rank}")
    return d


def _opt_degree(text, rank: int):
    return None if text is None else _degree_arg(text, rank)


def _graph_summary(g: KGraph) -> dict:
    return {
        "rank": g.rank,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "squares": len(g.squares),
    }


def _report(args, command, graph_summary, verdicts, certificates, bounds, started) -> str:
    elapsed = int((time.monotonic() - started) * 1000)
    if args.format == "json":
        payload = {
            "command": command,
            "graph": graph_summary,
            "verdicts": {k: v.to_json() for k, v in verdicts.items()},
            "certificates": certificates,
            "bounds": bounds,
            "elapsed_ms": elapsed,
        }
        return json.dumps(payload, sort_keys=True, indent=2)
    lines = [f"command: {command}"]
    if graph_summary:
        lines.append(
            "graph: rank={rank} vertices={vertices} edges={edges} squares={squares}".format(
                **graph_summary
            )
        )
    for name, v in verdicts.items():
        lines.append(f"{name}: {v.status}")
    for entry in certificates:
        lines.append("certificate: " + json.dumps(entry, sort_keys=True))
    if bounds:
        lines.append("bounds: " + json.dumps(bounds, sort_keys=True))
    lines.append(f"elapsed_ms: {elapsed}")
    return "\n".join(lines)


def _certs(verdicts: dict) -> list:
    return [
        {"check": name, "certificate": v.certificate}
        for name, v in verdicts.items()
        if v.certificate is not None
    ]


def _bounds(verdicts: dict) -> dict:
    return {name: v.bound for name, v in verdicts.items() if v.bound is not None}


def _run(args) -> tuple[str, int]:
    started = time.monotonic()
    command = args.command

    if command == "generate":
        g = generate_kgraph(args.seed, args.rank, args.max_vertices, args.max_parallel)
        text = dumps(g)
        if args.format == "json":
            payload = {
                "command": command,
                "graph": dict(_graph_summary(g), text=text),
                "verdicts": {},
                "certificates": [],
                "bounds": {"seed": args.seed},
                "elapsed_ms": int((time.monotonic() - started) * 1000),
            }
            return json.dumps(payload, sort_keys=True, indent=2), 0
        return text.rstrip("\n"), 0

    g = load(args.file).validate()
    summary = _graph_summary(g)

    if command == "validate":
        out = _report(args, command, summary, {}, [], {}, started)
        return out, 0

    if command == "paths":
        bound = _degree_arg(args.bound, g.rank)
        found = []
        for deg in iter_degrees_upto(bound):
            for lam in enumerate_paths(g, args.vertex, deg):
                found.append({"degree": str(deg), "path": to_str(lam)})
        certs = [{"check": "paths", "vertex": args.vertex, "paths": found}]
        out = _report(args, command, summary, {}, certs, {"bound": str(bound)}, started)
        return out, 0

    if command == "mce":
        lam = from_str(g, args.lam)
        mu = from_str(g, args.mu)
        pairs = lambda_min(lam, mu)
        exts = mce(lam, mu)
        certs = [
            {
                "check": "mce",
                "lambda_min": sorted(
                    [{"alpha": to_str(p.alpha), "beta": to_str(p.beta)} for p in pairs],
                    key=lambda d: (d["alpha"], d["beta"]),
                ),
                "mce": sorted(to_str(t) for t in exts),
            }
        ]
        out = _report(args, command, summary, {}, certs, {}, started)
        return out, 0

    if command == "exhaustive":
        family = [from_str(g, p) for p in args.paths]
        ok = is_exhaustive(g, args.vertex, family)
        v = Verdict.holds({"exhaustive": True}) if ok else Verdict.fails({"exhaustive": False})
        verdicts = {"exhaustive": v}
        out = _report(args, command, summary, verdicts, _certs(verdicts), _bounds(verdicts), started)
        return out, v.exit_code

    if command == "periodicity":
        if args.vertex is not None and (args.m is None or args.n is None):
            raise KGraphError("periodicity needs either no positionals or vertex m n")
        if args.vertex is None:
            v = nlp_check(g, _opt_degree(args.bound, g.rank), _opt_degree(args.depth, g.rank))
            verdicts = {"nlp": v}
        else:
            depth = _opt_degree(args.depth, g.rank)
            if depth is None:
                depth = Degree((2 * len(g.vertices) + 2,) * g.rank)
            v = local_periodicity_at(
                g, args.vertex, _degree_arg(args.m, g.rank), _degree_arg(args.n, g.rank), depth
            )
            verdicts = {"periodicity": v}
        out = _report(args, command, summary, verdicts, _certs(verdicts), _bounds(verdicts), started)
        return out, v.exit_code

    if command == "aperiodicity":
        v = aperiodicity_check(
            g, args.vertex, _opt_degree(args.depth, g.rank), _opt_degree(args.window, g.rank)
        )
        verdicts = {"aperiodicity": v}
        out = _report(args, command, summary, verdicts, _certs(verdicts), _bounds(verdicts), started)
        return out, v.exit_code

    if command == "conditionb":
        v = condition_b_check(
            g, args.vertex, _opt_degree(args.depth, g.rank), _opt_degree(args.bound, g.rank)
        )
        verdicts = {"conditionb": v}
        out = _report(args, command, summary, verdicts, _certs(verdicts), _bounds(verdicts), started)
        return out, v.exit_code

    if command == "gamma":
        gamma = gamma_construct(g, start=args.start)
        certs = [
            {
                "check": "gamma",
                "anchor": gamma.anchor,
                "start": gamma.start,
                "arrangement": list(gamma.arrangement),
                "dead_count": gamma.a,
                "text": dumps(gamma.base),
            }
        ]
        out = _report(args, command, summary, {}, certs, {}, started)
        return out, 0

    if command == "cofinal":
        v = cofinality_check(g, _opt_degree(args.depth, g.rank))
        verdicts = {"cofinal": v}
        out = _report(args, command, summary, verdicts, _certs(verdicts), _bounds(verdicts), started)
        return out, v.exit_code

    if command == "simplicity":
        cfg = SearchConfig(
            degree_bound=_opt_degree(args.bound, g.rank),
            depth=_opt_degree(args.depth, g.rank),
        )
        report = simplicity_verdict(g, cfg)
        verdicts = {"simple": report.simple, "cofinal": report.cofinal, "nlp": report.nlp}
        out = _report(args, command, summary, verdicts, report.certificates, _bounds(verdicts), started)
        return out, report.simple.exit_code

    raise KGraphError(f"unhandled command {command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = _run(args)
    except KGraphError as exc:
        print(f"kgraphs: error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"kgraphs: error: {exc}", file=sys.stderr)
        return 3
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
