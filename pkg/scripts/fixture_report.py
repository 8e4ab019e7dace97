"""Print the full verdict table for the shipped fixtures.

Runs every analysis (periodicity scan, per-vertex aperiodicity and
separation, cofinality, the combined simplicity verdict, and the rank-1
cycle criterion where it applies) and dumps statuses with certificates.

    python scripts/fixture_report.py [--json] [fixture ...]
"""
from __future__ import annotations

import argparse
import json
import sys

from kgraphs import (
    aperiodicity_check,
    condition_b_check,
    all_fixtures,
    gamma_construct,
    k1_cycle_criterion,
    simplicity_verdict,
)
from kgraphs.errors import UnsupportedDegree


def report(name, g) -> dict:
    si = simplicity_verdict(g)
    out = {
        "fixture": name,
        "rank": g.rank,
        "vertices": g.vertex_ids(),
        "nlp": si.nlp.to_json(),
        "cofinal": si.cofinal.to_json(),
        "simple": si.simple.to_json(),
        "aperiodicity": {},
        "conditionb": {},
    }
    for v in g.vertex_ids():
        out["aperiodicity"][v] = aperiodicity_check(g, v).to_json()
        out["conditionb"][v] = condition_b_check(g, v).to_json()
    try:
        out["cycle_criterion"] = k1_cycle_criterion(g).to_json()
    except UnsupportedDegree:
        pass
    if any(g.dead_colors(v) for v in g.vertex_ids()):
        gamma = gamma_construct(g)
        out["reduction"] = {
            "anchor": gamma.anchor,
            "arrangement": list(gamma.arrangement),
            "vertices": gamma.base.vertex_ids(),
        }
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", help="fixture names, default all")
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)

    graphs = all_fixtures()
    names = args.names or sorted(graphs)
    unknown = [n for n in names if n not in graphs]
    if unknown:
        print(f"unknown fixtures: {unknown}; have {sorted(graphs)}", file=sys.stderr)
        return 3

    rows = [report(n, graphs[n]) for n in names]
    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
        return 0
    for row in rows:
        print(f"== {row['fixture']} (rank {row['rank']}, vertices {row['vertices']})")
        for key in ("nlp", "cofinal", "simple"):
            print(f"  {key:12s} {row[key]['status']}")
        for v in row["vertices"]:
            a = row["aperiodicity"][v]["status"]
            b = row["conditionb"][v]["status"]
            print(f"  at {v}: aperiodicity={a} separation={b}")
        if "reduction" in row:
            red = row["reduction"]
            print(f"  reduction: anchor={red['anchor']} arrangement={red['arrangement']}")
        certs = row["simple"].get("certificate")
        if certs:
            print(f"  reason: {certs.get('reason', '')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
