"""Agreement sweep over the random corpus.

For every seeded graph run the periodicity scan, the per-vertex
aperiodicity and separation checks (aggregated over vertices), and the
sourceless scan when it applies, then count pairwise agreement between
every two checks that both came back definitive. Any disagreement is a
bug in at least one of them.

    python scripts/corpus_sweep.py --seeds 100 [--bound 2 --depth 4 --dense-depth 2]
"""
from __future__ import annotations

import argparse
import sys
import time

from kgraphs import (
    Degree,
    aperiodicity_check,
    condition_b_check,
    nlp_check,
    snlp_check,
)
from kgraphs.generate import generate_kgraph

DENSE_EDGE_COUNT = 13


def aggregate(verdicts) -> str:
    if any(r.is_fails() for r in verdicts):
        return "fails"
    if all(r.is_holds() for r in verdicts):
        return "holds"
    return "unknown"


def sweep_one(g, bound: Degree, depth: Degree) -> dict[str, str]:
    row = {
        "nlp": nlp_check(g, bound, depth).status,
        "aper": aggregate([aperiodicity_check(g, v, depth, bound) for v in g.vertex_ids()]),
        "condb": aggregate([condition_b_check(g, v, depth, bound) for v in g.vertex_ids()]),
    }
    if not any(g.dead_colors(v) for v in g.vertex_ids()):
        row["snlp"] = snlp_check(g, bound, depth).status
    return row


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=100)
    parser.add_argument("--bound", type=int, default=2, help="degree bound per coordinate")
    parser.add_argument("--depth", type=int, default=4, help="search depth per coordinate")
    parser.add_argument(
        "--dense-depth", type=int, default=2,
        help="depth used once a graph has %d+ edges" % DENSE_EDGE_COUNT,
    )
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args(argv)

    t0 = time.monotonic()
    compared = disagreements = fully_definitive = 0
    for seed in range(1, args.seeds + 1):
        rank = 1 if seed % 2 else 2
        g = generate_kgraph(seed, rank, 4, 3)
        per = args.dense_depth if len(g.edges) >= DENSE_EDGE_COUNT else args.depth
        row = sweep_one(g, Degree((args.bound,) * rank), Degree((per,) * rank))
        names = sorted(row)
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                a, b = row[names[i]], row[names[j]]
                if a == "unknown" or b == "unknown":
                    continue
                compared += 1
                if a != b:
                    disagreements += 1
                    print(f"DISAGREE seed={seed}: {names[i]}={a} {names[j]}={b}")
        if all(s != "unknown" for s in row.values()):
            fully_definitive += 1
        if args.verbose:
            print(f"seed={seed:3d} edges={len(g.edges):2d} {row}")
    print(
        "seeds=%d definitive_graphs=%d pairwise_checks=%d disagreements=%d elapsed=%.1fs"
        % (args.seeds, fully_definitive, compared, disagreements, time.monotonic() - t0)
    )
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
