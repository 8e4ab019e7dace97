"""Seeded random skeletons for the property-test corpus.

Rank 1 needs no squares, so edges are sampled freely. Rank 2 samples a
pair of commuting count matrices: the (i, j) entry counts color-c edges
from vertex j into vertex i, and commutativity makes the ascending and
descending path counts match blockwise, so any blockwise bijection is a
complete bijective square system. Rank 3 emits a twisted single-vertex
system built from edge permutations; the twist keeps the associativity
check nontrivial, so mutating one square is detectable.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GenerationExhausted, UnsupportedDegree
from .skeleton import Edge, KGraph, Square

COMMUTE_TRIES = 500
RETRY_CAP = 10000


@dataclass(frozen=True)
class GenConfig:
    seed: int
    rank: int
    max_vertices: int = 4
    max_parallel: int = 3


def generate_kgraph(seed: int, rank: int, max_vertices: int = 4, max_parallel: int = 3) -> KGraph:
    """Deterministic random skeleton: the same arguments always produce
    the same graph, validated before return."""
    if rank not in (1, 2, 3):
        raise UnsupportedDegree(f"generation supports ranks 1, 2, 3, not {rank}")
    if not 1 <= max_vertices <= 6:
        raise ValueError(f"max_vertices must be in 1..6, got {max_vertices}")
    if max_parallel < 1:
        raise ValueError(f"max_parallel must be >= 1, got {max_parallel}")
    rng = random.Random(seed)
    if rank == 1:
        return _rank1(rng, max_vertices, max_parallel)
    if rank == 2:
        return _rank2(rng, max_vertices, max_parallel)
    return _rank3(rng)


def from_config(cfg: GenConfig) -> KGraph:
    return generate_kgraph(cfg.seed, cfg.rank, cfg.max_vertices, cfg.max_parallel)


def _rank1(rng: random.Random, max_vertices: int, max_parallel: int) -> KGraph:
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges: dict[str, Edge] = {}
    pair_count: dict[tuple[str, str], int] = {}
    target = rng.randint(0, 2 * n)
    made = 0
    for _ in range(8 * target + 8):
        if made >= target:
            break
        r = rng.choice(vertices)
        s = rng.choice(vertices)
        if pair_count.get((r, s), 0) >= max_parallel:
            continue
        pair_count[(r, s)] = pair_count.get((r, s), 0) + 1
        made += 1
        eid = f"e{made}"
        edges[eid] = Edge(eid, 1, r, s)
    return KGraph(1, set(vertices), edges, {}).validate()


def _rand_matrix(rng: random.Random, n: int, cap: int) -> list[list[int]]:
    return [[rng.randint(0, cap) for _ in range(n)] for _ in range(n)]


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [
        [sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _rank2(rng: random.Random, max_vertices: int, max_parallel: int) -> KGraph:
    n = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(1, n + 1)]
    cap = min(max_parallel, 2) if n > 1 else max_parallel
    a1 = _rand_matrix(rng, n, cap)
    a2 = None
    for _ in range(COMMUTE_TRIES):
        cand = _rand_matrix(rng, n, cap)
        if _mat_mul(a1, cand) == _mat_mul(cand, a1):
            a2 = cand
            break
    if a2 is None:
        a2 = [row[:] for row in a1]  # every matrix commutes with itself

    edges: dict[str, Edge] = {}

    def emit(mat: list[list[int]], color: int, prefix: str):
        made = 0
        for i, r in enumerate(vertices):
            for j, s in enumerate(vertices):
                for _ in range(mat[i][j]):
                    made += 1
                    eid = f"{prefix}{made}"
                    edges[eid] = Edge(eid, color, r, s)

    emit(a1, 1, "a")
    emit(a2, 2, "b")

    by_color: dict[int, list[str]] = {1: [], 2: []}
    for eid in sorted(edges):
        by_color[edges[eid].color].append(eid)

    squares: dict[tuple[str, str], Square] = {}
    for u in vertices:
        for z in vertices:
            asc = [
                (e1, e2)
                for e1 in by_color[1]
                if edges[e1].range == u
                for e2 in by_color[2]
                if edges[e2].range == edges[e1].source and edges[e2].source == z
            ]
            desc = [
                (f1, f2)
                for f1 in by_color[2]
                if edges[f1].range == u
                for f2 in by_color[1]
                if edges[f2].range == edges[f1].source and edges[f2].source == z
            ]
            rng.shuffle(desc)
            for (e1, e2), (f1, f2) in zip(asc, desc):
                squares[(e1, e2)] = Square(e1, e2, f1, f2)
    return KGraph(2, set(vertices), edges, squares).validate()


def _rank3(rng: random.Random) -> KGraph:
    """Single-vertex rank-3 skeleton with two edges in colors 1 and 2,
    one edge in color 3, and square tables twisted by edge swaps. The
    twists satisfy associativity by construction but leave no slack:
    exchanging two square targets breaks the hexagon check."""
    v = "v"
    xs = ["x1", "x2"]
    ys = ["y1", "y2"]
    z = "z1"
    edges: dict[str, Edge] = {}
    for eid in xs:
        edges[eid] = Edge(eid, 1, v, v)
    for eid in ys:
        edges[eid] = Edge(eid, 2, v, v)
    edges[z] = Edge(z, 3, v, v)

    def swap(pair: list[str]):
        return {pair[0]: pair[1], pair[1]: pair[0]}

    ident_y = {ys[0]: ys[0], ys[1]: ys[1]}
    phi1 = swap(xs)
    phi2 = swap(ys) if rng.random() < 0.5 else ident_y
    psi = swap(ys) if rng.random() < 0.5 else ident_y

    squares: dict[tuple[str, str], Square] = {}
    for e in xs:
        for f in ys:
            # e.f = psi(f).phi1(e): equivariant under the twists below
            squares[(e, f)] = Square(e, f, psi[f], phi1[e])
    for e in xs:
        squares[(e, z)] = Square(e, z, z, phi1[e])
    for f in ys:
        squares[(f, z)] = Square(f, z, z, phi2[f])

    g = KGraph(3, {v}, edges, squares)
    try:
        return g.validate()
    except Exception as exc:  # construction is total; guard regressions
        raise GenerationExhausted(f"rank-3 construction failed validation: {exc}")
