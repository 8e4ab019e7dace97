"""Source removal: reduce a k-graph with dead directions to a smaller
sourceless graph that remembers the aperiodic structure.

The construction chases stalled coordinates: starting from a chosen
vertex, repeatedly find a reachable vertex where a new color is dead and
move there. Deadness propagates source-ward (any path from a vertex
where color i is dead has no color-i edges at all, by factorization), so
after at most k moves every remaining color is alive on the whole
reachable set. The graph induced there on the live colors is the
reduction; the paper's degree maps pi and iota translate between the two
degree monoids.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .degrees import Degree
from .errors import RefError, UnsupportedDegree
from .morphism import Morphism
from .skeleton import Edge, KGraph, Square


@dataclass(frozen=True)
class GammaGraph:
    base: KGraph = field(repr=False)
    arrangement: tuple[int, ...]  # dead colors in discovery order, then live ascending
    a: int
    anchor: str
    start: str
    embed: dict[str, str] = field(repr=False)  # reduction edge id -> original edge id

    @property
    def live_colors(self) -> tuple[int, ...]:
        return self.arrangement[self.a :]

    def pi(self, d: Degree) -> Degree:
        """Project a full-rank degree onto the live coordinates."""
        return Degree(tuple(d[i] for i in self.live_colors))

    def iota(self, d: Degree) -> Degree:
        """Inject a reduced degree back, zero on the dead coordinates."""
        k = self.a + len(self.live_colors)
        out = [0] * k
        for j, i in enumerate(self.live_colors):
            out[i - 1] = d[j + 1]
        return Degree(tuple(out))


def gamma_construct(g: KGraph, start: str | None = None) -> GammaGraph:
    """Build the sourceless reduction, chasing dead colors from `start`
    (default: the first vertex in sorted order)."""
    g.require_validated()
    origin = start if start is not None else g.vertex_ids()[0]
    if origin not in g.vertices:
        raise RefError(f"unknown vertex {origin!r}")
    at = origin

    found: list[int] = []
    while True:
        candidates = [
            (i, w)
            for w in sorted(g.reachable(at))
            for i in sorted(g.dead_colors(w))
            if i not in found
        ]
        if not candidates:
            break
        color, w = min(candidates)
        found.append(color)
        at = w

    live = [i for i in range(1, g.rank + 1) if i not in found]
    obj = g.reachable(at)
    edges = {}
    for eid, e in g.edges.items():
        if e.color in found or e.range not in obj:
            continue
        edges[eid] = Edge(eid, live.index(e.color) + 1, e.range, e.source)
    squares = {}
    for key, sq in g.squares.items():
        if all(x in edges for x in (sq.first, sq.second, sq.flipped_first, sq.flipped_second)):
            squares[key] = Square(sq.first, sq.second, sq.flipped_second, sq.flipped_first)
    base = KGraph(len(live), set(obj), edges, squares).validate()
    for v in base.vertex_ids():
        if base.dead_colors(v):
            raise RefError(f"reduction left a source at {v!r}; construction bug")
    return GammaGraph(
        base=base,
        arrangement=tuple(found + live),
        a=len(found),
        anchor=at,
        start=origin,
        embed={eid: eid for eid in edges},
    )


def gamma_project_prefix(gamma: GammaGraph, x):
    """Reinterpret a boundary prefix of the original graph inside the
    reduction. Defined only at reduction vertices for words on live
    colors."""
    from .boundary import BoundaryPrefix

    base = gamma.base
    if x.path.range not in base.vertices:
        raise UnsupportedDegree(f"{x.path.range!r} is not a reduction vertex")
    for eid in x.path.word:
        if eid not in base.edges:
            raise UnsupportedDegree(f"edge {eid!r} uses a dead color")
    return BoundaryPrefix(Morphism(base, x.path.range, x.path.word))
