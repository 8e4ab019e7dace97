"""Finite windows into the boundary path space.

Boundary paths are never materialized as infinite objects. Everything
here works with a BoundaryPrefix: a finite path plus the record of which
coordinates are dead at its source. A prefix whose coordinates are all
dead is itself a complete boundary path.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .degrees import Degree, iter_degrees_upto
from .errors import DegreeOutOfRange
from .morphism import (
    Morphism,
    compose,
    enumerate_leq,
    factor,
    segment,
    to_str,
)
from .skeleton import KGraph
from .verdicts import Verdict


@dataclass(frozen=True)
class BoundaryPrefix:
    """A finite path together with its stalled coordinates.

    dead is always recomputed from the graph; callers cannot assert a
    stall that the skeleton does not exhibit."""

    path: Morphism
    dead: frozenset[int] = field(init=False, compare=False)

    def __post_init__(self):
        g = self.path.graph
        object.__setattr__(self, "dead", g.dead_colors(self.path.source))

    @property
    def degree(self) -> Degree:
        return self.path.degree

    @property
    def complete(self) -> bool:
        return len(self.dead) == self.path.graph.rank

    def __str__(self) -> str:
        tags = ",".join(str(i) for i in sorted(self.dead))
        return f"{to_str(self.path)}|dead={tags}"


@dataclass(frozen=True)
class ExtensionStrategy:
    mode: str  # lexicographic | all-branches


LEXICOGRAPHIC = ExtensionStrategy("lexicographic")
ALL_BRANCHES = ExtensionStrategy("all-branches")


def dead_directions(g: KGraph, v: str) -> set[int]:
    g.require_validated()
    return set(g.dead_colors(v))


def _monus(a: Degree, b: Degree) -> Degree:
    return Degree(tuple(max(0, x - y) for x, y in zip(a.components, b.components)))


def extend_to_boundary(lam: Morphism, target: Degree, strategy: ExtensionStrategy = LEXICOGRAPHIC):
    """Grow lam toward degree `target` until every coordinate has either
    reached it or died.

    lexicographic: one prefix, always taking the least eligible edge id.
    all-branches: the set of all such prefixes, i.e. every extension of
    lam by a member of s(lam)Lambda^{<=target-d(lam)}.
    """
    g = lam.graph
    g.require_validated()
    if not lam.degree <= target:
        raise DegreeOutOfRange(f"target {target} below degree {lam.degree}")
    if strategy.mode == "all-branches":
        room = target - lam.degree
        return {
            BoundaryPrefix(compose(lam, c))
            for c in enumerate_leq(g, lam.source, room)
        }
    cur = lam
    while True:
        eligible = []
        for color in range(1, g.rank + 1):
            if cur.degree[color] < target[color]:
                eligible.extend(g.edges_with_range(cur.source, color))
        if not eligible:
            return BoundaryPrefix(cur)
        eid = min(eligible)
        e = g.edge(eid)
        cur = compose(cur, Morphism(g, e.range, (eid,)))


def boundary_prefixes(g: KGraph, v: str, bound: Degree) -> set[BoundaryPrefix]:
    """All depth-`bound` boundary-prefix candidates at v: the saturated
    box vLambda^{<=bound} wrapped with its dead flags."""
    return {BoundaryPrefix(lam) for lam in enumerate_leq(g, v, bound)}


def shift(x: BoundaryPrefix, n: Degree) -> BoundaryPrefix:
    """The window of sigma^n x carried by the prefix."""
    d = x.path.degree
    if not n <= d:
        raise DegreeOutOfRange(f"shift {n} exceeds carried degree {d}")
    return BoundaryPrefix(segment(x.path, n, d))


# -- bounded membership ------------------------------------------------

_HIT = "hit"
_MISS = "miss"
_OPEN = "open"


def _classify(x: BoundaryPrefix, n: Degree, lam: Morphism, assume_complete: bool) -> str:
    """Does the (unknown) boundary path through x satisfy x(n,n+d(lam)) = lam?

    hit/miss when every continuation of the prefix agrees on the answer,
    open otherwise.
    """
    g = x.path.graph
    d = x.path.degree
    tail = segment(x.path, n, d)
    q = lam.degree.meet(tail.degree)
    if segment(tail, Degree.zero(g.rank), q) != factor(lam, q)[0]:
        return _MISS
    if lam.degree <= tail.degree:
        return _HIT
    dead = set(range(1, g.rank + 1)) if assume_complete else set(x.dead)
    if any(n[i] + lam.degree[i] > d[i] and i in dead for i in range(1, g.rank + 1)):
        return _MISS
    # the answer now depends on how the path continues; quantify over the
    # saturated box of continuations covering the missing window
    shortfall = _monus(n + lam.degree, d)
    any_match = False
    all_match = True
    for c in enumerate_leq(g, x.path.source, shortfall):
        hit = (
            c.degree == shortfall
            and segment(compose(x.path, c), n, n + lam.degree) == lam
        )
        any_match = any_match or hit
        all_match = all_match and hit
    if any_match and all_match:
        return _HIT
    if not any_match:
        return _MISS
    return _OPEN


def is_boundary_member_bounded(
    x: BoundaryPrefix, depth: Degree, assume_complete: bool = False
) -> Verdict:
    """Bounded test of the boundary-path condition: at every point x(n),
    every finite exhaustive set drawn from x(n)Lambda^{<=depth} must
    contain a path the boundary path factors through.

    Monotonicity of exhaustiveness collapses the quantifier over sets:
    a violating set exists iff the definite misses are exhaustive, and
    no pessimistic violation exists iff misses plus undecided are not.
    """
    from .alignment import is_exhaustive

    g = x.path.graph
    g.require_validated()
    undecided_somewhere = False
    for n in iter_degrees_upto(x.path.degree):
        at = _vertex_at(x.path, n)
        misses = []
        open_ = []
        for lam in enumerate_leq(g, at, depth):
            cls = _classify(x, n, lam, assume_complete)
            if cls == _MISS:
                misses.append(lam)
            elif cls == _OPEN:
                open_.append(lam)
        if misses and is_exhaustive(g, at, misses):
            cert = {
                "n": str(n),
                "E": sorted(to_str(lam) for lam in misses),
            }
            return Verdict.fails(certificate=cert)
        if open_ and is_exhaustive(g, at, misses + open_):
            undecided_somewhere = True
    bound = {"depth": str(depth)}
    if undecided_somewhere:
        return Verdict.unknown(bound=bound)
    return Verdict.holds(bound=bound)


def _vertex_at(lam: Morphism, n: Degree) -> str:
    head, _ = factor(lam, n)
    return head.source
