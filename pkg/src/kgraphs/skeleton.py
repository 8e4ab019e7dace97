"""Colored skeletons with commuting-square data, and their validation.

A rank-k graph is presented here by a k-colored directed multigraph plus
one square per composable bi-colored edge pair. The text format:

    kgraph 1
    rank <k>
    vertex <id> [<id> ...]
    edge <id> <color> <range> <source>
    square <e> <f> = <f'> <e'>

Colors are 1..k. A square line declares the identity e.f = f'.e' where
color(e) = color(e') < color(f) = color(f'). Words are read range-first:
in a word [a, b] the edge b starts where a ends, r(b) = s(a). '#' starts
a comment. Ids match [A-Za-z0-9_]+.

Loading checks structure and references only. validate() then checks the
square system: every composable ascending pair has exactly one square,
the induced pair flips are bijective, and for rank >= 3 the two ways of
reversing a tri-colored triple agree. Operations in the rest of the
package require a validated graph.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    DupError,
    EmptyGraph,
    HexagonViolation,
    InvalidSquare,
    MissingSquare,
    NonBijectiveFlip,
    ParseError,
    RefError,
    UnsupportedDegree,
)

_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class Edge:
    id: str
    color: int
    range: str
    source: str


@dataclass(frozen=True)
class Square:
    """The identity first.second = flipped_second.flipped_first."""

    first: str
    second: str
    flipped_second: str
    flipped_first: str

    @property
    def key(self) -> tuple[str, str]:
        return (self.first, self.second)

    @property
    def rhs(self) -> tuple[str, str]:
        return (self.flipped_second, self.flipped_first)


class KGraph:
    """A finite k-colored skeleton with squares, plus derived tables.

    Derived tables (built by validate): range_index/source_index map a
    (vertex, color) pair to the sorted tuple of edge ids with that range
    or source, dead maps a vertex to the frozenset of colors with no
    incoming edge at it, and flip_fwd/flip_bwd rewrite composable edge
    pairs across squares in the ascending-to-descending direction and
    back.
    """

    def __init__(self, rank: int, vertices, edges, squares):
        if rank < 0:
            raise UnsupportedDegree(f"rank must be >= 0, got {rank}")
        self.rank = rank
        self.vertices: set[str] = set(vertices)
        self.edges: dict[str, Edge] = dict(edges)
        self.squares: dict[tuple[str, str], Square] = dict(squares)
        self.validated = False
        self.range_index: dict[tuple[str, int], tuple[str, ...]] = {}
        self.source_index: dict[tuple[str, int], tuple[str, ...]] = {}
        self.dead: dict[str, frozenset[int]] = {}
        self.flip_fwd: dict[tuple[str, str], tuple[str, str]] = {}
        self.flip_bwd: dict[tuple[str, str], tuple[str, str]] = {}
        self._cache: dict = {}

    # -- accessors ---------------------------------------------------

    def edge(self, eid: str) -> Edge:
        try:
            return self.edges[eid]
        except KeyError:
            raise RefError(f"unknown edge {eid!r}") from None

    def vertex_ids(self) -> list[str]:
        return sorted(self.vertices)

    def edges_with_range(self, v: str, color: int) -> tuple[str, ...]:
        """Edge ids of one color ending at v; the continuations when a
        path's current source is v."""
        return self.range_index.get((v, color), ())

    def edges_with_source(self, v: str, color: int) -> tuple[str, ...]:
        return self.source_index.get((v, color), ())

    def dead_colors(self, v: str) -> frozenset[int]:
        """Colors with no edge ending at v. A path whose source carries
        a dead color can never grow in that coordinate."""
        return self.dead[v]

    def require_validated(self):
        if not self.validated:
            raise RefError("graph must be validated before use")

    def reachable(self, v: str) -> frozenset[str]:
        """Vertices that occur as the source of some path starting at v."""
        self.require_validated()
        hit = self._cache.setdefault("reachable", {})
        if v in hit:
            return hit[v]
        if v not in self.vertices:
            raise RefError(f"unknown vertex {v!r}")
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for color in range(1, self.rank + 1):
                for eid in self.edges_with_range(u, color):
                    s = self.edges[eid].source
                    if s not in seen:
                        seen.add(s)
                        stack.append(s)
        out = frozenset(seen)
        hit[v] = out
        return out

    # -- validation --------------------------------------------------

    def validate(self) -> KGraph:
        if not self.vertices:
            raise EmptyGraph("graph has no vertices")
        for v in self.vertices:
            if not _ID_RE.match(v):
                raise RefError(f"bad vertex id {v!r}")
        for eid, e in self.edges.items():
            if eid != e.id:
                raise RefError(f"edge key {eid!r} does not match id {e.id!r}")
            if not _ID_RE.match(eid):
                raise RefError(f"bad edge id {eid!r}")
            if not 1 <= e.color <= self.rank:
                raise UnsupportedDegree(
                    f"edge {eid!r} has color {e.color}, rank is {self.rank}"
                )
            if e.range not in self.vertices:
                raise RefError(f"edge {eid!r} range {e.range!r} is not a vertex")
            if e.source not in self.vertices:
                raise RefError(f"edge {eid!r} source {e.source!r} is not a vertex")

        self._build_indexes()
        self._check_squares_shape()
        self._check_squares_complete()
        self._check_squares_bijective()
        if self.rank >= 3:
            self._check_hexagon()
        self.validated = True
        self._cache = {}
        return self

    def _build_indexes(self):
        rix: dict[tuple[str, int], list[str]] = {}
        six: dict[tuple[str, int], list[str]] = {}
        for eid, e in sorted(self.edges.items()):
            rix.setdefault((e.range, e.color), []).append(eid)
            six.setdefault((e.source, e.color), []).append(eid)
        self.range_index = {k: tuple(v) for k, v in rix.items()}
        self.source_index = {k: tuple(v) for k, v in six.items()}
        self.dead = {
            v: frozenset(
                i for i in range(1, self.rank + 1) if (v, i) not in self.range_index
            )
            for v in self.vertices
        }

    def _check_squares_shape(self):
        for key, sq in self.squares.items():
            if key != sq.key:
                raise InvalidSquare(f"square stored under wrong key {key}")
            for eid in (sq.first, sq.second, sq.flipped_second, sq.flipped_first):
                if eid not in self.edges:
                    raise RefError(f"square references unknown edge {eid!r}")
            a = self.edges[sq.first]
            b = self.edges[sq.second]
            b2 = self.edges[sq.flipped_second]
            a2 = self.edges[sq.flipped_first]
            if not a.color < b.color:
                raise InvalidSquare(
                    f"square {sq.key}: colors must ascend on the left side"
                )
            if a2.color != a.color or b2.color != b.color:
                raise InvalidSquare(f"square {sq.key}: flipped edges change color")
            if a.source != b.range:
                raise InvalidSquare(f"square {sq.key}: left side not composable")
            if b2.source != a2.range:
                raise InvalidSquare(f"square {sq.key}: right side not composable")
            if a.range != b2.range:
                raise InvalidSquare(f"square {sq.key}: sides disagree on range")
            if b.source != a2.source:
                raise InvalidSquare(f"square {sq.key}: sides disagree on source")

    def _composable_pairs(self, ascending: bool):
        """All composable bi-colored words [a, b]; ascending selects
        color(a) < color(b), else color(a) > color(b)."""
        for aid, a in sorted(self.edges.items()):
            if ascending:
                colors = range(a.color + 1, self.rank + 1)
            else:
                colors = range(1, a.color)
            for c in colors:
                for bid in self.edges_with_range(a.source, c):
                    yield aid, bid

    def _check_squares_complete(self):
        for aid, bid in self._composable_pairs(ascending=True):
            if (aid, bid) not in self.squares:
                raise MissingSquare(f"no square for composable pair ({aid}, {bid})")

    def _check_squares_bijective(self):
        fwd: dict[tuple[str, str], tuple[str, str]] = {}
        bwd: dict[tuple[str, str], tuple[str, str]] = {}
        for sq in self.squares.values():
            fwd[sq.key] = sq.rhs
            if sq.rhs in bwd:
                raise NonBijectiveFlip(
                    f"pairs {bwd[sq.rhs]} and {sq.key} both flip to {sq.rhs}"
                )
            bwd[sq.rhs] = sq.key
        for pair in self._composable_pairs(ascending=False):
            if pair not in bwd:
                raise NonBijectiveFlip(f"descending pair {pair} is not hit by any flip")
        self.flip_fwd = fwd
        self.flip_bwd = bwd

    def _swap_at(self, word: list[str], t: int):
        # forward flip of the ascending pair at positions t, t+1
        word[t], word[t + 1] = self.flip_fwd[(word[t], word[t + 1])]

    def _check_hexagon(self):
        # Two reorder routes must agree on every tri-colored triple.
        for aid, a in sorted(self.edges.items()):
            for j in range(a.color + 1, self.rank + 1):
                for bid in self.edges_with_range(a.source, j):
                    b = self.edges[bid]
                    for l in range(j + 1, self.rank + 1):
                        for cid in self.edges_with_range(b.source, l):
                            left = [aid, bid, cid]
                            self._swap_at(left, 0)
                            self._swap_at(left, 1)
                            self._swap_at(left, 0)
                            right = [aid, bid, cid]
                            self._swap_at(right, 1)
                            self._swap_at(right, 0)
                            self._swap_at(right, 1)
                            if left != right:
                                raise HexagonViolation(
                                    f"triple ({aid}, {bid}, {cid}): "
                                    f"reorderings give {left} vs {right}"
                                )


# -- text format -----------------------------------------------------


def loads(text: str) -> KGraph:
    """Parse the text format. Checks structure and references, not the
    square axioms; call validate() on the result before using it."""
    rank = None
    vertices: set[str] = set()
    edges: dict[str, Edge] = {}
    squares: dict[tuple[str, str], Square] = {}
    saw_header = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not saw_header:
            if tokens == ["kgraph", "1"]:
                saw_header = True
                continue
            raise ParseError(lineno, "expected header 'kgraph 1'")
        directive = tokens[0]
        if directive == "rank":
            if rank is not None:
                raise ParseError(lineno, "duplicate rank line")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(lineno, "expected 'rank <k>'")
            rank = int(tokens[1])
            if rank < 1:
                raise ParseError(lineno, "rank must be >= 1")
        elif directive == "vertex":
            if rank is None:
                raise ParseError(lineno, "rank must be declared first")
            if len(tokens) < 2:
                raise ParseError(lineno, "expected 'vertex <id> ...'")
            for vid in tokens[1:]:
                if not _ID_RE.match(vid):
                    raise ParseError(lineno, f"bad vertex id {vid!r}")
                if vid in vertices:
                    raise DupError(f"line {lineno}: duplicate vertex {vid!r}")
                vertices.add(vid)
        elif directive == "edge":
            if rank is None:
                raise ParseError(lineno, "rank must be declared first")
            if len(tokens) != 5:
                raise ParseError(lineno, "expected 'edge <id> <color> <range> <source>'")
            eid, color_s, rng, src = tokens[1:]
            if not _ID_RE.match(eid):
                raise ParseError(lineno, f"bad edge id {eid!r}")
            if eid in edges:
                raise DupError(f"line {lineno}: duplicate edge {eid!r}")
            if not color_s.isdigit():
                raise ParseError(lineno, f"bad color {color_s!r}")
            color = int(color_s)
            if not 1 <= color <= rank:
                raise ParseError(lineno, f"color {color} out of range 1..{rank}")
            if rng not in vertices:
                raise RefError(f"line {lineno}: unknown vertex {rng!r}")
            if src not in vertices:
                raise RefError(f"line {lineno}: unknown vertex {src!r}")
            edges[eid] = Edge(eid, color, rng, src)
        elif directive == "square":
            if rank is None:
                raise ParseError(lineno, "rank must be declared first")
            if len(tokens) != 6 or tokens[3] != "=":
                raise ParseError(lineno, "expected 'square <e> <f> = <f2> <e2>'")
            e, f, f2, e2 = tokens[1], tokens[2], tokens[4], tokens[5]
            for eid in (e, f, f2, e2):
                if eid not in edges:
                    raise RefError(f"line {lineno}: unknown edge {eid!r}")
            if (e, f) in squares:
                raise DupError(f"line {lineno}: duplicate square for pair ({e}, {f})")
            squares[(e, f)] = Square(e, f, f2, e2)
        else:
            raise ParseError(lineno, f"unknown directive {directive!r}")

    if not saw_header:
        raise ParseError(1, "expected header 'kgraph 1'")
    if rank is None:
        raise ParseError(1, "missing rank line")
    return KGraph(rank, vertices, edges, squares)


def dumps(g: KGraph) -> str:
    """Canonical text form: sorted ids, one declaration per line."""
    lines = ["kgraph 1", f"rank {g.rank}"]
    for vid in sorted(g.vertices):
        lines.append(f"vertex {vid}")
    for eid in sorted(g.edges):
        e = g.edges[eid]
        lines.append(f"edge {e.id} {e.color} {e.range} {e.source}")
    for key in sorted(g.squares):
        sq = g.squares[key]
        lines.append(
            f"square {sq.first} {sq.second} = {sq.flipped_second} {sq.flipped_first}"
        )
    return "\n".join(lines) + "\n"


def load(path) -> KGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(g: KGraph, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(g))
