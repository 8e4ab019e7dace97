"""Path calculus: normal forms, composition, factorization, enumeration.

A morphism of a k-graph is stored as its unique normal form: the edge
word sorted so that all color-1 edges come first, then color-2, and so
on. Two morphisms are equal exactly when their (range, word) pairs are
equal, so no quotienting logic appears anywhere downstream.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .degrees import Degree, iter_degrees_upto
from .errors import (
    DegreeOutOfRange,
    NotComposable,
    ParseError,
    RefError,
)
from .skeleton import KGraph


@dataclass(frozen=True)
class Morphism:
    """A path in normal form. Immutable; equality and hashing ignore the
    graph object itself (comparing morphisms across graphs is meaningless
    and the caller's problem)."""

    graph: KGraph = field(compare=False, repr=False)
    range: str
    word: tuple[str, ...]
    degree: Degree = field(init=False, compare=False)

    def __post_init__(self):
        g = self.graph
        g.require_validated()
        if self.range not in g.vertices:
            raise RefError(f"unknown vertex {self.range!r}")
        counts = [0] * g.rank
        at = self.range
        prev_color = 0
        for t, eid in enumerate(self.word):
            e = g.edge(eid)
            if e.range != at:
                raise NotComposable(t, f"edge {eid!r} does not continue the chain")
            if e.color < prev_color:
                raise NotComposable(t, "word is not in normal form")
            prev_color = e.color
            counts[e.color - 1] += 1
            at = e.source
        object.__setattr__(self, "degree", Degree(tuple(counts)))

    @property
    def source(self) -> str:
        if not self.word:
            return self.range
        return self.graph.edge(self.word[-1]).source

    def __str__(self) -> str:
        return to_str(self)

    def __len__(self) -> int:
        return len(self.word)


def identity(g: KGraph, v: str) -> Morphism:
    return Morphism(g, v, ())


def _bubble_left(g: KGraph, word: list[str], j: int):
    """Swap the descending pair at (j-1, j) into ascending order."""
    word[j - 1], word[j] = g.flip_bwd[(word[j - 1], word[j])]


def _insertion_sort(g: KGraph, word: list[str]):
    for i in range(1, len(word)):
        j = i
        while j > 0 and g.edge(word[j - 1]).color > g.edge(word[j]).color:
            _bubble_left(g, word, j)
            j -= 1


def normalize(g: KGraph, range: str, raw_word) -> Morphism:
    """Sort a composable edge word into normal form by applying squares.

    Insertion sort on colors; each swap of an adjacent out-of-order pair
    is one application of the (inverted) square table. The k-graph axioms
    make the result independent of swap order.
    """
    g.require_validated()
    word = list(raw_word)
    at = range
    for t, eid in enumerate(word):
        e = g.edge(eid)
        if e.range != at:
            raise NotComposable(t, f"edge {eid!r} does not continue the chain")
        at = e.source
    _insertion_sort(g, word)
    return Morphism(g, range, tuple(word))


def compose(mu: Morphism, nu: Morphism) -> Morphism:
    if mu.source != nu.range:
        raise NotComposable(
            len(mu.word), f"source {mu.source!r} does not meet range {nu.range!r}"
        )
    return normalize(mu.graph, mu.range, mu.word + nu.word)


def extend(lam: Morphism, eid: str) -> Morphism:
    """Append one edge with range s(lam) and restore normal form."""
    g = lam.graph
    e = g.edge(eid)
    if e.range != lam.source:
        raise NotComposable(len(lam.word), f"edge {eid!r} does not start at the source")
    word = list(lam.word) + [eid]
    j = len(word) - 1
    while j > 0 and g.edge(word[j - 1]).color > g.edge(word[j]).color:
        _bubble_left(g, word, j)
        j -= 1
    return Morphism(g, lam.range, tuple(word))


def factor(lam: Morphism, m: Degree) -> tuple[Morphism, Morphism]:
    """The unique (mu, nu) with lam = mu nu and d(mu) = m.

    Pulls the required edges to the front color by color, rewriting with
    the forward square table whenever a wanted edge must cross a
    lower-color block.
    """
    g = lam.graph
    d = lam.degree
    if m.rank != d.rank or not m <= d:
        raise DegreeOutOfRange(f"cannot factor degree {d} at {m}")
    rest = list(lam.word)
    head: list[str] = []
    for color in range(1, g.rank + 1):
        for _ in range(m[color]):
            p = next(t for t, eid in enumerate(rest) if g.edge(eid).color == color)
            # walk the edge across the lower-color prefix
            while p > 0:
                rest[p - 1], rest[p] = g.flip_fwd[(rest[p - 1], rest[p])]
                p -= 1
            head.append(rest.pop(0))
    mu = Morphism(g, lam.range, tuple(head))
    nu = Morphism(g, mu.source, tuple(rest))
    return mu, nu


def segment(lam: Morphism, m: Degree, n: Degree) -> Morphism:
    """lam(m, n): the middle factor of degree n - m."""
    d = lam.degree
    if not (m <= n and n <= d):
        raise DegreeOutOfRange(f"window ({m}, {n}) does not fit degree {d}")
    _, tail = factor(lam, m)
    mid, _ = factor(tail, n - m)
    return mid


def vertex_at(lam: Morphism, m: Degree) -> str:
    """The vertex lam(m) visited after consuming a degree-m prefix."""
    mu, _ = factor(lam, m)
    return mu.source


def to_str(lam: Morphism) -> str:
    return lam.range + ":" + ".".join(lam.word)


def from_str(g: KGraph, text: str) -> Morphism:
    """Parse `<vertex>:<edge>.<edge>...`. The word need not be in normal
    form; it is normalized on the way in."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ParseError(0, f"morphism text {text!r} lacks ':'")
    if head not in g.vertices:
        raise RefError(f"unknown vertex {head!r}")
    word = tuple(tail.split(".")) if tail else ()
    return normalize(g, head, word)


# -- enumeration ------------------------------------------------------


def _mono_chains(g: KGraph, v: str, color: int, length: int):
    """All length-`length` chains of one color starting at v, as
    (word, end_vertex) pairs. Cached on the graph."""
    cache = g._cache.setdefault("mono", {})
    key = (v, color, length)
    if key in cache:
        return cache[key]
    if length == 0:
        out = [((), v)]
    else:
        out = []
        for eid in g.edges_with_range(v, color):
            for word, end in _mono_chains(g, g.edge(eid).source, color, length - 1):
                out.append(((eid,) + word, end))
    cache[key] = out
    return out


def _mono_chains_into(g: KGraph, v: str, color: int, length: int):
    """All length-`length` one-color chains ending at v (source = v)."""
    cache = g._cache.setdefault("mono_into", {})
    key = (v, color, length)
    if key in cache:
        return cache[key]
    if length == 0:
        out = [((), v)]
    else:
        out = []
        for eid in g.edges_with_source(v, color):
            e = g.edge(eid)
            for word, rng in _mono_chains_into(g, e.range, color, length - 1):
                out.append((word + (eid,), rng))
    cache[key] = out
    return out


def _exact_paths(g: KGraph, v: str, n: Degree) -> set[Morphism]:
    """Cached body of enumerate_paths. Callers must not mutate."""
    cache = g._cache.setdefault("exact_paths", {})
    key = (v, n)
    if key in cache:
        return cache[key]
    acc = [((), v)]
    for color in range(1, g.rank + 1):
        step = []
        for word, cur in acc:
            for block, end in _mono_chains(g, cur, color, n[color]):
                step.append((word + block, end))
        acc = step
    out = {Morphism(g, v, word) for word, _ in acc}
    cache[key] = out
    return out


def enumerate_paths(g: KGraph, v: str, n: Degree) -> set[Morphism]:
    """vLambda^n: every path of degree exactly n with range v.

    Normal forms are generated directly, one color block at a time, so
    each morphism appears exactly once and no dedup pass is needed.
    """
    g.require_validated()
    if v not in g.vertices:
        raise RefError(f"unknown vertex {v!r}")
    if n.rank != g.rank:
        raise DegreeOutOfRange(f"degree {n} has rank {n.rank}, graph has {g.rank}")
    return set(_exact_paths(g, v, n))


def _leq_paths(g: KGraph, v: str, n: Degree) -> set[Morphism]:
    """Cached body of enumerate_leq. Callers must not mutate."""
    cache = g._cache.setdefault("leq_paths", {})
    key = (v, n)
    if key in cache:
        return cache[key]
    out: set[Morphism] = set()
    for deg in iter_degrees_upto(n):
        for lam in _exact_paths(g, v, deg):
            dead = g.dead_colors(lam.source)
            ok = True
            for i in range(1, g.rank + 1):
                if deg[i] + 1 <= n[i] and i not in dead:
                    ok = False
                    break
            if ok:
                out.add(lam)
    cache[key] = out
    return out


def enumerate_leq(g: KGraph, v: str, n: Degree) -> set[Morphism]:
    """vLambda^{<=n}: paths of degree <= n that cannot grow inside the
    box, i.e. d(lam) + e_i <= n forces color i dead at the source."""
    g.require_validated()
    if v not in g.vertices:
        raise RefError(f"unknown vertex {v!r}")
    if n.rank != g.rank:
        raise DegreeOutOfRange(f"degree {n} has rank {n.rank}, graph has {g.rank}")
    return set(_leq_paths(g, v, n))


def enumerate_into(g: KGraph, v: str, n: Degree) -> set[Morphism]:
    """Lambda^n v: every path of degree n with source v, built backward
    color block by color block."""
    g.require_validated()
    if v not in g.vertices:
        raise RefError(f"unknown vertex {v!r}")
    if n.rank != g.rank:
        raise DegreeOutOfRange(f"degree {n} has rank {n.rank}, graph has {g.rank}")
    acc = [((), v)]
    for color in range(g.rank, 0, -1):
        step = []
        for suffix, rng in acc:
            for block, new_rng in _mono_chains_into(g, rng, color, n[color]):
                step.append((block + suffix, new_rng))
        acc = step
    return {Morphism(g, rng, word) for word, rng in acc}
