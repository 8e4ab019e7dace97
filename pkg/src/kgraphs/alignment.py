"""Common extensions: Lambda^min pairs, MCE sets, Ext, exhaustiveness.

The finite skeleton keeps every one of these sets finite, so each
operation returns the exact set rather than a lazy search.
"""
from __future__ import annotations

from dataclasses import dataclass

from .degrees import Degree
from .errors import RangeMismatch
from .morphism import Morphism, compose, enumerate_leq, enumerate_paths, factor
from .skeleton import KGraph


@dataclass(frozen=True)
class MinExtPair:
    """A minimal common extension of a pair (lam, mu): lam.alpha = mu.beta
    with total degree d(lam) v d(mu)."""

    alpha: Morphism
    beta: Morphism


@dataclass(frozen=True)
class FESet:
    """A finite set of paths with a common range, tagged exhaustive.
    Build through make_fe so the tag is never attached unchecked."""

    vertex: str
    elements: frozenset[Morphism]


def lambda_min(lam: Morphism, mu: Morphism) -> set[MinExtPair]:
    """All (alpha, beta) with lam.alpha = mu.beta of minimal degree.

    Only extensions of lam are enumerated; beta is forced by unique
    factorization once the common extension is known.
    """
    if lam.range != mu.range:
        raise RangeMismatch(f"ranges differ: {lam.range!r} vs {mu.range!r}")
    g = lam.graph
    top = lam.degree.join(mu.degree)
    out: set[MinExtPair] = set()
    for alpha in enumerate_paths(g, lam.source, top - lam.degree):
        tau = compose(lam, alpha)
        prefix, beta = factor(tau, mu.degree)
        if prefix == mu:
            out.add(MinExtPair(alpha, beta))
    return out


def mce(lam: Morphism, mu: Morphism) -> set[Morphism]:
    """Minimal common extensions themselves: the image of lambda_min
    under (alpha, beta) -> lam.alpha."""
    return {compose(lam, pair.alpha) for pair in lambda_min(lam, mu)}


def ext(eta: Morphism, paths) -> set[Morphism]:
    """Ext(eta; F): alpha-components of lambda_min(eta, lam) over lam in F."""
    out: set[Morphism] = set()
    for lam in paths:
        if lam.range != eta.range:
            raise RangeMismatch(f"ranges differ: {eta.range!r} vs {lam.range!r}")
        for pair in lambda_min(eta, lam):
            out.add(pair.alpha)
    return out


def is_exhaustive(g: KGraph, v: str, paths) -> bool:
    """Decide whether E meets every path at v in a common extension.

    Reduction: with N the join of the degrees in E, it suffices to test
    mu ranging over the saturated box vLambda^{<=N}; any longer path
    truncates into the box without losing its witness.
    """
    g.require_validated()
    elems = list(paths)
    for lam in elems:
        if lam.range != v:
            raise RangeMismatch(f"element range {lam.range!r} is not {v!r}")
    if not elems:
        return False
    top = Degree.zero(g.rank)
    for lam in elems:
        top = top.join(lam.degree)
    for mu in enumerate_leq(g, v, top):
        if not any(lambda_min(lam, mu) for lam in elems):
            return False
    return True


def make_fe(g: KGraph, v: str, paths) -> FESet:
    """Verify exhaustiveness and attach the FE tag."""
    elems = frozenset(paths)
    if not is_exhaustive(g, v, elems):
        raise ValueError(f"set is not exhaustive at {v!r}")
    return FESet(v, elems)
