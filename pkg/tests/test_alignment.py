from __future__ import annotations

import random

import pytest

from kgraphs import (
    Degree,
    compose,
    enumerate_leq,
    enumerate_paths,
    ext,
    from_str,
    identity,
    is_exhaustive,
    lambda_min,
    make_fe,
    mce,
)
from kgraphs.errors import RangeMismatch

import oracles


def box_paths(g, v, bound):
    out = set()
    for deg in oracles.degree_grid(bound):
        out |= enumerate_paths(g, v, deg)
    return sorted(out, key=lambda m: (m.degree.components, m.word))


def test_lambda_min_on_the_flip_graph(g_flip):
    e = from_str(g_flip, "v:e")
    f1 = from_str(g_flip, "v:f1")
    pairs = lambda_min(e, f1)
    assert len(pairs) == 1
    (pair,) = pairs
    assert compose(e, pair.alpha) == compose(f1, pair.beta)
    assert compose(e, pair.alpha).degree == Degree((1, 1))


def test_lambda_min_range_guard(g_src):
    with pytest.raises(RangeMismatch):
        lambda_min(identity(g_src, "u"), identity(g_src, "w"))


def test_lambda_min_matches_brute_on_fixtures(graphs):
    for name, g in graphs.items():
        bound = Degree((2,) * g.rank)
        for v in g.vertex_ids():
            idx = oracles.PrefixIndex(g, v, bound.join(bound))
            paths = box_paths(g, v, bound)
            for lam in paths:
                for mu in paths:
                    got = {(p.alpha.word, p.beta.word) for p in lambda_min(lam, mu)}
                    want = oracles.brute_lambda_min(g, idx, lam.word, mu.word)
                    assert got == want, (name, v, lam.word, mu.word)


def test_lambda_min_symmetry(corpus):
    rng = random.Random(11)
    for seed, g in corpus[:30]:
        bound = Degree((1,) * g.rank)
        for v in g.vertex_ids():
            paths = box_paths(g, v, bound)
            if len(paths) < 2:
                continue
            for _ in range(4):
                lam, mu = rng.choice(paths), rng.choice(paths)
                assert len(lambda_min(lam, mu)) == len(lambda_min(mu, lam)), (seed, v)


def test_mce_degree_is_the_join(g_flip):
    e = from_str(g_flip, "v:e")
    f2 = from_str(g_flip, "v:f2")
    for tau in mce(e, f2):
        assert tau.degree == e.degree.join(f2.degree)


def test_disjoint_pair_has_empty_mce(g_2v):
    p = from_str(g_2v, "v:p")
    c = from_str(g_2v, "v:c")
    # p stays at v, c jumps to w; no common extension at degree (1)
    assert mce(p, c) == set()
    assert lambda_min(p, c) == set()


def test_ext_collects_completions(g_flip):
    e = from_str(g_flip, "v:e")
    fam = [from_str(g_flip, "v:f1"), from_str(g_flip, "v:f2")]
    alphas = ext(e, fam)
    assert alphas
    assert all(a.range == e.source for a in alphas)


def test_exhaustive_examples(g_o2, g_2v):
    a = from_str(g_o2, "v:a")
    b = from_str(g_o2, "v:b")
    assert is_exhaustive(g_o2, "v", [a, b])
    # a alone misses every path through b
    assert not is_exhaustive(g_o2, "v", [a])
    # the cycle edge alone is exhaustive at v only if everything meets it
    p = from_str(g_2v, "v:p")
    c = from_str(g_2v, "v:c")
    assert not is_exhaustive(g_2v, "v", [c])
    assert is_exhaustive(g_2v, "v", [p, c])


def test_make_fe_tags_or_raises(g_o2):
    a = from_str(g_o2, "v:a")
    b = from_str(g_o2, "v:b")
    fe = make_fe(g_o2, "v", [a, b])
    assert fe.vertex == "v"
    assert fe.elements == frozenset({a, b})
    with pytest.raises(ValueError):
        make_fe(g_o2, "v", [a])


def test_exhaustive_matches_brute(corpus):
    rng = random.Random(23)
    checked = 0
    for seed, g in corpus[:20]:
        bound = Degree((1,) * g.rank)
        for v in g.vertex_ids():
            cands = box_paths(g, v, bound)
            if not cands:
                continue
            probe = Degree((2,) * g.rank)
            idx = oracles.PrefixIndex(g, v, probe.join(probe))
            for _ in range(3):
                fam = rng.sample(cands, min(len(cands), rng.randint(1, 3)))
                got = is_exhaustive(g, v, fam)
                want = oracles.brute_exhaustive(g, v, [m.word for m in fam], probe, idx)
                assert got == want, (seed, v, [m.word for m in fam])
                checked += 1
    assert checked >= 60
