from __future__ import annotations

import pytest

from kgraphs import (
    Degree,
    aperiodicity_check,
    extend_to_boundary,
    gamma_construct,
    gamma_project_prefix,
    identity,
    nlp_check,
)
from kgraphs.errors import RefError, UnsupportedDegree


def test_src_reduction_shape(g_src):
    gamma = gamma_construct(g_src, "u")
    assert gamma.start == "u"
    assert gamma.anchor == "w"
    assert gamma.a == 1
    assert gamma.arrangement == (1, 2)
    assert gamma.live_colors == (2,)
    base = gamma.base
    assert base.rank == 1
    assert base.vertex_ids() == ["w"]
    assert set(base.edges) == {"g_w"}
    assert not base.dead_colors("w")


def test_src_reduction_degree_maps(g_src):
    gamma = gamma_construct(g_src, "u")
    d = Degree((3, 5))
    assert gamma.pi(d) == Degree((5,))
    assert gamma.iota(Degree((5,))) == Degree((0, 5))
    assert gamma.pi(gamma.iota(Degree((7,)))) == Degree((7,))


def test_reduction_default_start(g_src):
    gamma = gamma_construct(g_src)
    assert gamma.start == "u"
    with pytest.raises(RefError):
        gamma_construct(g_src, "nope")


def test_sourceless_reduction_is_identity_shaped(g_o2, g_flip):
    for g in (g_o2, g_flip):
        gamma = gamma_construct(g)
        assert gamma.a == 0
        assert gamma.live_colors == tuple(range(1, g.rank + 1))
        assert set(gamma.base.vertices) == set(g.reachable(gamma.start))
        assert gamma.pi(Degree((1,) * g.rank)) == Degree((1,) * g.rank)


def test_reduction_of_corpus_sources(corpus):
    hit = 0
    for seed, g in corpus:
        if not any(g.dead_colors(v) for v in g.vertex_ids()):
            continue
        gamma = gamma_construct(g)
        hit += 1
        for v in gamma.base.vertex_ids():
            assert not gamma.base.dead_colors(v), (seed, v)
        assert gamma.base.validate() is gamma.base
    assert hit > 0


def test_periodicity_transfers_to_reduction(g_src):
    gamma = gamma_construct(g_src, "u")
    assert nlp_check(g_src).is_fails()
    assert nlp_check(gamma.base).is_fails()
    assert aperiodicity_check(gamma.base, gamma.anchor).is_fails()


def test_project_prefix(g_src):
    gamma = gamma_construct(g_src, "u")
    x = extend_to_boundary(identity(g_src, "w"), Degree((0, 2)))
    y = gamma_project_prefix(gamma, x)
    assert y.path.graph is gamma.base
    assert y.path.word == x.path.word
    assert y.degree == gamma.pi(x.path.degree)


def test_project_prefix_rejects_dead_words(g_src):
    gamma = gamma_construct(g_src, "u")
    with pytest.raises(UnsupportedDegree):
        gamma_project_prefix(gamma, extend_to_boundary(identity(g_src, "u"), Degree((1, 0))))
    bad = extend_to_boundary(identity(g_src, "u"), Degree((1, 1)))
    with pytest.raises(UnsupportedDegree):
        gamma_project_prefix(gamma, bad)
