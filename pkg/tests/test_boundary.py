from __future__ import annotations

import pytest

from kgraphs import (
    ALL_BRANCHES,
    BoundaryPrefix,
    Degree,
    boundary_prefixes,
    dead_directions,
    extend_to_boundary,
    from_str,
    identity,
    is_boundary_member_bounded,
    shift,
    to_str,
)
from kgraphs.errors import DegreeOutOfRange


def test_prefix_records_stalls(g_src):
    x = BoundaryPrefix(from_str(g_src, "u:e"))
    assert x.dead == frozenset({1})
    assert not x.complete
    assert "dead=1" in str(x)


def test_dead_directions(g_src, g_o2):
    assert dead_directions(g_src, "w") == {1}
    assert dead_directions(g_o2, "v") == set()


def test_extend_reaches_target(g_o2):
    y = extend_to_boundary(identity(g_o2, "v"), Degree((3,)))
    assert y.degree == Degree((3,))
    assert to_str(y.path) == "v:a.a.a"  # least edge id at every step


def test_extend_stalls_at_sources(g_src):
    y = extend_to_boundary(identity(g_src, "w"), Degree((2, 2)))
    # color 1 is dead at w, color 2 keeps going
    assert y.degree == Degree((0, 2))
    assert y.dead == frozenset({1})


def test_extend_target_guard(g_o2):
    lam = from_str(g_o2, "v:a.a")
    with pytest.raises(DegreeOutOfRange):
        extend_to_boundary(lam, Degree((1,)))


def test_extend_all_branches(g_o2):
    ys = extend_to_boundary(identity(g_o2, "v"), Degree((2,)), ALL_BRANCHES)
    assert {to_str(y.path) for y in ys} == {"v:a.a", "v:a.b", "v:b.a", "v:b.b"}


def test_boundary_prefixes_are_saturated(g_2v):
    got = boundary_prefixes(g_2v, "v", Degree((2,)))
    # every prefix either reaches degree 2 or stalls, and none stall here
    assert all(y.degree == Degree((2,)) for y in got)
    assert {to_str(y.path) for y in got} == {"v:p.p", "v:p.c", "v:c.q"}


def test_shift_window(g_o2):
    x = BoundaryPrefix(from_str(g_o2, "v:a.b.a"))
    s = shift(x, Degree((1,)))
    assert to_str(s.path) == "v:b.a"
    with pytest.raises(DegreeOutOfRange):
        shift(x, Degree((4,)))


def test_membership_bounded_accepts_real_prefixes(g_o2):
    x = extend_to_boundary(identity(g_o2, "v"), Degree((3,)))
    v = is_boundary_member_bounded(x, Degree((2,)))
    assert not v.is_fails()


def test_membership_bounded_rejects_avoidable_stall(g_2v):
    # stopping at v while the loop p continues violates the boundary
    # condition: {p, c} is exhaustive at v and the stalled prefix misses both
    x = BoundaryPrefix(identity(g_2v, "v"))
    v = is_boundary_member_bounded(x, Degree((1,)), assume_complete=True)
    assert v.is_fails()
    assert v.certificate["n"] == "(0)"


def test_membership_on_true_complete_path(g_src):
    y = extend_to_boundary(identity(g_src, "u"), Degree((1, 2)))
    v = is_boundary_member_bounded(y, Degree((1, 1)), assume_complete=False)
    assert not v.is_fails()
