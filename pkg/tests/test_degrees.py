from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kgraphs import Degree, iter_degrees_upto, parse_degree
from kgraphs.degrees import OMEGA, ExtDegree
from kgraphs.errors import DegreeError, UnsupportedDegree

degrees = st.integers(min_value=1, max_value=4).flatmap(
    lambda k: st.tuples(*([st.integers(min_value=0, max_value=6)] * k)).map(Degree)
)


def same_rank_pairs():
    return st.integers(min_value=1, max_value=4).flatmap(
        lambda k: st.tuples(
            st.tuples(*([st.integers(min_value=0, max_value=6)] * k)).map(Degree),
            st.tuples(*([st.integers(min_value=0, max_value=6)] * k)).map(Degree),
        )
    )


def test_basics():
    d = Degree((2, 0, 3))
    assert d.rank == 3
    assert d.total == 5
    assert d[1] == 2 and d[3] == 3
    assert str(d) == "(2,0,3)"
    assert Degree.zero(2) == Degree((0, 0))
    assert Degree.unit(3, 2) == Degree((0, 1, 0))


def test_rejects_bad_coordinates():
    with pytest.raises(DegreeError):
        Degree((1, -1))
    with pytest.raises(UnsupportedDegree):
        Degree.unit(2, 3)
    with pytest.raises(UnsupportedDegree):
        Degree((1,))[2]


def test_arithmetic_and_order():
    a, b = Degree((2, 1)), Degree((1, 1))
    assert a + b == Degree((3, 2))
    assert a - b == Degree((1, 0))
    assert b <= a and a >= b
    with pytest.raises(DegreeError):
        b - a
    with pytest.raises(UnsupportedDegree):
        a + Degree((1,))


def test_order_is_partial():
    a, b = Degree((1, 0)), Degree((0, 1))
    assert not a <= b and not b <= a
    assert a.join(b) == Degree((1, 1))
    assert a.meet(b) == Degree((0, 0))


@given(same_rank_pairs())
@settings(deadline=None)
def test_lattice_laws(pair):
    a, b = pair
    assert a.join(b) == b.join(a)
    assert a.meet(b) == b.meet(a)
    assert a.meet(b) <= a <= a.join(b)
    assert a.join(a.meet(b)) == a
    assert a.meet(a.join(b)) == a


@given(same_rank_pairs(), st.integers(min_value=0, max_value=5))
@settings(deadline=None)
def test_shift_distributes_over_meet(pair, c):
    a, b = pair
    shift = Degree((c,) * a.rank)
    assert (a + shift).meet(b + shift) == a.meet(b) + shift
    assert (a + shift).join(b + shift) == a.join(b) + shift


@given(same_rank_pairs())
@settings(deadline=None)
def test_join_minus_parts_recompose(pair):
    a, b = pair
    top = a.join(b)
    assert (top - a) + a == top
    assert a + b - b == a


def test_iter_degrees_upto_is_the_grid():
    got = iter_degrees_upto(Degree((2, 1)))
    assert len(got) == 6
    assert got[0] == Degree((0, 0))
    assert got[-1] == Degree((2, 1))
    totals = [d.total for d in got]
    assert totals == sorted(totals)


@given(degrees)
@settings(deadline=None)
def test_parse_roundtrip(d):
    assert parse_degree(str(d)) == d


def test_parse_forms():
    assert parse_degree("0,1") == Degree((0, 1))
    assert parse_degree("(3)") == Degree((3,))
    assert parse_degree("()") == Degree(())
    with pytest.raises(DegreeError):
        parse_degree("(a,b)")


def test_ext_degree_omega_dominates():
    fin = ExtDegree.of(Degree((1, 2)))
    assert fin.components == (1, 2)
    assert repr(OMEGA) == "OMEGA"
