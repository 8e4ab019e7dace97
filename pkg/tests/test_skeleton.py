from __future__ import annotations

import pytest

from kgraphs import KGraph, dumps, loads
from kgraphs.errors import (
    DupError,
    EmptyGraph,
    HexagonViolation,
    InvalidSquare,
    MissingSquare,
    NonBijectiveFlip,
    ParseError,
    RefError,
)
from kgraphs.generate import generate_kgraph

from mutations import copy_flip_target, drop_square, swap_flip_targets

TORUS = """\
kgraph 1
rank 2
vertex v
edge e 1 v v
edge f 2 v v
square e f = f e
"""


def test_loads_torus():
    g = loads(TORUS).validate()
    assert g.rank == 2
    assert g.vertices == {"v"}
    assert set(g.edges) == {"e", "f"}
    assert g.edge("e").color == 1
    assert g.flip_fwd[("e", "f")] == ("f", "e")


def test_dumps_roundtrip(graphs):
    for name, g in graphs.items():
        again = loads(dumps(g)).validate()
        assert again.rank == g.rank, name
        assert again.vertices == g.vertices
        assert again.edges == g.edges
        assert again.squares == g.squares


def test_parse_errors():
    with pytest.raises(ParseError):
        loads("rank 2\n")
    with pytest.raises(ParseError):
        loads("kgraph 1\nvertex v\n")  # rank must come first
    with pytest.raises(ParseError):
        loads("kgraph 1\nrank 2\nedge e 1 v\n")
    with pytest.raises(ParseError):
        loads("kgraph 1\nrank 2\nwhat v\n")
    with pytest.raises(DupError):
        loads("kgraph 1\nrank 1\nvertex v\nvertex v\n")
    with pytest.raises(DupError):
        loads(TORUS + "square e f = f e\n")
    with pytest.raises(RefError):
        loads("kgraph 1\nrank 1\nvertex v\nedge e 1 v w\n")
    with pytest.raises(RefError):
        loads("kgraph 1\nrank 2\nvertex v\nedge e 1 v v\nsquare e f = f e\n")


def test_comments_and_blank_lines():
    g = loads("# header comment\nkgraph 1\nrank 1\n\nvertex v # trailing\n").validate()
    assert g.vertices == {"v"}


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraph):
        loads("kgraph 1\nrank 1\n").validate()


def test_square_shape_errors():
    # left side must ascend in color
    bad = "kgraph 1\nrank 2\nvertex v\nedge e 1 v v\nedge f 2 v v\nsquare f e = e f\n"
    with pytest.raises(InvalidSquare):
        loads(bad).validate()
    # sides must share range and source
    bad2 = (
        "kgraph 1\nrank 2\nvertex u\nvertex w\n"
        "edge e 1 u w\nedge f 2 w w\nedge f2 2 u u\nedge e2 1 u u\n"
        "square e f = f2 e2\n"
    )
    with pytest.raises(InvalidSquare):
        loads(bad2).validate()


def test_missing_square():
    bad = "kgraph 1\nrank 2\nvertex v\nedge e 1 v v\nedge f 2 v v\n"
    with pytest.raises(MissingSquare):
        loads(bad).validate()


def test_nonbijective_flip():
    bad = (
        "kgraph 1\nrank 2\nvertex v\n"
        "edge e 1 v v\nedge f1 2 v v\nedge f2 2 v v\n"
        "square e f1 = f1 e\nsquare e f2 = f1 e\n"
    )
    with pytest.raises(NonBijectiveFlip):
        loads(bad).validate()


def test_validate_is_idempotent(graphs):
    g = graphs["g_flip"]
    assert g.validate() is g


def test_require_validated_guards():
    g = loads(TORUS)
    with pytest.raises(Exception):
        g.require_validated()


def test_structural_queries(g_src):
    assert g_src.vertex_ids() == ["u", "w"]
    assert g_src.dead_colors("w") == {1}
    assert g_src.dead_colors("u") == set()
    assert g_src.reachable("u") == {"u", "w"}
    assert g_src.reachable("w") == {"w"}
    assert sorted(g_src.edges_with_range("u", 2)) == ["g_u"]
    assert sorted(g_src.edges_with_source("w", 1)) == ["e"]


def test_mutations_trip_the_right_axiom():
    g2 = generate_kgraph(4, 2, 4, 3)
    m = drop_square(g2)
    assert m is not None
    with pytest.raises(MissingSquare):
        m.validate()
    m = copy_flip_target(g2)
    assert m is not None
    with pytest.raises(NonBijectiveFlip):
        m.validate()

    g3 = generate_kgraph(51, 3, 4, 3)
    assert any(_hexagon_breaks(m) for m in swap_flip_targets(g3))


def _hexagon_breaks(m: KGraph) -> bool:
    try:
        m.validate()
    except HexagonViolation:
        return True
    except (MissingSquare, NonBijectiveFlip, InvalidSquare):
        return False
    return False


def test_corpus_validates(corpus):
    for seed, g in corpus:
        assert g.rank in (1, 2)
        assert len(g.vertices) <= 4
        g.validate()
