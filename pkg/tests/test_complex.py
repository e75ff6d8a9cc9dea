import pytest

from jsjcube.complex.brady_meier import brady_meier_check, is_closed_surface
from jsjcube.complex.fixtures import letter_tokens, rose
from jsjcube.complex.models import AttachingCycle, SimpleGraph, Tube, TubularComplex
from jsjcube.complex.square import euler_characteristic, link_of, square_complex, thickness_of
from jsjcube.complex.subdivision import (
    make_loop_free,
    subdivide,
    subdivide_edges,
    subdivide_graphs,
    subdivide_word,
)
from jsjcube.complex.validation import ViolationCode, validate_complex
from jsjcube.errors import PreconditionError, UnknownCellError, ValidationError


def _single_tube(graph: SimpleGraph, word, length=None, target="A") -> TubularComplex:
    return TubularComplex(
        vertex_graphs={"A": graph, "B": graph},
        tubes=(
            Tube(
                id="T",
                length=len(word) if length is None else length,
                end_a=AttachingCycle(target=target, word=tuple(word)),
                end_b=AttachingCycle(target="B", word=tuple(word)),
            ),
        ),
    )


def test_dcomm_counts(dcomm):
    assert sorted(dcomm.vertex_graphs) == ["A", "B"]
    assert dcomm.graph("A").vertices == ("o", "a/m1", "b/m1")
    assert dcomm.vertical_edge_count == 8
    assert dcomm.square_count == 8
    assert dcomm.max_thickness == 2
    assert euler_characteristic(dcomm) == -2
    assert euler_characteristic(dcomm.squares) == -2


def test_d33_thickness(d33):
    assert thickness_of(d33, ("A", "a/0")) == 3
    assert thickness_of(d33, ("B", "b/1")) == 3


def test_loop_free_complex_is_valid(dcomm, d33, g2):
    for X in (dcomm, d33, g2):
        assert validate_complex(X).ok


def test_raw_rose_is_not_simplicial(dcomm_raw):
    report = validate_complex(dcomm_raw)
    assert ViolationCode.NON_SIMPLICIAL in report.codes()
    with pytest.raises(ValidationError):
        report.raise_for_violations()


def test_parallel_edges_are_not_simplicial():
    graph = SimpleGraph(vertices=("u", "v"), edges={"e": ("u", "v"), "f": ("u", "v")})
    X = _single_tube(graph, (("e", 1), ("f", -1)))
    report = validate_complex(X)
    assert not report.ok
    assert ViolationCode.NON_SIMPLICIAL in report.codes()
    assert ViolationCode.NON_SIMPLICIAL not in validate_complex(make_loop_free(X)).codes()


def test_make_loop_free_bisects_once(dcomm_raw):
    X = make_loop_free(dcomm_raw)
    assert X.square_count == 2 * dcomm_raw.square_count
    assert X.tube("T").end_a.word == subdivide_word(letter_tokens("abAB"), 2)
    assert make_loop_free(X) is X


def test_unknown_target():
    graph = make_loop_free(_single_tube(rose(2), letter_tokens("abAB"))).graph("A")
    X = _single_tube(graph, subdivide_word(letter_tokens("abAB"), 2), target="Z")
    assert ViolationCode.UNKNOWN_REFERENCE in validate_complex(X).codes()


def test_length_mismatch(dcomm):
    word = dcomm.tube("T").end_a.word
    X = _single_tube(dcomm.graph("A"), word, length=len(word) + 1)
    assert ViolationCode.LENGTH_MISMATCH in validate_complex(X).codes()


def test_backtracking_word(dcomm):
    word = (("a/0", 1), ("a/1", 1), ("a/1", -1), ("a/0", -1))
    X = _single_tube(dcomm.graph("A"), word)
    assert ViolationCode.NOT_IMMERSION in validate_complex(X).codes()


def test_open_word(dcomm):
    word = (("a/0", 1), ("b/0", 1))
    X = _single_tube(dcomm.graph("A"), word)
    assert ViolationCode.NOT_CLOSED in validate_complex(X).codes()


def test_disconnected_underlying_graph(dcomm):
    X = TubularComplex(vertex_graphs={"A": dcomm.graph("A"), "B": dcomm.graph("B")})
    assert ViolationCode.DISCONNECTED in validate_complex(X).codes()


def test_disconnected_vertex_graph():
    graph = SimpleGraph(vertices=("p", "q"))
    X = TubularComplex(vertex_graphs={"A": graph})
    assert ViolationCode.DISCONNECTED_VERTEX_GRAPH in validate_complex(X).codes()


def test_unknown_cells(dcomm):
    with pytest.raises(UnknownCellError):
        dcomm.graph("Z")
    with pytest.raises(UnknownCellError):
        dcomm.tube("Z")
    with pytest.raises(UnknownCellError):
        dcomm.graph("A").edge("z")


def test_subdivide_edges(dcomm):
    with pytest.raises(PreconditionError, match="joins graphs subdivided by 3 and 1"):
        subdivide_edges(dcomm, "A", 3)
    X = subdivide_graphs(dcomm, {"A": 3, "B": 3})
    assert X.tube("T").length == 24
    assert len(X.graph("A").edges) == 3 * len(dcomm.graph("A").edges)
    assert validate_complex(X).ok
    assert subdivide_edges(dcomm, "A", 1) == dcomm


def test_square_complex(dcomm):
    sc = square_complex(dcomm)
    assert len(sc.vertices) == 6
    assert len(sc.edges) == 16
    assert len(sc.squares) == 8
    assert sc.max_thickness == 2


def test_links(dcomm, grid33):
    inner = link_of(grid33, ("grid", "1,1"))
    assert (inner.number_of_nodes(), inner.number_of_edges()) == (4, 4)
    corner = link_of(grid33, ("grid", "0,0"))
    assert (corner.number_of_nodes(), corner.number_of_edges()) == (2, 1)
    at_o = link_of(dcomm, ("A", "o"))
    assert (at_o.number_of_nodes(), at_o.number_of_edges()) == (8, 8)


def test_cubical_subdivision(dcomm_raw, grid33):
    once = subdivide(dcomm_raw, 1)
    assert once.square_count == 16
    assert euler_characteristic(once) == euler_characteristic(dcomm_raw)
    assert len(subdivide(grid33, 1).squares) == 36
    assert euler_characteristic(subdivide(grid33, 1)) == 1
    with pytest.raises(PreconditionError):
        subdivide(grid33, -1)


def test_brady_meier(dcomm, d33):
    assert brady_meier_check(dcomm) == (True, None)
    assert brady_meier_check(d33) == (True, None)


def test_brady_meier_witness():
    X = make_loop_free(_single_tube(rose(2), letter_tokens("ab")))
    ok, witness = brady_meier_check(X)
    assert not ok
    assert witness.reason


def test_closed_surface(dcomm, d33, grid33):
    assert is_closed_surface(dcomm)
    assert not is_closed_surface(d33)
    assert not is_closed_surface(grid33)
