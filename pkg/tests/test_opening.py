import networkx as nx
import pytest

from jsjcube.complex.fixtures import rose
from jsjcube.complex.models import AttachingCycle, Tube, TubularComplex
from jsjcube.complex.square import euler_characteristic
from jsjcube.complex.subdivision import subdivided_graph
from jsjcube.complex.validation import validate_complex
from jsjcube.cycles.records import normalize_cycle
from jsjcube.errors import ClosedSurfaceError, GluingError, PreconditionError
from jsjcube.opening.assemble import (
    around,
    circle_graph,
    collapse_surface_chains,
    decomposition_of,
    finish_decomposition,
    piece_rank,
    prune_surjective_leaves,
)
from jsjcube.opening.decomposition import (
    DecompositionEdge,
    DecompositionGraph,
    DecompositionVertex,
    VertexKind,
)
from jsjcube.opening.dual_tree import build_dual_tree, dual_tree_at
from jsjcube.opening.iterate import build_X_doubleprime
from jsjcube.opening.open import open_along
from jsjcube.opening.pipeline import jsj
from jsjcube.opening.surfaces import detect_surface_graph
from jsjcube.separation.classify import splitting_cycle_list
from jsjcube.separation.halfspace import halfspace_labels

PIECE = subdivided_graph(rose(2), 2)


def _vertex(vid, kind, peripheral=False, length=4):
    graph = circle_graph(length) if kind == VertexKind.CYCLIC else PIECE
    return DecompositionVertex(
        id=vid,
        kind=kind,
        members=[] if kind == VertexKind.CYCLIC else [vid],
        graphs={vid: graph},
        rank=graph.rank,
        origin=[vid],
        peripheral=peripheral,
    )


def _edge(eid, cyclic, other, length=4):
    return DecompositionEdge(
        id=eid,
        cyclic=cyclic,
        other=other,
        cyclic_graph=cyclic,
        other_graph=other,
        cyclic_word=around(length),
        other_word=around(length),
    )


def _chain(peripheral=False):
    return DecompositionGraph(
        vertices=[
            _vertex("S1", VertexKind.SURFACE),
            _vertex("C", VertexKind.CYCLIC, peripheral=peripheral),
            _vertex("S2", VertexKind.SURFACE),
        ],
        edges=[_edge("e1", "C", "S1"), _edge("e2", "C", "S2")],
    )


def _two_circles(word_a, word_b):
    return TubularComplex(
        vertex_graphs={"C1": circle_graph(3), "C2": circle_graph(3)},
        tubes=(
            Tube(
                id="T",
                length=len(word_a),
                end_a=AttachingCycle(target="C1", word=word_a),
                end_b=AttachingCycle(target="C2", word=word_b),
            ),
        ),
    )


def test_tube_between_circles_is_removed():
    X = build_X_doubleprime(_two_circles(around(3), around(3)))
    assert list(X.vertex_graphs) == ["C2"]
    assert not X.tubes
    assert X.origin("C2") == ("C1", "C2")


def test_tube_covering_both_circles_twice():
    with pytest.raises(GluingError, match="covers both more than once"):
        build_X_doubleprime(_two_circles(around(3) * 2, around(3) * 2))


def test_collapse_surface_chain():
    dg, collapsed = collapse_surface_chains(_chain())
    assert collapsed == 1
    assert [v.id for v in dg.vertices] == ["S1"]
    merged = dg.vertex("S1")
    assert merged.kind == VertexKind.SURFACE
    assert merged.members == ["S1", "S2"]
    assert set(merged.graphs) == {"S1", "C", "S2"}
    assert merged.rank == piece_rank(merged.graphs.values())
    assert not dg.edges


def test_closed_surface_after_collapse():
    with pytest.raises(ClosedSurfaceError):
        finish_decomposition(_chain())


def test_peripheral_vertex_is_kept():
    dg, collapsed = collapse_surface_chains(_chain(peripheral=True))
    assert collapsed == 0
    assert len(dg.vertices) == 3
    assert not dg.violations()


def test_collapse_needs_degree_one():
    dg = _chain()
    dg.edges[0] = _edge("e1", "C", "S1", length=2)
    with pytest.raises(GluingError):
        collapse_surface_chains(dg)


def test_collapse_needs_seam_covered_once():
    dg = _chain()
    dg.edges[1] = dg.edges[1].model_copy(update={"cyclic_word": (("k0", 1),) * 4})
    with pytest.raises(GluingError, match="once around its seam with surface S2"):
        collapse_surface_chains(dg)


def test_seam_word_repeating_an_edge_is_not_pruned():
    dg = DecompositionGraph(
        vertices=[_vertex("R", VertexKind.RIGID), _vertex("C", VertexKind.CYCLIC)],
        edges=[_edge("e", "C", "R").model_copy(update={"cyclic_word": (("k1", 1),) * 4})],
    )
    assert len(prune_surjective_leaves(dg).vertices) == 2


def test_tube_between_cyclic_graphs_is_rejected():
    X = _two_circles(around(3), around(3))
    with pytest.raises(GluingError, match="joins cyclic graphs C1 and C2"):
        decomposition_of(X)
    loop = TubularComplex(
        vertex_graphs={"C": circle_graph(3)},
        tubes=(
            Tube(
                id="T",
                length=3,
                end_a=AttachingCycle(target="C", word=around(3)),
                end_b=AttachingCycle(target="C", word=around(3)),
            ),
        ),
    )
    with pytest.raises(GluingError) as info:
        decomposition_of(loop)
    assert info.value.details == {"tube": "T", "end_a": "C", "end_b": "C"}


def test_prune_surjective_leaf():
    dg = DecompositionGraph(
        vertices=[_vertex("R", VertexKind.RIGID), _vertex("C", VertexKind.CYCLIC)],
        edges=[_edge("e", "C", "R")],
    )
    pruned = prune_surjective_leaves(dg)
    assert [v.id for v in pruned.vertices] == ["R"]
    assert not pruned.edges


def test_violations():
    dg = DecompositionGraph(
        vertices=[_vertex("R", VertexKind.RIGID), _vertex("Q", VertexKind.RIGID)],
        edges=[_edge("e", "Q", "R")],
    )
    assert dg.violations() == ["edge e: Q is not cyclic"]
    with pytest.raises(GluingError):
        finish_decomposition(dg)


def test_surface_detection(dcomm, d33):
    assert detect_surface_graph(dcomm, "A")
    assert not detect_surface_graph(d33, "A")


def test_closed_surfaces_have_no_jsj(dcomm, g2):
    for X in (dcomm, g2):
        with pytest.raises(ClosedSurfaceError) as info:
            jsj(X)
        assert info.value.exit_code == 4


@pytest.mark.slow
def test_open_along_tube_cycle(dcomm):
    cycle = normalize_cycle(dcomm.tube("T").end_a.word, graph="A", carrier=dcomm.graph("A"))
    result = open_along(dcomm, cycle)
    assert result.K == 2
    assert result.complex.graph(result.circle).is_circle()
    assert euler_characteristic(result.complex) == euler_characteristic(dcomm)
    assert validate_complex(result.complex).ok


@pytest.mark.slow
def test_jsj_of_double(d33):
    result = jsj(d33, max_cycle_len=12)
    dg = result.decomposition
    kinds = dg.kinds()
    assert kinds[VertexKind.CYCLIC] == 1
    assert kinds[VertexKind.SURFACE] == 0
    assert len(dg.vertices) == 3
    (cyclic,) = [v for v in dg.vertices if v.kind == VertexKind.CYCLIC]
    assert dg.degree(cyclic.id) == 2
    assert result.provenance.max_cycle_len == 12
    assert result.provenance.truncated


def _lines_in_a_row():
    # three parallel lifts; each sees the others on the side away from its neighbour
    return {(0, 1): 1, (0, 2): 1, (1, 0): 0, (1, 2): 1, (2, 0): 0, (2, 1): 0}


def test_dual_tree_of_parallel_lifts():
    tree = build_dual_tree(("A", "o"), (0, 3, 5), 2, _lines_in_a_row())
    assert tree.black_count == 3
    assert tree.white_count == 3 * 2 - 3 + 1
    assert tree.white[1] == frozenset({(0, 1), (1, 0)})
    assert nx.is_tree(tree.tree)
    assert all(u[0] != v[0] for u, v in tree.tree.edges())
    assert [tree.tree.degree(("black", i)) for i in range(3)] == [2, 2, 2]
    assert tree.vector(1) == (1, 0, 0)
    assert tree.find_white((1, 0, 0)) == 1
    assert tree.white_of(2, 0) == tree.white_of(1, 1)
    assert tree.line_index(5) == 2


def test_dual_tree_of_one_lift():
    tree = build_dual_tree(("V", "A", "a/0"), (4,), 3, {})
    assert tree.white_count == 3
    assert tree.tree.degree(("black", 0)) == 3


def test_dual_tree_rejects_too_many_regions():
    m = {(0, 1): 0, (0, 2): 1, (1, 0): 0, (1, 2): 1, (2, 0): 0, (2, 1): 1}
    with pytest.raises(GluingError, match="do not form a tree") as info:
        build_dual_tree(("A", "o"), (0, 1, 2), 2, m)
    assert info.value.details == {"lifts": 3, "K": 2, "regions": 6}


def test_dual_tree_needs_a_cell_on_the_cycle(dcomm):
    cycle = normalize_cycle(dcomm.tube("T").end_a.word, graph="A", carrier=dcomm.graph("A"))
    with pytest.raises(PreconditionError):
        dual_tree_at(dcomm, cycle, ("B", "o"))


def _cells(X, cycle):
    graph = X.graph(cycle.graph)
    vertices = sorted({graph.tail(tok) for tok in cycle.root})
    edges = sorted({e for e, _ in cycle.root})
    return [(cycle.graph, v) for v in vertices] + [("V", cycle.graph, e) for e in edges]


@pytest.mark.slow
@pytest.mark.parametrize("name", ["dcomm", "d33"])
def test_short_splitting_cycles_open_cleanly(request, name):
    X = request.getfixturevalue(name)
    found = splitting_cycle_list(X, max_len=8)
    assert found.cycles
    for cycle in found.cycles:
        labeling = halfspace_labels(X, cycle)
        for cell in _cells(X, cycle):
            tree = dual_tree_at(X, cycle, cell, labeling=labeling)
            assert nx.is_tree(tree.tree)
            assert nx.is_bipartite(tree.tree)
            assert all(u[0] != v[0] for u, v in tree.tree.edges())
            assert all(tree.tree.degree(("black", i)) == labeling.K for i in range(tree.black_count))
            assert tree.white_count == tree.black_count * (labeling.K - 1) + 1
        result = open_along(X, cycle)
        assert result.K == labeling.K
        assert euler_characteristic(result.complex) == euler_characteristic(X)
        assert validate_complex(result.complex).ok
