from collections import Counter
from itertools import combinations, product

import networkx as nx
import pytest

from jsjcube.complex.brady_meier import brady_meier_check
from jsjcube.complex.fixtures import double_of_word, letter_tokens, rose
from jsjcube.complex.models import AttachingCycle, Tube, TubularComplex, inverse_token
from jsjcube.complex.subdivision import make_loop_free
from jsjcube.errors import GluingError, PreconditionError
from jsjcube.spheres.builders import (
    orthogonal_sphere,
    quotient_sphere,
    regular_sphere,
    vertex_sphere,
)
from jsjcube.spheres.paths import ImmersedPath, vertical_tokens
from jsjcube.spheres.splice import identify_nodes, self_splice, splice


def _edges(g):
    return Counter(frozenset((a, b)) for a, b in g.edges())


def _same_graph(g, h):
    assert set(g.nodes) == set(h.nodes)
    assert _edges(g) == _edges(h)


def immersed_paths(sc, max_len, graph=None):
    """every immersed vertical path of length 1 to ``max_len``, optionally inside one graph"""
    vertical = sorted(e for e in sc.edges if e[0] == "V" and graph in (None, e[1]))
    tokens = [(e, s) for e in vertical for s in (1, -1)]
    frontier = [(tok,) for tok in tokens]
    while frontier:
        yield from frontier
        frontier = [
            path + (tok,)
            for path in frontier
            if len(path) < max_len
            for tok in tokens
            if sc.tail(tok) == sc.head(path[-1]) and tok != inverse_token(path[-1])
        ]


def _assert_splice_matches(X, path):
    direct = regular_sphere(X, path)
    spliced = regular_sphere(X, path, method="splice")
    _same_graph(direct.graph, spliced.graph)
    assert direct.component_count == spliced.component_count


@pytest.mark.parametrize("v", [("A", "o"), ("A", "a/m1"), ("B", "b/m1")])
def test_vertex_spheres_are_connected(dcomm, d33, v):
    for X in (dcomm, d33):
        sphere = vertex_sphere(X, v)
        assert sphere.is_connected()
        assert not sphere.cut_points()


def test_empty_path_is_a_vertex_sphere(dcomm):
    sphere = regular_sphere(dcomm, ImmersedPath(graph="A", start="o"))
    _same_graph(sphere.graph, vertex_sphere(dcomm, ("A", "o")).graph)
    with pytest.raises(PreconditionError):
        regular_sphere(dcomm, ImmersedPath(graph="A"))


def test_splice_matches_direct_gluing(dcomm, d33):
    for X in (dcomm, d33):
        for path in immersed_paths(X.squares, 4, graph="A"):
            _assert_splice_matches(X, path)


def test_splice_matches_direct_gluing_on_grid(grid33):
    paths = list(immersed_paths(grid33, 12))
    assert max(len(p) for p in paths) == 3
    assert len(paths) == 2 * 4 * (3 + 2 + 1)
    for path in paths:
        _assert_splice_matches(grid33, path)


@pytest.mark.slow
@pytest.mark.parametrize("length", range(5, 13))
def test_splice_matches_direct_gluing_on_long_paths(dcomm, d33, length):
    for X in (dcomm, d33):
        for path in immersed_paths(X.squares, length, graph="A"):
            if len(path) == length:
                _assert_splice_matches(X, path)


@pytest.mark.parametrize("power", [1, 2])
def test_quotient_splice_matches_direct(dcomm, d33, power):
    for X in (dcomm, d33):
        cycle = ImmersedPath(graph="A", word=X.tube("T").end_a.word, cyclic=True)
        direct = quotient_sphere(X, cycle, power=power)
        spliced = quotient_sphere(X, cycle, power=power, method="splice")
        _same_graph(direct.graph, spliced.graph)
        assert direct.component_count == spliced.component_count
        if X is dcomm and power == 1:
            assert direct.component_count == 2


def test_orthogonal_sphere_of_tube_cycle(dcomm):
    tokens = vertical_tokens("A", dcomm.tube("T").end_a.word)
    assert orthogonal_sphere(dcomm, tokens).component_count == 2


def test_rejects_broken_paths(dcomm):
    with pytest.raises(PreconditionError):
        regular_sphere(dcomm, ImmersedPath(graph="A", word=(("a/0", 1), ("b/0", 1))))
    with pytest.raises(PreconditionError):
        regular_sphere(dcomm, ImmersedPath(graph="A", word=(("a/0", 1), ("a/0", -1))))


def test_identify_nodes_merges_provenance():
    g = nx.MultiGraph()
    g.add_node("x", prov=frozenset({"x"}))
    g.add_node("y", prov=frozenset({"y"}))
    g.add_node("z", prov=frozenset({"z"}))
    g.add_edge("x", "z")
    merged = identify_nodes(g, [("x", "y")])
    assert merged.number_of_nodes() == 2
    assert any(data["prov"] == frozenset({"x", "y"}) for _, data in merged.nodes(data=True))


def test_splice_glues_neighbours():
    g1 = nx.MultiGraph([("c", "x"), ("c", "y")])
    g2 = nx.MultiGraph([("d", "u"), ("d", "w"), ("u", "w")])
    glued = splice(g1, "c", ["x", "y"], g2, "d", ["u", "w"])
    assert set(glued.nodes) == {"x", "y"}
    assert glued.number_of_edges() == 1


def test_splice_rejects_bad_labelling():
    g1 = nx.MultiGraph([("c", "x"), ("c", "y")])
    g2 = nx.MultiGraph([("d", "u")])
    with pytest.raises(GluingError):
        splice(g1, "c", ["x", "y"], g2, "d", ["u"])
    with pytest.raises(GluingError):
        splice(g1, "c", ["x"], g2, "d", ["u"])


def test_self_splice():
    g = nx.MultiGraph([("c1", "x"), ("c1", "y"), ("c2", "u"), ("c2", "w"), ("x", "w")])
    glued = self_splice(g, "c1", ["x", "y"], "c2", ["u", "w"])
    assert glued.number_of_nodes() == 2
    assert glued.number_of_edges() == 1
    with pytest.raises(GluingError):
        self_splice(g, "c1", ["x", "y"], "c1", ["x", "y"])
    g.add_edge("c1", "c2")
    with pytest.raises(GluingError):
        self_splice(g, "c1", ["x", "y", "c2"], "c2", ["u", "w", "c1"])


def _cyclic_words(letters, max_len):
    """one word per rotation class of cyclically reduced words up to ``max_len``"""
    seen = set()
    for n in range(1, max_len + 1):
        for chars in product(letters, repeat=n):
            word = "".join(chars)
            if any(word[i] == word[(i + 1) % n].swapcase() for i in range(n)):
                continue
            key = min(word[i:] + word[:i] for i in range(n))
            if key not in seen:
                seen.add(key)
                yield key


def _mixed_tube(word_a, word_b):
    return make_loop_free(
        TubularComplex(
            vertex_graphs={"A": rose(2), "B": rose(2)},
            tubes=(
                Tube(
                    id="T",
                    length=len(word_a),
                    end_a=AttachingCycle(target="A", word=letter_tokens(word_a)),
                    end_b=AttachingCycle(target="B", word=letter_tokens(word_b)),
                ),
            ),
        )
    )


def _small_complexes():
    words = list(_cyclic_words("abAB", 4))
    corpus = [double_of_word(2, w) for w in words]
    for n in (1, 2):
        same = [w for w in words if len(w) == n]
        corpus += [_mixed_tube(u, w) for u, w in combinations(same, 2)]
    return corpus


def _midpoint_sphere(sc, edge):
    # both ends of the edge joined through the centre of every square on it
    g = nx.Graph()
    g.add_nodes_from([("end", 0), ("end", 1)])
    for n in range(len(sc.occurrences[edge])):
        g.add_edge(("end", 0), ("square", n))
        g.add_edge(("square", n), ("end", 1))
    return g


def _sphere_condition(X):
    sc = X.squares
    for v in sc.vertices:
        sphere = vertex_sphere(sc, v)
        if not sphere.is_connected() or sphere.cut_points():
            return False
    for edge in sc.edges:
        g = _midpoint_sphere(sc, edge)
        if not nx.is_connected(g) or list(nx.articulation_points(g)):
            return False
    return True


def test_brady_meier_matches_sphere_condition():
    corpus = _small_complexes()
    assert len(corpus) >= 50
    assert all(X.square_count <= 20 for X in corpus)
    verdicts = []
    for X in corpus:
        ok, _ = brady_meier_check(X)
        assert ok == _sphere_condition(X), X.tube("T")
        verdicts.append(ok)
    assert any(verdicts) and not all(verdicts)
