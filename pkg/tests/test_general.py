import pytest

from jsjcube.complex.fixtures import letter_tokens
from jsjcube.errors import PreconditionError
from jsjcube.opening.assemble import around, circle_graph
from jsjcube.opening.decomposition import VertexKind
from jsjcube.relative.general import (
    GogEdge,
    GogVertex,
    GraphOfFreeGroups,
    _Absorption,
    general_jsj,
    letter_power,
    power_of_word,
    unit_power,
    unit_word,
)


def _gog(vertices, edges=()):
    return GraphOfFreeGroups(
        vertices=tuple(GogVertex(name=n, rank=r) for n, r in vertices),
        edges=tuple(GogEdge(id=i, a=a, word_a=wa, b=b, word_b=wb) for i, a, wa, b, wb in edges),
    )


def test_graph_of_free_groups():
    gog = _gog([("A", 2), ("B", 2), ("C", 1)], [("t", "A", "aaabbb", "B", "ab"), ("u", "B", "abAB", "C", "aa")])
    assert gog.vertex("C").cyclic
    assert not gog.vertex("A").cyclic
    assert gog.edges[0].word_a == letter_tokens("aaabbb")
    assert [(e.id, side) for e, side in gog.ends_at("B")] == [("t", 1), ("u", 0)]
    assert gog.to_networkx().number_of_edges() == 2
    with pytest.raises(KeyError):
        gog.vertex("Z")


@pytest.mark.parametrize(
    "vertices, edges, message",
    [
        ([("A", 2), ("A", 1)], [], "duplicate vertex"),
        ([("A", 0)], [], "rank"),
        ([("A", 2)], [("t", "A", "ab", "Z", "a")], "unknown vertex"),
        ([("A", 2), ("B", 1)], [("t", "A", "aA", "B", "a")], "trivial word"),
        ([("A", 2), ("B", 1)], [("t", "A", "ab", "B", "b")], "exceed the rank"),
        ([("A", 2), ("B", 1)], [], "not connected"),
        (
            [("A", 2), ("B", 1)],
            [("t", "A", "ab", "B", "a"), ("t", "A", "ab", "B", "a")],
            "duplicate edge",
        ),
    ],
)
def test_graph_of_free_groups_rejects(vertices, edges, message):
    with pytest.raises(PreconditionError, match=message):
        _gog(vertices, edges)


def test_powers():
    assert unit_word((-1, 2)) == (("k0", -1), ("k0", -1))
    assert unit_power(unit_word((-1, 2))) == (-1, 2)
    assert power_of_word(circle_graph(3), around(3) * 2) == (1, 2)
    assert letter_power(letter_tokens("AAA")) == (-1, 3)
    assert letter_power(letter_tokens("aaAa")) == (1, 2)


def test_absorption_follows_chains():
    absorbed = _Absorption()
    absorbed.identify("e", ("x", (1, 1)), ("y", (-1, 3)))
    assert absorbed.resolve("x") == ("y", (-1, 3))
    absorbed.identify("f", ("y", (1, 1)), ("z", (1, 2)))
    assert absorbed.resolve("x") == ("z", (-1, 6))
    assert absorbed.resolve("z") == ("z", (1, 1))


def test_absorption_rejects_non_hyperbolic_edges():
    absorbed = _Absorption()
    absorbed.identify("e", ("x", (1, 1)), ("y", (1, 2)))
    with pytest.raises(PreconditionError, match="into itself"):
        absorbed.identify("f", ("x", (1, 1)), ("y", (1, 1)))
    with pytest.raises(PreconditionError, match="degrees"):
        absorbed.identify("g", ("y", (1, 2)), ("z", (1, 3)))


def test_cyclic_vertices_only():
    gog = _gog([("A", 1), ("B", 1)], [("t", "A", "a", "B", "aa")])
    with pytest.raises(PreconditionError, match="every vertex group is cyclic"):
        general_jsj(gog)


def test_free_vertex_without_edges():
    with pytest.raises(PreconditionError, match="freely decomposable"):
        general_jsj(_gog([("A", 2)]))


@pytest.mark.slow
def test_general_jsj_of_double():
    gog = _gog([("A", 2), ("B", 2)], [("t", "A", "aaabbb", "B", "aaabbb")])
    result = general_jsj(gog, max_word_len=6)
    dg = result.decomposition
    assert len(dg.vertices) == 3
    kinds = dg.kinds()
    assert kinds[VertexKind.CYCLIC] == 1
    assert kinds[VertexKind.RIGID] == 2
    (cyclic,) = [v for v in dg.vertices if v.kind == VertexKind.CYCLIC]
    assert dg.degree(cyclic.id) == 2
    assert not cyclic.peripheral
    assert result.provenance.command == "general-jsj"
    assert result.provenance.cycles == ["A: aaabbb", "B: aaabbb"]
