import json

import pytest

from jsjcube.complex.fixtures import fix_dcomm, letter_tokens
from jsjcube.errors import InputSyntaxError, ValidationError
from jsjcube.io.gog import emit_gog, parse_gog
from jsjcube.io.loader import load_input, parse_input, sniff
from jsjcube.io.output import (
    OutputFormat,
    emit_model,
    emit_output,
    parse_output,
    to_dot,
)
from jsjcube.io.tgg import emit_tgg, parse_tgg
from jsjcube.opening.assemble import around, circle_graph
from jsjcube.opening.decomposition import (
    DecompositionEdge,
    DecompositionGraph,
    DecompositionVertex,
    VertexKind,
)
from jsjcube.relative.general import GraphOfFreeGroups

from .conftest import D33_GOG, DCOMM_TGG


def _decomposition():
    return DecompositionGraph(
        vertices=[
            DecompositionVertex(id="R", kind=VertexKind.RIGID, members=["R"], rank=2, origin=["A"]),
            DecompositionVertex(
                id="C",
                kind=VertexKind.CYCLIC,
                graphs={"C": circle_graph(2)},
                rank=1,
                origin=["A"],
                peripheral=True,
            ),
        ],
        edges=[
            DecompositionEdge(
                id="e",
                cyclic="C",
                other="R",
                cyclic_graph="C",
                other_graph="R",
                cyclic_word=around(2),
                other_word=letter_tokens("ab"),
            )
        ],
    )


def test_parse_tgg():
    X = parse_tgg(DCOMM_TGG)
    dcomm = fix_dcomm()
    assert X.hyperbolic
    assert sorted(X.vertex_graphs) == ["A", "B"]
    assert len(X.tubes) == 1
    assert X.vertex_graphs == dcomm.vertex_graphs
    assert X.tubes == dcomm.tubes


def test_emit_tgg_parses_back(dcomm):
    X = parse_tgg(emit_tgg(dcomm))
    assert X.vertex_graphs == dcomm.vertex_graphs
    assert X.tubes == dcomm.tubes
    assert emit_tgg(X) == emit_tgg(dcomm)


def test_tgg_notes():
    X = parse_tgg("note a small example\n" + DCOMM_TGG)
    assert X.notes == ("a small example",)
    assert emit_tgg(X).startswith("assert hyperbolic\nnote a small example\n")


@pytest.mark.parametrize(
    "old, new, line, column",
    [
        ("end A a b -a -b", "end A a b -a -z", 14, 16),
        ("vgraph B", "vgraph B!", 8, 8),
        ("tube T 4", "tube T four", 13, 8),
        ("assert hyperbolic", "assert flat", 2, 8),
        ("  e b o o\nendvgraph\nvgraph B", "  e b o p\nendvgraph\nvgraph B", 6, 9),
    ],
)
def test_tgg_syntax_errors(old, new, line, column):
    with pytest.raises(InputSyntaxError) as info:
        parse_tgg(DCOMM_TGG.replace(old, new, 1))
    assert (info.value.line, info.value.column) == (line, column)
    assert info.value.exit_code == 2


def test_tgg_structure_errors():
    with pytest.raises(InputSyntaxError, match="no vertex graphs"):
        parse_tgg("# nothing here\n")
    with pytest.raises(InputSyntaxError, match="not closed"):
        parse_tgg(DCOMM_TGG.replace("endtube\n", ""))
    with pytest.raises(InputSyntaxError, match="unknown keyword"):
        parse_tgg("frobnicate\n")


def test_tgg_validation_errors():
    with pytest.raises(ValidationError) as info:
        parse_tgg(DCOMM_TGG.replace("tube T 4", "tube T 5"))
    assert info.value.exit_code == 2


def test_parse_gog():
    gog = parse_gog(D33_GOG)
    assert [v.name for v in gog.vertices] == ["A", "B"]
    assert gog.edges[0].word_a == letter_tokens("aaabbb")
    assert emit_gog(gog) == D33_GOG


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("v A rank x\n", 1, 10),
        ("v A rank 2\ne t A:abc A:ab\n", 2, 5),
        ("v A rank 2\ne t A:ab Z:ab\n", 2, 10),
        ("v A rank 2\nw\n", 2, 1),
        ("v A rank 2\nv B rank 1\n", 2, 1),
    ],
)
def test_gog_errors(text, line, column):
    with pytest.raises(InputSyntaxError) as info:
        parse_gog(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_sniff_and_load(tmp_path):
    assert sniff(D33_GOG) == "gog"
    assert sniff(DCOMM_TGG) == "tgg"
    assert isinstance(parse_input(D33_GOG), GraphOfFreeGroups)
    with pytest.raises(InputSyntaxError):
        sniff("# only a comment\n")
    path = tmp_path / "x.tgg"
    path.write_bytes(b"\xff\xfe\x00")
    with pytest.raises(InputSyntaxError, match="UTF-8"):
        load_input(path)
    other = tmp_path / "x.txt"
    other.write_text(D33_GOG, encoding="utf-8")
    assert isinstance(load_input(other), GraphOfFreeGroups)


@pytest.mark.parametrize("fmt", list(OutputFormat))
def test_output_round_trip(fmt):
    text = emit_output(_decomposition(), fmt)
    doc = parse_output(text, fmt)
    assert doc.decomposition == _decomposition().canonical()
    assert emit_model(doc, fmt) == text


def test_output_is_sorted():
    data = json.loads(emit_output(_decomposition()))
    assert list(data) == ["decomposition", "provenance"]
    assert [v["id"] for v in data["decomposition"]["vertices"]] == ["C", "R"]
    assert data["decomposition"]["vertices"][0]["peripheral"] is True


def test_empty_document():
    doc = parse_output(emit_output(DecompositionGraph()))
    assert not doc.decomposition.vertices
    assert not doc.decomposition.edges


def test_dot():
    dot = to_dot(_decomposition())
    assert dot.startswith("graph jsj {")
    assert '"C" [shape=circle' in dot
    assert "style=dashed" in dot
    assert '"R" [shape=box' in dot
    assert '"C" -- "R" [label="e"];' in dot
