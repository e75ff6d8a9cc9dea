import networkx as nx
import pytest

from jsjcube.complex.fixtures import letter_tokens
from jsjcube.complex.validation import validate_complex
from jsjcube.errors import CertificationError, PreconditionError
from jsjcube.opening.decomposition import VertexKind
from jsjcube.opening.surfaces import detect_surface_graph
from jsjcube.relative.complex import CENTRAL, build_relative_complex, central_factor
from jsjcube.relative.family import (
    FreeGroupFamily,
    cyclic_reduce,
    format_letters,
    free_reduce,
    is_conjugate_or_inverse,
    normalize_family,
    same_class,
)
from jsjcube.relative.jsj import certified_complex, relative_jsj
from jsjcube.relative.whitehead import (
    apply_move,
    inverse_move,
    is_whitehead_minimal,
    whitehead_moves,
    whitehead_reduce,
)


def test_family_parsing():
    family = FreeGroupFamily.of(2, "abAB", "aab")
    assert family.words[0] == letter_tokens("abAB")
    assert family.total_length() == 7
    assert str(family) == "F2{abAB, aab}"
    assert format_letters(family.words[1]) == "aab"


def test_family_rejects_foreign_letters():
    with pytest.raises(PreconditionError):
        FreeGroupFamily.of(2, "abc")
    with pytest.raises(PreconditionError):
        FreeGroupFamily.of(2, "a1")


def test_reduction():
    assert free_reduce(letter_tokens("abBA")) == ()
    assert free_reduce(letter_tokens("aAb")) == letter_tokens("b")
    assert cyclic_reduce(letter_tokens("babAB")) == letter_tokens("b")


def test_normalize_keeps_reduced_words():
    family = FreeGroupFamily.of(2, "abAB")
    normalized, report = normalize_family(family)
    assert normalized == family
    assert not report.non_maximal
    assert not report.duplicates


def test_normalize_takes_roots():
    normalized, report = normalize_family(FreeGroupFamily.of(2, "ababab"))
    assert normalized.words == (letter_tokens("ab"),)
    assert report.non_maximal == [0]
    assert report.entry(0).exponent == 3


def test_normalize_merges_inverse_classes():
    normalized, report = normalize_family(FreeGroupFamily.of(2, "ab", "BA", "ba"))
    assert len(normalized.words) == 1
    assert report.duplicates == [1, 2]
    assert report.entry(1).inverted
    assert not report.entry(2).inverted


def test_normalize_rejects_trivial_words():
    with pytest.raises(PreconditionError):
        normalize_family(FreeGroupFamily.of(2, "aA"))


def test_conjugacy():
    assert same_class(letter_tokens("ab"), letter_tokens("Babb"))
    assert is_conjugate_or_inverse(letter_tokens("ab"), letter_tokens("ba")) == (True, 1)
    assert is_conjugate_or_inverse(letter_tokens("ab"), letter_tokens("AB")) == (True, -1)
    assert is_conjugate_or_inverse(letter_tokens("ab"), letter_tokens("aB")) == (False, 0)


def test_whitehead_moves():
    assert len(list(whitehead_moves(2))) == 12
    move = (("b", 1), frozenset({("a", 1)}))
    assert apply_move(move, letter_tokens("a")) == letter_tokens("ab")
    assert apply_move(inverse_move(move), letter_tokens("ab")) == letter_tokens("a")


def test_whitehead_reduce():
    commutator = FreeGroupFamily.of(2, "abAB")
    assert whitehead_reduce(commutator) == commutator
    assert is_whitehead_minimal(commutator)
    assert whitehead_reduce(FreeGroupFamily.of(2, "a")) == FreeGroupFamily.of(2, "a")
    primitive = FreeGroupFamily.of(2, "ab")
    assert not is_whitehead_minimal(primitive)
    assert whitehead_reduce(primitive).total_length() == 1


def test_central_factor():
    assert central_factor(FreeGroupFamily.of(2, "abAB")) == 4
    assert central_factor(FreeGroupFamily.of(2, "aab", "abAB")) == 8
    assert central_factor(FreeGroupFamily.of(2, "a")) == 16


def test_relative_complex_shape():
    X = build_relative_complex(FreeGroupFamily.of(2, "abAB"))
    assert sorted(X.vertex_graphs) == ["central", "circle0", "surface0_1", "surface0_2"]
    assert len(X.tubes) == 3
    assert X.hyperbolic
    assert validate_complex(X).ok
    assert nx.is_tree(nx.Graph(X.underlying_graph()))
    assert detect_surface_graph(X, "surface0_1")
    assert detect_surface_graph(X, "surface0_2")
    assert X.graph(CENTRAL).origin == (CENTRAL,)


def test_relative_complex_of_two_words():
    X = build_relative_complex(FreeGroupFamily.of(2, "abAB", "aab"))
    assert len(X.vertex_graphs) == 7
    assert len(X.tubes) == 6
    assert X.tube("peripheral1").length == 24


def test_commutator_is_certified():
    X, used, reduced = certified_complex(FreeGroupFamily.of(2, "abAB"))
    assert used == FreeGroupFamily.of(2, "abAB")
    assert not reduced


def test_relative_jsj_preconditions():
    with pytest.raises(PreconditionError, match="surjects"):
        relative_jsj(FreeGroupFamily.of(1, "a"))
    with pytest.raises(PreconditionError, match="freely decomposable"):
        relative_jsj(FreeGroupFamily(rank=2))
    with pytest.raises(CertificationError) as info:
        relative_jsj(FreeGroupFamily.of(2, "a"))
    assert info.value.exit_code == 3


@pytest.mark.slow
def test_relative_jsj_of_commutator():
    result = relative_jsj(FreeGroupFamily.of(2, "abAB"), max_word_len=4)
    dg = result.decomposition
    kinds = dg.kinds()
    assert kinds[VertexKind.SURFACE] == 1
    assert kinds[VertexKind.CYCLIC] == 1
    assert list(result.peripheral) == [0]
    assert dg.vertex(result.peripheral[0]).peripheral
    assert not result.whitehead_reduced
    assert result.provenance.command == "relative-jsj"
