"""Small named complexes used in documentation, tests and the relative construction."""

from __future__ import annotations

import typing as t

from jsjcube.complex.models import (
    AttachingCycle,
    SimpleGraph,
    Tube,
    TubularComplex,
    Word,
)
from jsjcube.complex.square import SquareComplex, grid_patch
from jsjcube.complex.subdivision import make_loop_free
from jsjcube.errors import PreconditionError

GENERATORS = "abcdefghijklmnopqrstuvwxyz"
GENUS_TWO_BOUNDARY = "abABcdCD"


def letter_tokens(text: str) -> Word:
    """``"abAB"`` -> a b a^-1 b^-1 as edge tokens of a rose"""
    out = []
    for ch in text:
        if ch.lower() not in GENERATORS:
            raise PreconditionError(f"not a generator letter: {ch!r}")
        out.append((ch.lower(), 1 if ch.islower() else -1))
    return tuple(out)


def rose(rank: int, origin: t.Tuple[str, ...] = ()) -> SimpleGraph:
    """one vertex ``o`` with ``rank`` loops named a, b, c, ..."""
    if not 0 <= rank <= len(GENERATORS):
        raise PreconditionError(f"unsupported rose rank {rank}")
    return SimpleGraph(
        vertices=("o",),
        edges={GENERATORS[i]: ("o", "o") for i in range(rank)},
        origin=origin,
    )


def double_along(graph: SimpleGraph, words: t.Sequence[Word], name: str = "S") -> TubularComplex:
    """two copies of ``graph`` joined by one tube per word, attached by the word on both sides"""
    twin = f"{name}'"
    tubes = tuple(
        Tube(
            id=f"d{i}",
            length=len(word),
            end_a=AttachingCycle(target=name, word=tuple(word)),
            end_b=AttachingCycle(target=twin, word=tuple(word)),
        )
        for i, word in enumerate(words)
    )
    return TubularComplex(vertex_graphs={name: graph, twin: graph}, tubes=tubes)


def double_of_word(rank: int, word: str, raw: bool = False) -> TubularComplex:
    """the double of a rose along one letter word, as graphs ``A`` and ``B`` and tube ``T``"""
    tokens = letter_tokens(word)
    X = TubularComplex(
        vertex_graphs={"A": rose(rank), "B": rose(rank)},
        tubes=(
            Tube(
                id="T",
                length=len(tokens),
                end_a=AttachingCycle(target="A", word=tokens),
                end_b=AttachingCycle(target="B", word=tokens),
            ),
        ),
    )
    return X if raw else make_loop_free(X)


def genus_two_template() -> t.Tuple[SimpleGraph, Word]:
    """rose(a, b, c, d) with the boundary word of a genus-two surface with one boundary circle"""
    return rose(4), letter_tokens(GENUS_TWO_BOUNDARY)


def fix_dcomm(raw: bool = False) -> TubularComplex:
    return double_of_word(2, "abAB", raw=raw)


def fix_d33(raw: bool = False) -> TubularComplex:
    return double_of_word(2, "aaabbb", raw=raw)


def fix_g2(raw: bool = False) -> TubularComplex:
    return double_of_word(4, GENUS_TWO_BOUNDARY, raw=raw)


def fix_grid33() -> SquareComplex:
    return grid_patch(3, 3)
