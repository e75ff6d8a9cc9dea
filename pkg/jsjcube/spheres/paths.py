from __future__ import annotations

import typing as t

from pydantic import BaseModel, ConfigDict

from jsjcube.complex.models import TubularComplex, Word, inverse_token
from jsjcube.complex.square import SignedEdge, SquareComplex, as_square_complex
from jsjcube.errors import PreconditionError


class ImmersedPath(BaseModel):
    """An edge path in one vertex graph. An empty path needs ``start``."""

    model_config = ConfigDict(frozen=True)

    graph: str
    word: Word = ()
    start: str | None = None
    cyclic: bool = False

    def tokens(self) -> t.Tuple[SignedEdge, ...]:
        return vertical_tokens(self.graph, self.word)


def vertical_tokens(graph: str, word: Word) -> t.Tuple[SignedEdge, ...]:
    return tuple((("V", graph, e), s) for e, s in word)


def is_immersed(tokens: t.Sequence[SignedEdge], cyclic: bool = False) -> bool:
    n = len(tokens)
    pairs = range(n if cyclic and n > 1 else max(n - 1, 0))
    return all(tokens[(i + 1) % n] != inverse_token(tokens[i]) for i in pairs)


def check_path(sc: SquareComplex, tokens: t.Sequence[SignedEdge], cyclic: bool = False) -> None:
    """raise unless ``tokens`` is a connected immersed path (closed if ``cyclic``)"""
    for tok in tokens:
        if tok[0] not in sc.edges:
            raise PreconditionError(f"unknown edge {tok[0]!r} in path")
    for a, b in zip(tokens, tokens[1:]):
        if sc.head(a) != sc.tail(b):
            raise PreconditionError("path is not connected")
    if cyclic:
        if not tokens or sc.head(tokens[-1]) != sc.tail(tokens[0]) or len(tokens) < 2:
            raise PreconditionError("not a cyclic path")
    if not is_immersed(tokens, cyclic):
        raise PreconditionError("path is not immersed")


def resolve_path(
    X: TubularComplex | SquareComplex, path: ImmersedPath | t.Sequence[SignedEdge]
) -> t.Tuple[SquareComplex, t.Tuple[SignedEdge, ...]]:
    sc = as_square_complex(X)
    tokens = path.tokens() if isinstance(path, ImmersedPath) else tuple(path)
    return sc, tokens
