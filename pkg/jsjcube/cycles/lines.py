"""
Lifts of a cycle as bi-infinite periodic edge sequences.

Position ``x`` of a line is its ``x``-th vertex; the token leaving it is ``word[x mod l]``
and the token arriving at it is ``word[(x - 1) mod l]``.
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass

from jsjcube.complex.models import SimpleGraph, Token, Word, inverse_token


@dataclass(frozen=True)
class CycleLine:
    word: Word

    @property
    def period(self) -> int:
        return len(self.word)

    def token(self, x: int) -> Token:
        """the token from position ``x`` to ``x + 1``"""
        return self.word[x % self.period]

    def tokens(self, start: int, length: int) -> Word:
        return tuple(self.token(start + j) for j in range(length))

    def common_segment(self, a: int, b: int) -> t.Tuple[int, int, int, int]:
        """
        Overlap of the lift through position ``a`` with the lift through position ``b``,
        both passing the same vertex.

        Returns ``(same_back, same_forward, opp_back, opp_forward)``: how far the two lifts
        agree behind and ahead of the vertex when the second runs the same way, and when
        it runs the opposite way. Each extent stops at one period.
        """
        ell = self.period
        sf = sb = of = ob = 0
        while sf < ell and self.token(a + sf) == self.token(b + sf):
            sf += 1
        while sb < ell and self.token(a - 1 - sb) == self.token(b - 1 - sb):
            sb += 1
        while of < ell and self.token(a + of) == inverse_token(self.token(b - 1 - of)):
            of += 1
        while ob < ell and self.token(a - 1 - ob) == inverse_token(self.token(b + ob)):
            ob += 1
        return sb, sf, ob, of

    def occurrences(self, graph: SimpleGraph, cell: str, kind: str = "vertex") -> t.List[int]:
        """positions of the cell along one period: vertex positions, or positions of tokens on an edge"""
        if kind == "vertex":
            return [x for x in range(self.period) if graph.tail(self.token(x)) == cell]
        return [x for x in range(self.period) if self.token(x)[0] == cell]
