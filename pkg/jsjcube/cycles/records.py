from __future__ import annotations

import typing as t

from pydantic import BaseModel, ConfigDict

from jsjcube.complex.models import SimpleGraph, Word, format_word
from jsjcube.cycles.words import canonical, is_cyclically_immersed, primitive_root, rotate
from jsjcube.errors import PreconditionError
from jsjcube.spheres.paths import ImmersedPath


class CycleRecord(BaseModel):
    """A vertical cycle in one vertex graph, in canonical form."""

    model_config = ConfigDict(frozen=True)

    graph: str
    word: Word
    root: Word
    exponent: int = 1
    domain_start: int = 0
    """rotation of ``word`` used as the fundamental domain"""

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def root_length(self) -> int:
        return len(self.root)

    @property
    def domain(self) -> Word:
        return rotate(self.word, self.domain_start)

    def path(self) -> ImmersedPath:
        return ImmersedPath(graph=self.graph, word=self.domain, cyclic=True)

    def root_record(self) -> CycleRecord:
        return CycleRecord(graph=self.graph, word=self.root, root=self.root)

    def with_domain(self, start: int) -> CycleRecord:
        return CycleRecord(
            graph=self.graph,
            word=self.word,
            root=self.root,
            exponent=self.exponent,
            domain_start=start % max(self.length, 1),
        )

    def __str__(self) -> str:
        text = f"{self.graph}: {format_word(self.root)}"
        return text if self.exponent == 1 else f"{text} ^{self.exponent}"


def normalize_cycle(
    word: t.Sequence, graph: str = "", carrier: SimpleGraph | None = None
) -> CycleRecord:
    """canonical form, primitive root and exponent of an immersed cyclic word"""
    word = tuple(tuple(tok) for tok in word)
    if not is_cyclically_immersed(word):
        raise PreconditionError(f"not an immersed cycle: {format_word(word)}")
    if carrier is not None:
        for tok, nxt in zip(word, word[1:] + word[:1]):
            if carrier.head(tok) != carrier.tail(nxt):
                raise PreconditionError(f"not a closed path in {graph}: {format_word(word)}")
    word = canonical(word)
    root, exponent = primitive_root(word)
    return CycleRecord(graph=graph, word=word, root=root, exponent=exponent)


def power_of(cycle: CycleRecord, n: int) -> CycleRecord:
    if n < 1:
        raise PreconditionError(f"power must be positive, got {n}")
    return CycleRecord(
        graph=cycle.graph,
        word=cycle.word * n,
        root=cycle.root,
        exponent=cycle.exponent * n,
        domain_start=cycle.domain_start,
    )
