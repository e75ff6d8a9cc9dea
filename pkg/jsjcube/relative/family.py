"""Finite families of cyclic words in a free group of finite rank."""

from __future__ import annotations

import typing as t

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from jsjcube.complex.fixtures import GENERATORS, letter_tokens
from jsjcube.complex.models import Word, inverse_token
from jsjcube.cycles.words import canonical, inverse_word, primitive_root
from jsjcube.errors import PreconditionError


def letters(rank: int) -> t.List[str]:
    return list(GENERATORS[:rank])


def format_letters(word: t.Iterable[t.Tuple[str, int]]) -> str:
    """a b a^-1 b^-1 -> ``"abAB"``"""
    return "".join(e if s > 0 else e.upper() for e, s in word)


def free_reduce(word: t.Sequence[t.Tuple[str, int]]) -> Word:
    out: t.List[t.Tuple[str, int]] = []
    for tok in word:
        if out and out[-1] == inverse_token(tok):
            out.pop()
        else:
            out.append(tuple(tok))
    return tuple(out)


def cyclic_reduce(word: t.Sequence[t.Tuple[str, int]]) -> Word:
    word = list(free_reduce(word))
    while len(word) > 1 and word[0] == inverse_token(word[-1]):
        word = word[1:-1]
    return tuple(word)


class FreeGroupFamily(BaseModel):
    """A free group of rank ``rank`` on a, b, c, ... and a list of cyclic words in it."""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(ge=1)
    words: t.Tuple[Word, ...] = ()

    @field_validator("words", mode="before")
    @classmethod
    def _parse_letters(cls, v):
        return tuple(letter_tokens(w) if isinstance(w, str) else tuple(map(tuple, w)) for w in v)

    @model_validator(mode="after")
    def _check_letters(self):
        allowed = set(letters(self.rank))
        for word in self.words:
            for e, _ in word:
                if e not in allowed:
                    raise PreconditionError(
                        f"letter {e!r} is not a generator of the free group of rank {self.rank}"
                    )
        return self

    @classmethod
    def of(cls, rank: int, *words: str) -> FreeGroupFamily:
        return cls(rank=rank, words=words)

    def total_length(self) -> int:
        return sum(len(w) for w in self.words)

    def __str__(self) -> str:
        return f"F{self.rank}{{{', '.join(format_letters(w) for w in self.words)}}}"


class NormalizedWord(BaseModel):
    index: int
    """position in the input family"""
    class_index: int
    """position of its conjugacy class in the normalized family"""
    exponent: int
    """the input word is conjugate to this power of the class representative"""
    inverted: bool = False

    @property
    def maximal(self) -> bool:
        return self.exponent == 1


class NormalizationReport(BaseModel):
    entries: t.List[NormalizedWord] = Field(default_factory=list)

    @property
    def non_maximal(self) -> t.List[int]:
        return [entry.index for entry in self.entries if not entry.maximal]

    @property
    def duplicates(self) -> t.List[int]:
        seen, out = set(), []
        for entry in self.entries:
            if entry.class_index in seen:
                out.append(entry.index)
            seen.add(entry.class_index)
        return out

    def entry(self, index: int) -> NormalizedWord:
        return self.entries[index]


def normalize_family(family: FreeGroupFamily) -> t.Tuple[FreeGroupFamily, NormalizationReport]:
    """primitive roots of the cyclically reduced words, one per conjugacy class up to inversion"""
    classes: t.Dict[Word, int] = {}
    reps: t.List[Word] = []
    report = NormalizationReport()
    for index, raw in enumerate(family.words):
        word = cyclic_reduce(raw)
        if not word:
            raise PreconditionError(f"word {index} of {family} is trivial")
        root, exponent = primitive_root(canonical(word))
        key = canonical(root)
        if key not in classes:
            classes[key] = len(reps)
            reps.append(key)
        class_index = classes[key]
        # the class representative may be conjugate to the inverse of the input word
        inverted = word not in _rotations_of(key * exponent)
        report.entries.append(NormalizedWord(index=index, class_index=class_index, exponent=exponent, inverted=inverted))
    normalized = FreeGroupFamily(rank=family.rank, words=tuple(reps))
    if report.non_maximal or report.duplicates:
        logger.debug(
            f"normalized {family} to {normalized}: non-maximal {report.non_maximal}, "
            f"duplicates {report.duplicates}"
        )
    return normalized, report


def _rotations_of(word: Word) -> t.Set[Word]:
    return {word[k:] + word[:k] for k in range(len(word))}


def same_class(first: Word, second: Word) -> bool:
    return canonical(cyclic_reduce(first)) == canonical(cyclic_reduce(second))


def is_conjugate_or_inverse(first: Word, second: Word) -> t.Tuple[bool, int]:
    """(same class, +1 if conjugate or -1 if conjugate to the inverse)"""
    a, b = cyclic_reduce(first), cyclic_reduce(second)
    if b in _rotations_of(a):
        return True, 1
    if inverse_word(b) in _rotations_of(a):
        return True, -1
    return False, 0
