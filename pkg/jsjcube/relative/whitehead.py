from __future__ import annotations

import itertools
import typing as t

from loguru import logger

from jsjcube.complex.models import Token, Word, inverse_token
from jsjcube.cycles.words import canonical
from jsjcube.relative.family import FreeGroupFamily, cyclic_reduce, letters

WhiteheadMove = t.Tuple[Token, t.FrozenSet[Token]]


def whitehead_moves(rank: int) -> t.Iterator[WhiteheadMove]:
    """Whitehead automorphisms of the second kind, as (multiplier v, set Y of letters)"""
    gens = letters(rank)
    for x in gens:
        for v in ((x, 1), (x, -1)):
            others = [(y, s) for y in gens if y != x for s in (1, -1)]
            for n in range(1, len(others) + 1):
                for chosen in itertools.combinations(others, n):
                    yield v, frozenset(chosen)


def apply_move(move: WhiteheadMove, word: Word) -> Word:
    """x -> v^-1 x if x^-1 in Y, then x -> x v if x in Y; v itself is fixed"""
    v, Y = move
    out: t.List[Token] = []
    for tok in word:
        if tok[0] == v[0]:
            out.append(tok)
            continue
        positive = (tok[0], 1)
        image = []
        if inverse_token(positive) in Y:
            image.append(inverse_token(v))
        image.append(positive)
        if positive in Y:
            image.append(v)
        out.extend(image if tok[1] > 0 else [inverse_token(x) for x in reversed(image)])
    return cyclic_reduce(out)


def whitehead_reduce(family: FreeGroupFamily) -> FreeGroupFamily:
    """apply length-reducing Whitehead moves to the whole family until none exists"""
    words = [cyclic_reduce(w) for w in family.words]
    total = sum(len(w) for w in words)
    steps = 0
    improved = True
    while improved:
        improved = False
        for move in whitehead_moves(family.rank):
            image = [apply_move(move, w) for w in words]
            length = sum(len(w) for w in image)
            if length < total:
                words, total = image, length
                steps += 1
                improved = True
                break
    if steps:
        logger.debug(f"whitehead_reduce: {steps} moves, total length {family.total_length()} -> {total}")
    return FreeGroupFamily(rank=family.rank, words=tuple(canonical(w) for w in words))


def is_whitehead_minimal(family: FreeGroupFamily) -> bool:
    total = sum(len(cyclic_reduce(w)) for w in family.words)
    return all(
        sum(len(apply_move(move, w)) for w in family.words) >= total
        for move in whitehead_moves(family.rank)
    )


def inverse_move(move: WhiteheadMove) -> WhiteheadMove:
    """the move undoing ``move``: same set, inverse multiplier"""
    v, Y = move
    return inverse_token(v), Y
