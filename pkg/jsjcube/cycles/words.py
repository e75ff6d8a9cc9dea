"""Cyclic words of signed edge tokens."""

from __future__ import annotations

import typing as t

from jsjcube.complex.models import Token, Word, inverse_token


def token_key(tok: Token) -> t.Tuple[str, int]:
    # positive letters sort before their inverses
    return (tok[0], -tok[1])


def word_key(word: t.Sequence[Token]) -> t.Tuple:
    return tuple(token_key(tok) for tok in word)


def inverse_word(word: t.Sequence[Token]) -> Word:
    return tuple(inverse_token(tok) for tok in reversed(word))


def rotate(word: t.Sequence[Token], k: int) -> Word:
    if not word:
        return ()
    k %= len(word)
    return tuple(word[k:]) + tuple(word[:k])


def rotations(word: t.Sequence[Token]) -> t.List[Word]:
    return [rotate(word, k) for k in range(len(word))]


def canonical(word: t.Sequence[Token]) -> Word:
    """least rotation of the word or of its inverse"""
    if not word:
        return ()
    return min(rotations(word) + rotations(inverse_word(word)), key=word_key)


def primitive_root(word: t.Sequence[Token]) -> t.Tuple[Word, int]:
    """(root, exponent) with ``word == root * exponent`` and ``root`` not a proper power"""
    n = len(word)
    word = tuple(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d], n // d
    return word, 1


def is_cyclically_immersed(word: t.Sequence[Token]) -> bool:
    n = len(word)
    if n == 0:
        return False
    if n == 1:
        return True
    return all(word[(i + 1) % n] != inverse_token(word[i]) for i in range(n))
