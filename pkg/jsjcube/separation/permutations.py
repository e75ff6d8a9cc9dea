"""Permutations of half-space labels, stored as tuples ``p[i] = image of i``."""

from __future__ import annotations

import itertools
import typing as t

Perm = t.Tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``"""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def power(p: Perm, n: int) -> Perm:
    base = p if n >= 0 else inverse(p)
    out = identity(len(p))
    for _ in range(abs(n)):
        out = compose(base, out)
    return out


def orbits(p: Perm) -> t.List[t.FrozenSet[int]]:
    seen: t.Set[int] = set()
    out = []
    for i in range(len(p)):
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in orbit:
            orbit.append(j)
            j = p[j]
        seen.update(orbit)
        out.append(frozenset(orbit))
    return out


def is_transitive(p: Perm) -> bool:
    return len(orbits(p)) <= 1


def order(p: Perm) -> int:
    n = 1
    q = p
    while q != identity(len(p)):
        q = compose(p, q)
        n += 1
    return n


def setwise_period(p: Perm, subset: t.Iterable[int]) -> int:
    """least ``d >= 1`` with ``p^d(subset) == subset``"""
    subset = frozenset(subset)
    image = subset
    d = 0
    while True:
        image = frozenset(p[i] for i in image)
        d += 1
        if image == subset:
            return d


def proper_subsets(n: int) -> t.Iterator[t.FrozenSet[int]]:
    for size in range(1, n):
        for combo in itertools.combinations(range(n), size):
            yield frozenset(combo)
