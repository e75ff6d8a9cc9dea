from __future__ import annotations

from math import comb

from memoization import cached
from pydantic import BaseModel

from jsjcube.errors import BoundOverflowError, PreconditionError

MACHINE_MAX = 2**63 - 1


class LengthBound(BaseModel):
    threshold: int
    """cycles at least this long are k-repetitive once UC-separating"""
    M: int
    cap: int
    """enumeration cap F * M"""


@cached(max_size=4096)
def partition_count(lam: int, mu: int) -> int:
    """ordered partitions of a ``lam``-set into ``mu`` non-empty blocks"""
    if lam < 0 or mu < 0:
        raise PreconditionError("partition_count takes non-negative arguments")
    if mu > lam:
        return 0
    if mu == 0:
        return 1 if lam == 0 else 0
    return sum(comb(lam, r) * partition_count(lam - r, mu - 1) for r in range(1, lam - mu + 2))


def repetitive_length_bound(E: int, F: int, k: int, strict: bool = True) -> LengthBound:
    """
    ``threshold = E(k-1) 2^{F(F+1)/2} + 1`` and ``M = 2E 2^{F(F+1)/2}``, with cap ``F M``.

    ``strict`` refuses values beyond a signed 64-bit integer.
    """
    if E < 1 or F < 1 or k < 1:
        raise PreconditionError(f"bound needs E, F, k >= 1, got E={E} F={F} k={k}")
    power = 2 ** (F * (F + 1) // 2)
    bound = LengthBound(
        threshold=E * (k - 1) * power + 1,
        M=2 * E * power,
        cap=F * 2 * E * power,
    )
    if strict and max(bound.threshold, bound.cap) > MACHINE_MAX:
        raise BoundOverflowError(max(bound.threshold, bound.cap).bit_length())
    return bound
