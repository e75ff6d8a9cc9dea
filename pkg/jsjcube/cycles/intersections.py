from __future__ import annotations

import typing as t

from pydantic import BaseModel

from jsjcube.complex.models import (
    HalfEdge,
    SimpleGraph,
    TubularComplex,
    Word,
    end_half,
    format_word,
    start_half,
)
from jsjcube.cycles.lines import CycleLine
from jsjcube.cycles.records import CycleRecord

SAME = "same"
OPPOSITE = "opposite"


class SelfIntersection(BaseModel):
    """
    A maximal segment shared by two distinct lifts of a primitive cycle: lift A through
    position ``a`` and lift B through position ``b`` of the root, meeting at a vertex.
    Exits are ``(position along the segment, half-edge)``.
    """

    graph: str
    segment: Word
    a: int
    b: int
    direction: str
    a_exits: t.Tuple[t.Tuple[int, HalfEdge], t.Tuple[int, HalfEdge]]
    b_exits: t.Tuple[t.Tuple[int, HalfEdge], t.Tuple[int, HalfEdge]]

    @property
    def length(self) -> int:
        return len(self.segment)

    def __str__(self) -> str:
        seg = format_word(self.segment) or "(vertex)"
        return f"{seg} at {self.a}/{self.b} {self.direction}"


def _exits(line: CycleLine, a: int, b: int, length: int, direction: str):
    a_exits = ((0, end_half(line.token(a - 1))), (length, start_half(line.token(a + length))))
    if direction == SAME:
        b_exits = ((0, end_half(line.token(b - 1))), (length, start_half(line.token(b + length))))
    else:
        b_exits = ((0, start_half(line.token(b))), (length, end_half(line.token(b - length - 1))))
    return a_exits, b_exits


def self_intersection_components(
    X: TubularComplex | SimpleGraph, cycle: CycleRecord
) -> t.List[SelfIntersection]:
    """maximal common segments of distinct lifts of the primitive root, one per projection"""
    graph = X.graph(cycle.graph) if isinstance(X, TubularComplex) else X
    line = CycleLine(cycle.root)
    ell = line.period
    found: t.Dict[t.Tuple, SelfIntersection] = {}

    for a in range(ell):
        for b in range(ell):
            if graph.tail(line.token(a)) != graph.tail(line.token(b)):
                continue
            sb, sf, ob, of = line.common_segment(a, b)
            if sf > 0:
                if a == b or sb > 0 or sf >= ell:
                    continue
                direction, length = SAME, sf
                key = (SAME, min(a, b), max(a, b), length)
            elif of > 0:
                if ob > 0 or of >= ell:
                    continue
                direction, length = OPPOSITE, of
                mirror = ((b - length) % ell, (a + length) % ell, length)
                key = (OPPOSITE,) + min((a, b, length), mirror)
            else:
                if a == b:
                    continue
                halves = {
                    end_half(line.token(a - 1)),
                    start_half(line.token(a)),
                    end_half(line.token(b - 1)),
                    start_half(line.token(b)),
                }
                if len(halves) < 4:
                    continue
                direction, length = SAME, 0
                key = (SAME, min(a, b), max(a, b), 0)
            if key in found:
                continue
            a_exits, b_exits = _exits(line, a, b, length, direction)
            found[key] = SelfIntersection(
                graph=cycle.graph,
                segment=line.tokens(a, length),
                a=a,
                b=b,
                direction=direction,
                a_exits=a_exits,
                b_exits=b_exits,
            )
    return sorted(found.values(), key=lambda s: (s.length, s.direction, s.a, s.b))
