from __future__ import annotations

import typing as t
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict

from jsjcube.complex.models import end_half, start_half
from jsjcube.complex.square import EdgeKey, SignedEdge
from jsjcube.cover.ball import Ball
from jsjcube.cycles.lines import CycleLine
from jsjcube.cycles.records import CycleRecord
from jsjcube.errors import GluingError, PreconditionError, RadiusError
from jsjcube.separation.crossing import CrossingInstance
from jsjcube.separation.halfspace import HalfspaceLabeling, segment_labels
from jsjcube.spheres.paths import vertical_tokens

Cell = t.Union[int, t.Tuple[int, EdgeKey]]


@dataclass(frozen=True)
class LiftedLine:
    """A lift of a cycle's root, developed inside a ball in both directions."""

    cycle: CycleRecord
    anchor: int
    """position on the line of ``vertices[anchor_index]``"""
    anchor_index: int
    vertices: t.Tuple[int, ...]

    @property
    def line(self) -> CycleLine:
        return CycleLine(self.cycle.root)

    def position(self, i: int) -> int:
        return self.anchor + i - self.anchor_index

    def token(self, i: int) -> SignedEdge:
        """the token leaving ``vertices[i]``, as a signed edge of the square complex"""
        return vertical_tokens(self.cycle.graph, (self.line.token(self.position(i)),))[0]

    def index_of(self, v: int) -> int | None:
        try:
            return self.vertices.index(v)
        except ValueError:
            return None


def _develop_line(ball: Ball, cycle: CycleRecord, start: int, q: int) -> LiftedLine:
    root = cycle.root_record()
    tokens = vertical_tokens(root.graph, root.root)
    ell = len(tokens)
    forward, backward = [start], []
    x, pos = start, q
    while len(forward) <= len(ball.proj):
        y = ball.step(x, start_half(tokens[pos % ell]))
        if y is None:
            break
        forward.append(y)
        x, pos = y, pos + 1
    x, pos = start, q
    while len(backward) <= len(ball.proj):
        y = ball.step(x, end_half(tokens[(pos - 1) % ell]))
        if y is None:
            break
        backward.append(y)
        x, pos = y, pos - 1
    return LiftedLine(
        cycle=root,
        anchor=q,
        anchor_index=len(backward),
        vertices=tuple(reversed(backward)) + tuple(forward),
    )


def lifts_through(ball: Ball, cycle: CycleRecord, cell: Cell) -> t.List[LiftedLine]:
    """
    The lifts of the cycle through a ball vertex, or through a ball edge given as
    ``(tail vertex, edge)``, one per occurrence of the projected cell in the root.
    """
    tokens = vertical_tokens(cycle.graph, cycle.root)
    if isinstance(cell, int):
        if cell not in ball.proj:
            raise PreconditionError(f"vertex {cell} is not in the ball")
        v = ball.proj[cell]
        occurrences = [(x, cell) for x, tok in enumerate(tokens) if ball.sc.tail(tok) == v]
    else:
        tail, edge = cell
        head = ball.step(tail, (edge, 0)) if tail in ball.proj else None
        if head is None:
            raise PreconditionError(f"edge {edge} at vertex {tail} is not in the ball")
        occurrences = [
            (x, tail if tok[1] > 0 else head) for x, tok in enumerate(tokens) if tok[0] == edge
        ]
    if not occurrences:
        raise PreconditionError(f"{cell!r} does not project onto {cycle}")
    return [_develop_line(ball, cycle, start, x) for x, start in occurrences]


class SegmentSides(BaseModel):
    model_config = ConfigDict(frozen=True)

    relation: str
    """``disjoint``, ``equal`` or ``segment``"""
    instance: CrossingInstance | None = None
    start: int | None = None
    """position on the first line where the shared segment begins"""
    length: int = 0
    b_labels: t.Tuple[int | None, int | None] | None = None
    """half-spaces of the first line holding the second line's two exits"""


def segment_and_sides(
    ball: Ball,
    first: LiftedLine,
    second: LiftedLine,
    labeling: HalfspaceLabeling | None = None,
) -> SegmentSides:
    common = set(first.vertices) & set(second.vertices)
    if not common:
        return SegmentSides(relation="disjoint")
    if set(first.vertices) == set(second.vertices):
        return SegmentSides(relation="equal")

    idx = sorted(first.index_of(v) for v in common)
    i0, i1 = idx[0], idx[-1]
    if idx != list(range(i0, i1 + 1)):
        raise GluingError("two lifted lines meet in a disconnected set")
    j0, j1 = second.index_of(first.vertices[i0]), second.index_of(first.vertices[i1])
    last1, last2 = len(first.vertices) - 1, len(second.vertices) - 1
    if i0 == 0 or i1 == last1 or min(j0, j1) == 0 or max(j0, j1) == last2:
        raise RadiusError(
            "the shared segment of two lifts reaches the boundary of the ball",
            details={"radius": ball.radius},
        )

    length = i1 - i0
    tokens = tuple(first.token(i) for i in range(i0, i1))
    a_exits = ((0, end_half(first.token(i0 - 1))), (length, start_half(first.token(i1))))
    if j1 >= j0:
        b_exits = ((0, end_half(second.token(j0 - 1))), (length, start_half(second.token(j1))))
    else:
        b_exits = ((0, start_half(second.token(j0))), (length, end_half(second.token(j1 - 1))))
    vertex = ball.proj[first.vertices[i0]] if not tokens else None
    instance = CrossingInstance(tokens=tokens, vertex=vertex, a_exits=a_exits, b_exits=b_exits)

    b_labels = None
    if labeling is not None:
        seg, labels = segment_labels(ball.sc, labeling, first.position(i0), length)
        found = []
        for pos, half in b_exits:
            node = seg.half_node(pos, half)
            found.append(None if node is None else labels.get(seg.labels[node]))
        b_labels = tuple(found)
    return SegmentSides(
        relation="segment",
        instance=instance,
        start=first.position(i0),
        length=length,
        b_labels=b_labels,
    )
