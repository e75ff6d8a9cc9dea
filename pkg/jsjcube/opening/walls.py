"""
Relative position of the lifts of a splitting cycle through one vertex of the cover.

A lift through the vertex is named by its anchor: the position of the vertex on it,
in ``[0, l)``. Labels always refer to the parametrisation that puts the vertex at the
anchor.
"""

from __future__ import annotations

import typing as t

from jsjcube.complex.models import HalfEdge, SimpleGraph, TubularComplex, Word, end_half, start_half
from jsjcube.complex.square import Half, SquareKey
from jsjcube.errors import GluingError
from jsjcube.separation.halfspace import HalfspaceLabeling, segment_labels
from jsjcube.spheres.builders import token_corners
from jsjcube.spheres.sphere import SphereGraph, corner_key


def vertex_anchors(graph: SimpleGraph, root: Word, u: str) -> t.List[int]:
    return [q for q, tok in enumerate(root) if graph.tail(tok) == u]


def edge_anchors(root: Word, e: str) -> t.List[int]:
    """anchors, at the tail of ``e``, of the lifts that run along ``e``"""
    ell = len(root)
    return [q for q in range(ell) if root[q] == (e, 1) or root[(q - 1) % ell] == (e, -1)]


def head_position(root: Word, q: int, e: str) -> int:
    """where the lift anchored at ``q`` on the tail of ``e`` meets the head of ``e``"""
    return q + 1 if root[q % len(root)] == (e, 1) else q - 1


def vertical_half(graph: str, half: HalfEdge) -> Half:
    return (("V", graph, half[0]), half[1])


def _label_of(seg: SphereGraph, labels: t.Dict[int, int], node) -> int | None:
    if node is None:
        return None
    return labels.get(seg.labels[node])


def containing_halfspace(X: TubularComplex, labeling: HalfspaceLabeling, a: int, b: int) -> int:
    """label of the half-space of the lift anchored at ``a`` that holds the lift anchored at ``b``"""
    line = labeling.line
    sb, sf, ob, of = line.common_segment(a, b)
    if ob + of > 0:
        start, length = a - ob, ob + of
        pb = b + ob
        exits = ((0, start_half(line.token(pb))), (length, end_half(line.token(pb - length - 1))))
    else:
        start, length = a - sb, sb + sf
        pb = b - sb
        exits = ((0, end_half(line.token(pb - 1))), (length, start_half(line.token(pb + length))))
    seg, labels = segment_labels(X, labeling, start, length)
    found = {
        _label_of(seg, labels, seg.half_node(pos, vertical_half(labeling.graph, half)))
        for pos, half in exits
    }
    if None in found:
        raise GluingError(f"lift at {b} leaves the segment at {start} through a cut point")
    if len(found) != 1:
        raise GluingError(f"lifts anchored at {a} and {b} cross")
    return found.pop()


def half_labels(
    X: TubularComplex, labeling: HalfspaceLabeling, anchor: int, halves: t.Iterable[HalfEdge]
) -> t.Dict[HalfEdge, int]:
    """half-space of the lift anchored at ``anchor`` holding each half-edge off the lift"""
    seg, labels = segment_labels(X, labeling, anchor, 0)
    out = {}
    for half in halves:
        label = _label_of(seg, labels, seg.half_node(0, vertical_half(labeling.graph, half)))
        if label is None:
            raise GluingError(f"half-edge {half} lies on the lift anchored at {anchor}")
        out[half] = label
    return out


def square_labels(
    X: TubularComplex,
    labeling: HalfspaceLabeling,
    anchor: int,
    e: str,
    corners: t.Iterable[t.Tuple[SquareKey, int]],
) -> t.Dict[t.Tuple[SquareKey, int], int]:
    """half-space of the lift running along ``e`` holding each square ``(sq, side)`` at ``e``"""
    root = labeling.root
    forward = root[anchor % len(root)] == (e, 1)
    start = anchor if forward else anchor - 1
    tok = (("V", labeling.graph, e), 1 if forward else -1)
    seg, labels = segment_labels(X, labeling, start, 1)
    sc = X.squares
    out = {}
    for sq, k in corners:
        tail, _ = token_corners(sc, tok, sq, k)
        label = _label_of(seg, labels, seg.node_of(corner_key(0, sq, tail)))
        if label is None:
            raise GluingError(f"square {sq} at {e} is not on the sphere of the lift")
        out[(sq, k)] = label
    return out
