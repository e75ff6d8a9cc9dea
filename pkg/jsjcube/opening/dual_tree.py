"""
Trees dual to the walls through one cell of the cover.

Each lift of a splitting cycle through the cell (a black vertex) cuts a neighbourhood
of the cell into its K half-spaces. Regions of the complement of all the lifts are
the white vertices; the region on side ``k`` of lift ``i`` is written ``(i, k)``.
Two such pairs name the same region exactly when each lift lies on the side of the
other given by the pair, and no third lift separates them.
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass, field

import networkx as nx
from loguru import logger
from networkx.utils import UnionFind

from jsjcube.complex.models import TubularComplex
from jsjcube.cover.ball import develop_ball
from jsjcube.cover.lifts import lifts_through, segment_and_sides
from jsjcube.cycles.records import CycleRecord
from jsjcube.errors import GluingError, PreconditionError
from jsjcube.opening.walls import containing_halfspace, edge_anchors, vertex_anchors
from jsjcube.separation.halfspace import HalfspaceLabeling, halfspace_labels

Side = t.Tuple[int, int]
Backend = t.Literal["word", "ball"]


@dataclass(eq=False)
class DualTree:
    cell: t.Tuple[str, ...]
    anchors: t.Tuple[int, ...]
    """anchor of each black vertex, at the cell's vertex (the tail, for an edge)"""
    K: int
    m: t.Dict[t.Tuple[int, int], int]
    """``m[i, j]``: side of lift ``i`` holding lift ``j``"""
    white: t.List[t.FrozenSet[Side]]
    tree: nx.Graph = field(repr=False)

    @property
    def black_count(self) -> int:
        return len(self.anchors)

    @property
    def white_count(self) -> int:
        return len(self.white)

    def line_index(self, anchor: int) -> int:
        return self.anchors.index(anchor)

    def white_of(self, i: int, k: int) -> int:
        for w, sides in enumerate(self.white):
            if (i, k) in sides:
                return w
        raise GluingError(f"side {k} of lift {i} is in no region")

    def vector(self, w: int) -> t.Tuple[int, ...]:
        """side of every lift on which region ``w`` lies"""
        sides = dict(self.white[w])
        i = min(sides)
        return tuple(sides[l] if l in sides else self.m[l, i] for l in range(self.black_count))

    def find_white(self, vector: t.Sequence[int]) -> int:
        vector = tuple(vector)
        for w in range(self.white_count):
            if self.vector(w) == vector:
                return w
        raise GluingError(f"no region of the tree at {self.cell} has sides {vector}")


def build_dual_tree(cell, anchors: t.Sequence[int], K: int, m: t.Dict[t.Tuple[int, int], int]) -> DualTree:
    n = len(anchors)
    uf = UnionFind((i, k) for i in range(n) for k in range(K))
    for i in range(n):
        for j in range(i + 1, n):
            if all(m[l, i] == m[l, j] for l in range(n) if l not in (i, j)):
                uf.union((i, m[i, j]), (j, m[j, i]))
    white = sorted((frozenset(s) for s in uf.to_sets()), key=min)

    tree = nx.Graph()
    tree.add_nodes_from(("black", i) for i in range(n))
    for w, sides in enumerate(white):
        tree.add_node(("white", w))
        for i, _ in sides:
            tree.add_edge(("black", i), ("white", w))

    if len(white) != n * K - n + 1 or not nx.is_tree(tree):
        raise GluingError(
            f"walls at {cell} do not form a tree",
            details={"lifts": n, "K": K, "regions": len(white)},
        )
    if any(tree.degree(("black", i)) != K for i in range(n)):
        raise GluingError(f"a lift at {cell} does not have {K} sides")
    return DualTree(cell=tuple(cell), anchors=tuple(anchors), K=K, m=m, white=white, tree=tree)


def _word_relation(X, labeling, anchors):
    return {
        (i, j): containing_halfspace(X, labeling, a, b)
        for i, a in enumerate(anchors)
        for j, b in enumerate(anchors)
        if i != j
    }


def _ball_relation(X, labeling, vertex, anchors, radius):
    ball = develop_ball(X, vertex, radius)
    root = CycleRecord(graph=labeling.graph, word=labeling.root, root=labeling.root)
    lines = {line.anchor: line for line in lifts_through(ball, root, ball.base)}
    m = {}
    for i, a in enumerate(anchors):
        for j, b in enumerate(anchors):
            if i == j:
                continue
            sides = segment_and_sides(ball, lines[a], lines[b], labeling)
            if sides.relation != "segment":
                raise GluingError(f"lifts anchored at {a} and {b} do not meet in a segment")
            first, second = sides.b_labels
            if first is None or first != second:
                raise GluingError(f"lifts anchored at {a} and {b} cross")
            m[i, j] = first
    return m


def dual_tree_at(
    X: TubularComplex,
    cycle: CycleRecord,
    cell: t.Sequence[str],
    labeling: HalfspaceLabeling | None = None,
    backend: Backend = "word",
    radius: int | None = None,
) -> DualTree:
    """
    The dual tree at a lift of a vertex ``(graph, v)`` or vertical edge
    ``("V", graph, e)`` on the cycle. The ``ball`` backend reads the relation off a
    developed ball of ``radius`` (default ``l * 2^N``) instead of the local word model.
    """
    cell = tuple(cell)
    labeling = labeling or halfspace_labels(X, cycle)
    root = labeling.root
    graph = X.graph(cycle.graph)
    if len(cell) == 2 and cell[0] == cycle.graph:
        vertex = cell
        anchors = vertex_anchors(graph, root, cell[1])
    elif len(cell) == 3 and cell[0] == "V" and cell[1] == cycle.graph:
        tok = (cell[2], 1)
        vertex = (cycle.graph, graph.tail(tok))
        anchors = edge_anchors(root, cell[2])
    else:
        anchors = []
    if not anchors:
        raise PreconditionError(f"{cell!r} is not on {cycle}")

    if backend == "ball":
        radius = radius if radius is not None else len(root) * 2 ** max(1, X.max_thickness)
        m = _ball_relation(X, labeling, vertex, anchors, radius)
    else:
        m = _word_relation(X, labeling, anchors)
    tree = build_dual_tree(cell, anchors, labeling.K, m)
    logger.trace(f"dual tree at {cell}: {tree.black_count} lifts, {tree.white_count} regions")
    return tree
