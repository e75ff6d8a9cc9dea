"""
VH square complexes.

Every cell key is a tuple of strings (squares carry an int position) so that keys
from different sources sort together deterministically.

vertex  ``(graph, vertex)``
edge    ``("V", graph, edge)`` for vertical edges, ``("H", tube, "i")`` for horizontal ones
square  ``(tube, i)``

A square is stored as its boundary ``(d0, d1, d2, d3)`` of signed edges, ``d_k``
running from corner ``k`` to corner ``k + 1``. Corner ``k`` sits between the end of
``d_{k-1}`` and the start of ``d_k``.
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from jsjcube.complex.models import TubularComplex, end_half, start_half
from jsjcube.errors import UnknownCellError

VertexKey = t.Tuple[str, str]
EdgeKey = t.Tuple[str, str, str]
SquareKey = t.Tuple[str, int]
SignedEdge = t.Tuple[EdgeKey, int]
Half = t.Tuple[EdgeKey, int]
Corner = t.Tuple[SquareKey, int]

VERTICAL = "v"
HORIZONTAL = "h"


@dataclass(frozen=True)
class SquareComplex:
    vertices: t.Tuple[VertexKey, ...]
    edges: t.Dict[EdgeKey, t.Tuple[VertexKey, VertexKey]]
    kinds: t.Dict[EdgeKey, str]
    squares: t.Dict[SquareKey, t.Tuple[SignedEdge, SignedEdge, SignedEdge, SignedEdge]]

    def tail(self, tok: SignedEdge) -> VertexKey:
        a, b = self.edges[tok[0]]
        return a if tok[1] > 0 else b

    def head(self, tok: SignedEdge) -> VertexKey:
        a, b = self.edges[tok[0]]
        return b if tok[1] > 0 else a

    def side(self, sq: SquareKey, k: int) -> SignedEdge:
        return self.squares[sq][k % 4]

    def corner_halves(self, sq: SquareKey, k: int) -> t.Tuple[Half, Half]:
        """the two half-edges joined by corner ``k`` of ``sq``"""
        return end_half(self.side(sq, k - 1)), start_half(self.side(sq, k))

    def corner_vertex(self, sq: SquareKey, k: int) -> VertexKey:
        return self.tail(self.side(sq, k))

    @cached_property
    def halves_at(self) -> t.Dict[VertexKey, t.List[Half]]:
        out: t.Dict[VertexKey, t.List[Half]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            a, b = self.edges[e]
            out[a].append((e, 0))
            out[b].append((e, 1))
        return out

    @cached_property
    def corners_at(self) -> t.Dict[VertexKey, t.List[Corner]]:
        out: t.Dict[VertexKey, t.List[Corner]] = {v: [] for v in self.vertices}
        for sq in sorted(self.squares):
            for k in range(4):
                out[self.corner_vertex(sq, k)].append((sq, k))
        return out

    @cached_property
    def occurrences(self) -> t.Dict[EdgeKey, t.List[Corner]]:
        """``(square, side)`` pairs in which each edge occurs, in canonical order"""
        out: t.Dict[EdgeKey, t.List[Corner]] = {e: [] for e in self.edges}
        for sq in sorted(self.squares):
            for k, (e, _) in enumerate(self.squares[sq]):
                out[e].append((sq, k))
        return out

    def thickness(self, edge: EdgeKey) -> int:
        if edge not in self.edges:
            raise UnknownCellError(f"unknown edge {edge!r}")
        return len(self.occurrences[edge])

    @cached_property
    def max_thickness(self) -> int:
        return max((len(occ) for occ in self.occurrences.values()), default=0)

    def link(self, v: VertexKey) -> nx.MultiGraph:
        if v not in self.halves_at:
            raise UnknownCellError(f"unknown vertex {v!r}")
        g = nx.MultiGraph()
        for half in self.halves_at[v]:
            kind = "vertical" if self.kinds[half[0]] == VERTICAL else "horizontal"
            g.add_node(half, kind=kind)
        for sq, k in self.corners_at[v]:
            a, b = self.corner_halves(sq, k)
            g.add_edge(a, b, key=(sq, k))
        return g

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.squares)


def square_complex(X: TubularComplex) -> SquareComplex:
    """realise a tubular complex as a VH square complex"""
    vertices = []
    edges = {}
    kinds = {}
    squares = {}
    for g in sorted(X.vertex_graphs):
        graph = X.vertex_graphs[g]
        vertices.extend((g, v) for v in graph.vertices)
        for e, (a, b) in graph.edges.items():
            edges[("V", g, e)] = ((g, a), (g, b))
            kinds[("V", g, e)] = VERTICAL

    for tube in X.tubes:
        ga, gb = tube.end_a.target, tube.end_b.target
        wa, wb = tube.end_a.word, tube.end_b.word
        graph_a, graph_b = X.graph(ga), X.graph(gb)
        n = tube.length
        for i in range(n):
            key = ("H", tube.id, str(i))
            edges[key] = ((ga, graph_a.tail(wa[i])), (gb, graph_b.tail(wb[i])))
            kinds[key] = HORIZONTAL
        for i in range(n):
            squares[(tube.id, i)] = (
                (("V", ga, wa[i][0]), wa[i][1]),
                (("H", tube.id, str((i + 1) % n)), 1),
                (("V", gb, wb[i][0]), -wb[i][1]),
                (("H", tube.id, str(i)), -1),
            )
    return SquareComplex(tuple(vertices), edges, kinds, squares)


def grid_patch(rows: int, cols: int) -> SquareComplex:
    """a planar ``rows x cols`` patch of unit squares"""

    def vx(r, c):
        return ("grid", f"{r},{c}")

    vertices = tuple(vx(r, c) for r in range(rows + 1) for c in range(cols + 1))
    edges = {}
    kinds = {}
    for r in range(rows + 1):
        for c in range(cols):
            edges[("H", f"row{r}", str(c))] = (vx(r, c), vx(r, c + 1))
            kinds[("H", f"row{r}", str(c))] = HORIZONTAL
    for c in range(cols + 1):
        for r in range(rows):
            edges[("V", f"col{c}", str(r))] = (vx(r, c), vx(r + 1, c))
            kinds[("V", f"col{c}", str(r))] = VERTICAL
    squares = {}
    for r in range(rows):
        for c in range(cols):
            squares[("grid", r * cols + c)] = (
                (("H", f"row{r}", str(c)), 1),
                (("V", f"col{c + 1}", str(r)), 1),
                (("H", f"row{r + 1}", str(c)), -1),
                (("V", f"col{c}", str(r)), -1),
            )
    return SquareComplex(vertices, edges, kinds, squares)


def as_square_complex(X: TubularComplex | SquareComplex) -> SquareComplex:
    return X.squares if isinstance(X, TubularComplex) else X


def _edge_key(edge: t.Sequence[str]) -> EdgeKey:
    # (graph, edge) is shorthand for a vertical edge of a vertex graph
    return ("V", edge[0], edge[1]) if len(edge) == 2 else tuple(edge)


def link_of(X: TubularComplex | SquareComplex, v: VertexKey) -> nx.MultiGraph:
    """the link of ``v``: half-edges as nodes, one edge per square corner"""
    return as_square_complex(X).link(tuple(v))


def thickness_of(X: TubularComplex | SquareComplex, e: t.Sequence[str]) -> int:
    return as_square_complex(X).thickness(_edge_key(e))


def euler_characteristic(X: TubularComplex | SquareComplex) -> int:
    if isinstance(X, TubularComplex):
        return sum(g.euler_characteristic for g in X.vertex_graphs.values())
    return X.euler_characteristic


def subdivide_squares(sc: SquareComplex) -> SquareComplex:
    """one cubical subdivision of an arbitrary square complex"""

    def mid(e: EdgeKey) -> VertexKey:
        return ("|".join(e), "mid")

    def centre(sq: SquareKey) -> VertexKey:
        return (f"{sq[0]}|{sq[1]}", "ctr")

    def first_half(tok: SignedEdge) -> SignedEdge:
        e, s = tok
        return ((e[0], e[1], f"{e[2]}/0"), 1) if s > 0 else ((e[0], e[1], f"{e[2]}/1"), -1)

    def second_half(tok: SignedEdge) -> SignedEdge:
        e, s = tok
        return ((e[0], e[1], f"{e[2]}/1"), 1) if s > 0 else ((e[0], e[1], f"{e[2]}/0"), -1)

    vertices = list(sc.vertices)
    edges = {}
    kinds = {}
    for e in sorted(sc.edges):
        a, b = sc.edges[e]
        m = mid(e)
        vertices.append(m)
        edges[(e[0], e[1], f"{e[2]}/0")] = (a, m)
        edges[(e[0], e[1], f"{e[2]}/1")] = (m, b)
        kinds[(e[0], e[1], f"{e[2]}/0")] = kinds[(e[0], e[1], f"{e[2]}/1")] = sc.kinds[e]

    squares = {}
    for sq in sorted(sc.squares):
        sides = sc.squares[sq]
        c = centre(sq)
        vertices.append(c)
        inner = []
        for k in range(4):
            # spoke from the midpoint of side k to the centre, parallel to side k+1
            key = (
                "V" if sc.kinds[sides[(k + 1) % 4][0]] == VERTICAL else "H",
                f"{sq[0]}|{sq[1]}",
                f"s{k}",
            )
            edges[key] = (mid(sides[k][0]), c)
            kinds[key] = sc.kinds[sides[(k + 1) % 4][0]]
            inner.append(key)
        for k in range(4):
            squares[(f"{sq[0]}|{sq[1]}", k)] = (
                first_half(sides[k]),
                (inner[k], 1),
                (inner[(k - 1) % 4], -1),
                second_half(sides[(k - 1) % 4]),
            )
    return SquareComplex(tuple(vertices), edges, kinds, squares)
