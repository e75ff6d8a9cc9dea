"""
Balls in the universal cover.

A ball is developed like a coset enumeration. Vertices are union-find classes, each
with a projection to the complex and a map from half-edges at the projection to
neighbouring classes. Expanding a vertex of level below the radius creates its
neighbours and closes every square at it; whenever two classes must coincide they
are merged, and the merge cascades through their half-edge maps. Levels are
cubical distances from the basepoint.
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass, field

import networkx as nx
from loguru import logger
from networkx.utils import UnionFind

from jsjcube.complex.models import TubularComplex, end_half, start_half
from jsjcube.complex.square import Half, SquareComplex, SquareKey, VertexKey, as_square_complex
from jsjcube.config.config import Configs
from jsjcube.errors import GluingError, PreconditionError, ResourceLimitError


def _across(half: Half) -> Half:
    edge, end = half
    return (edge, 1 - end)


@dataclass(eq=False)
class Ball:
    sc: SquareComplex
    base: int
    radius: int
    proj: t.Dict[int, VertexKey]
    level: t.Dict[int, int]
    out: t.Dict[int, t.Dict[Half, int]]
    squares: t.List[t.Tuple[SquareKey, t.Tuple[int, int, int, int]]] = field(default_factory=list)

    @property
    def vertices(self) -> t.List[int]:
        return sorted(self.proj)

    def step(self, x: int, half: Half) -> int | None:
        return self.out[x].get(half)

    def edges(self) -> t.List[t.Tuple[int, Half, int]]:
        """``(tail, half at tail, head)`` once per edge"""
        return sorted(
            (x, half, y) for x, halves in self.out.items() for half, y in halves.items() if half[1] == 0
        )

    def link(self, x: int) -> nx.MultiGraph:
        """link of a ball vertex, with the half-edges of its projection as nodes"""
        g = nx.MultiGraph()
        g.add_nodes_from(self.out[x])
        for sq, corners in self.squares:
            for k, c in enumerate(corners):
                if c == x:
                    a, b = self.sc.corner_halves(sq, k)
                    g.add_edge(a, b, key=(sq, k))
        return g

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((x, y) for x, _, y in self.edges())
        return g


class _Development:
    def __init__(self, sc: SquareComplex, cap: int):
        self.sc = sc
        self.cap = cap
        self.uf = UnionFind()
        self.proj: t.Dict[int, VertexKey] = {}
        self.level: t.Dict[int, int] = {}
        self.out: t.Dict[int, t.Dict[Half, int]] = {}
        self.created = 0

    def find(self, x: int) -> int:
        return self.uf[x]

    def new(self, v: VertexKey, level: int) -> int:
        x = self.created
        self.created += 1
        if len(self.proj) >= self.cap:
            raise ResourceLimitError(
                f"ball exceeds {self.cap} vertices", details={"max_cells": self.cap}
            )
        self.uf[x]
        self.proj[x] = v
        self.level[x] = level
        self.out[x] = {}
        return x

    def merge(self, a: int, b: int) -> bool:
        changed = False
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if self.proj[a] != self.proj[b]:
                raise GluingError(f"development identifies {self.proj[a]} with {self.proj[b]}")
            self.uf.union(a, b)
            root = self.find(a)
            other = b if root == a else a
            self.level[root] = min(self.level[a], self.level[b])
            for half, y in self.out.pop(other).items():
                if half in self.out[root]:
                    queue.append((self.out[root][half], y))
                else:
                    self.out[root][half] = y
            del self.proj[other], self.level[other]
            changed = True
        return changed

    def join(self, x: int, half: Half, y: int) -> bool:
        """make ``half`` at ``x`` lead to ``y``"""
        changed = False
        for a, h, b in ((x, half, y), (y, _across(half), x)):
            a, b = self.find(a), self.find(b)
            cur = self.out[a].get(h)
            if cur is None:
                self.out[a][h] = b
                changed = True
            elif self.find(cur) != b:
                changed = self.merge(cur, b) or changed
        return changed

    def target(self, x: int, half: Half) -> int | None:
        y = self.out[self.find(x)].get(half)
        return None if y is None else self.find(y)

    def lower(self, x: int, level: int) -> bool:
        x = self.find(x)
        if level < self.level[x]:
            self.level[x] = level
            return True
        return False

    def expand(self, x: int) -> bool:
        x = self.find(x)
        v, lev = self.proj[x], self.level[x]
        changed = False
        for half in self.sc.halves_at[v]:
            y = self.target(x, half)
            if y is None:
                y = self.new(self.sc.edges[half[0]][1 - half[1]], lev + 1)
                changed = self.join(x, half, y) or changed
            else:
                changed = self.lower(y, lev + 1) or changed
        for sq, k in self.sc.corners_at[v]:
            x = self.find(x)
            d = self.sc.squares[sq]
            y = self.target(x, start_half(d[k % 4]))
            w = self.target(x, end_half(d[(k - 1) % 4]))
            via_y = start_half(d[(k + 1) % 4])
            via_w = end_half(d[(k + 2) % 4])
            z1, z2 = self.target(y, via_y), self.target(w, via_w)
            if z1 is None and z2 is None:
                z = self.new(self.sc.corner_vertex(sq, k + 2), lev + 1)
            else:
                z = z1 if z1 is not None else z2
                changed = self.lower(z, lev + 1) or changed
            changed = self.join(y, via_y, z) or changed
            changed = self.join(w, via_w, z) or changed
        return changed

    def corners(self, x: int, sq: SquareKey, k: int) -> t.Tuple[int, int, int, int] | None:
        """ball vertices at corners 0..3 of ``sq`` when corner ``k`` is ``x``"""
        d = self.sc.squares[sq]
        at = {k % 4: self.find(x)}
        y = self.target(x, start_half(d[k % 4]))
        if y is None:
            return None
        at[(k + 1) % 4] = y
        z = self.target(y, start_half(d[(k + 1) % 4]))
        if z is None:
            return None
        at[(k + 2) % 4] = z
        w = self.target(z, start_half(d[(k + 2) % 4]))
        if w is None:
            return None
        at[(k + 3) % 4] = w
        return tuple(at[i] for i in range(4))


def develop_ball(
    X: TubularComplex | SquareComplex,
    basepoint: t.Sequence[str],
    radius: int,
    max_cells: int | None = None,
) -> Ball:
    """the ``radius``-th cubical neighbourhood of a lift of ``basepoint``"""
    sc = as_square_complex(X)
    basepoint = tuple(basepoint)
    if basepoint not in sc.halves_at:
        raise PreconditionError(f"unknown basepoint {basepoint!r}")
    if radius < 0:
        raise PreconditionError("radius must be non-negative")
    dev = _Development(sc, max_cells or Configs.limits_config.max_cells)
    base = dev.new(basepoint, 0)

    changed = True
    while changed:
        changed = False
        for x in sorted(dev.proj, key=lambda x: (dev.level.get(x, radius), x)):
            if x in dev.proj and dev.find(x) == x and dev.level[x] < radius:
                changed = dev.expand(x) or changed

    renumber = {x: i for i, x in enumerate(sorted(dev.proj))}
    squares = set()
    for x in dev.proj:
        if dev.level[x] >= radius:
            continue
        for sq, k in sc.corners_at[dev.proj[x]]:
            corners = dev.corners(x, sq, k)
            if corners is None:
                raise GluingError(f"square {sq} at a vertex of level {dev.level[x]} is not closed")
            squares.add((sq, tuple(renumber[c] for c in corners)))

    ball = Ball(
        sc=sc,
        base=renumber[dev.find(base)],
        radius=radius,
        proj={renumber[x]: v for x, v in dev.proj.items()},
        level={renumber[x]: lev for x, lev in dev.level.items()},
        out={
            renumber[x]: {h: renumber[dev.find(y)] for h, y in halves.items()}
            for x, halves in dev.out.items()
        },
        squares=sorted(squares),
    )
    logger.debug(
        f"ball of radius {radius} at {basepoint}: {len(ball.proj)} vertices, {len(ball.squares)} squares"
    )
    return ball


def ball_components_without_line(ball: Ball, line: t.Iterable[int]) -> t.List[t.FrozenSet[int]]:
    """components of the ball once the vertices of ``line`` are removed"""
    on_line = set(getattr(line, "vertices", line))
    uf = UnionFind(v for v in ball.vertices if v not in on_line)
    for x, _, y in ball.edges():
        if x not in on_line and y not in on_line:
            uf.union(x, y)
    for _, corners in ball.squares:
        off = [c for c in corners if c not in on_line]
        if len(off) > 1:
            uf.union(*off)
    return sorted((frozenset(s) for s in uf.to_sets()), key=min)
