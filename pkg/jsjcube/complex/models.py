"""
Tubular graphs of graphs.

A complex is a family of named vertex graphs plus tubes. A tube of length L is a
circle of L edges crossed with an interval; its two ends are glued to vertex graphs
along closed edge paths (attaching cycles) of length L. Paths are written as words
of signed edge tokens ``(edge_id, +1 | -1)``.
"""

from __future__ import annotations

import typing as t
from functools import cached_property

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from jsjcube.errors import UnknownCellError

Token = t.Tuple[str, int]
Word = t.Tuple[Token, ...]
HalfEdge = t.Tuple[str, int]


def inverse_token(tok: Token) -> Token:
    return (tok[0], -tok[1])


def start_half(tok: Token) -> HalfEdge:
    """half-edge through which the token leaves its tail"""
    return (tok[0], 0 if tok[1] > 0 else 1)


def end_half(tok: Token) -> HalfEdge:
    """half-edge through which the token enters its head"""
    return (tok[0], 1 if tok[1] > 0 else 0)


def format_token(tok: Token) -> str:
    return tok[0] if tok[1] > 0 else f"-{tok[0]}"


def parse_token(text: str) -> Token:
    if text.startswith("-"):
        return (text[1:], -1)
    return (text, 1)


def format_word(word: t.Iterable[Token]) -> str:
    return " ".join(format_token(tok) for tok in word)


class SimpleGraph(BaseModel):
    """A finite graph. ``edges`` maps edge id to (tail, head)."""

    model_config = ConfigDict(frozen=True)

    vertices: t.Tuple[str, ...]
    edges: t.Dict[str, t.Tuple[str, str]] = Field(default_factory=dict)
    origin: t.Tuple[str, ...] = ()
    """names of the input vertex graphs this graph descends from"""

    def tail(self, tok: Token) -> str:
        a, b = self.edge(tok[0])
        return a if tok[1] > 0 else b

    def head(self, tok: Token) -> str:
        a, b = self.edge(tok[0])
        return b if tok[1] > 0 else a

    def edge(self, edge_id: str) -> t.Tuple[str, str]:
        try:
            return self.edges[edge_id]
        except KeyError:
            raise UnknownCellError(f"unknown edge {edge_id!r}") from None

    def vertex_of_half(self, half: HalfEdge) -> str:
        return self.edge(half[0])[half[1]]

    @cached_property
    def halves_at(self) -> t.Dict[str, t.List[HalfEdge]]:
        out: t.Dict[str, t.List[HalfEdge]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            a, b = self.edges[e]
            out.setdefault(a, []).append((e, 0))
            out.setdefault(b, []).append((e, 1))
        return out

    def outgoing(self, v: str) -> t.List[Token]:
        """tokens leaving ``v``, one per half-edge at ``v``"""
        return [(e, 1 if end == 0 else -1) for e, end in self.halves_at.get(v, [])]

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.edges.values())

    def has_parallel_edges(self) -> bool:
        seen = set()
        for a, b in self.edges.values():
            key = frozenset((a, b))
            if key in seen:
                return True
            seen.add(key)
        return False

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for e, (a, b) in sorted(self.edges.items()):
            g.add_edge(a, b, key=e)
        return g

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_connected(self.to_networkx())

    def is_circle(self) -> bool:
        if not self.edges or not self.is_connected():
            return False
        return all(len(self.halves_at[v]) == 2 for v in self.vertices)

    def circle_word(self) -> Word:
        """the word going once around a circle graph, starting at its least vertex"""
        start = min(self.vertices)
        word = [min(self.outgoing(start))]
        while len(word) < len(self.edges):
            back = inverse_token(word[-1])
            v = self.head(word[-1])
            word.append(next(tok for tok in self.outgoing(v) if tok != back))
        return tuple(word)

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges)

    @property
    def rank(self) -> int:
        return 1 - self.euler_characteristic


class AttachingCycle(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: str
    word: Word


class Tube(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    length: int
    end_a: AttachingCycle
    end_b: AttachingCycle

    def ends(self) -> t.Tuple[AttachingCycle, AttachingCycle]:
        return (self.end_a, self.end_b)


class TubularComplex(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex_graphs: t.Dict[str, SimpleGraph]
    tubes: t.Tuple[Tube, ...] = ()
    hyperbolic: bool = False
    """caller assertion from the input header"""
    notes: t.Tuple[str, ...] = ()

    def graph(self, name: str) -> SimpleGraph:
        try:
            return self.vertex_graphs[name]
        except KeyError:
            raise UnknownCellError(f"unknown vertex graph {name!r}") from None

    def origin(self, name: str) -> t.Tuple[str, ...]:
        return self.graph(name).origin or (name,)

    def tube(self, tube_id: str) -> Tube:
        for tube in self.tubes:
            if tube.id == tube_id:
                return tube
        raise UnknownCellError(f"unknown tube {tube_id!r}")

    def incident_words(self, name: str) -> t.List[t.Tuple[str, Word]]:
        """(tube id, word) for every tube end attached to the named graph"""
        out = []
        for tube in self.tubes:
            for end in tube.ends():
                if end.target == name:
                    out.append((tube.id, end.word))
        return out

    @cached_property
    def squares(self):
        from jsjcube.complex.square import square_complex

        return square_complex(self)

    @property
    def vertical_edge_count(self) -> int:
        """E"""
        return sum(len(g.edges) for g in self.vertex_graphs.values())

    @property
    def square_count(self) -> int:
        """F"""
        return sum(tube.length for tube in self.tubes)

    @property
    def max_thickness(self) -> int:
        """N"""
        return self.squares.max_thickness

    def underlying_graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertex_graphs)
        for tube in self.tubes:
            g.add_edge(tube.end_a.target, tube.end_b.target, key=tube.id)
        return g
