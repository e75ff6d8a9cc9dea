from __future__ import annotations

import typing as t
from collections import Counter

import networkx as nx
from pydantic import BaseModel, Field
from strenum import StrEnum

from jsjcube.complex.models import SimpleGraph, Word


class VertexKind(StrEnum):
    CYCLIC = "cyclic"
    SURFACE = "surface"
    RIGID = "rigid"


class DecompositionVertex(BaseModel):
    id: str
    kind: VertexKind
    members: t.List[str] = Field(default_factory=list)
    """vertex graphs of the final complex that make up this vertex"""
    graphs: t.Dict[str, SimpleGraph] = Field(default_factory=dict)
    rank: int
    origin: t.List[str] = Field(default_factory=list)
    peripheral: bool = False
    """a cyclic vertex standing for one of the marked words of a relative run"""


class DecompositionEdge(BaseModel):
    id: str
    cyclic: str
    other: str
    cyclic_graph: str
    other_graph: str
    cyclic_word: Word
    other_word: Word
    tube: str = ""


class DecompositionGraph(BaseModel):
    vertices: t.List[DecompositionVertex] = Field(default_factory=list)
    edges: t.List[DecompositionEdge] = Field(default_factory=list)

    def vertex(self, vid: str) -> DecompositionVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def incident(self, vid: str) -> t.List[DecompositionEdge]:
        return [e for e in self.edges if vid in (e.cyclic, e.other)]

    def degree(self, vid: str) -> int:
        return sum((e.cyclic == vid) + (e.other == vid) for e in self.edges)

    def kinds(self) -> Counter:
        return Counter(v.kind for v in self.vertices)

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        for v in self.vertices:
            g.add_node(v.id, kind=str(v.kind), rank=v.rank)
        for e in self.edges:
            g.add_edge(e.cyclic, e.other, key=e.id)
        return g

    def canonical(self) -> DecompositionGraph:
        return DecompositionGraph(
            vertices=sorted(self.vertices, key=lambda v: v.id),
            edges=sorted(self.edges, key=lambda e: e.id),
        )

    def violations(self) -> t.List[str]:
        problems = []
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            problems.append("duplicate vertex ids")
        kinds = {v.id: v.kind for v in self.vertices}
        for e in self.edges:
            if kinds.get(e.cyclic) != VertexKind.CYCLIC:
                problems.append(f"edge {e.id}: {e.cyclic} is not cyclic")
            if kinds.get(e.other) in (None, VertexKind.CYCLIC):
                problems.append(f"edge {e.id}: {e.other} is cyclic or unknown")
        for v in self.vertices:
            if v.kind != VertexKind.CYCLIC:
                continue
            incident = self.incident(v.id)
            if len(incident) == 1 and not v.peripheral:
                e = incident[0]
                circle = v.graphs.get(e.cyclic_graph)
                if circle is not None and len(e.cyclic_word) == len(circle.edges):
                    problems.append(f"cyclic vertex {v.id} has one edge and it surjects")
            if not v.peripheral and len(incident) == 2 and all(
                kinds.get(e.other) == VertexKind.SURFACE for e in incident
            ):
                problems.append(f"cyclic vertex {v.id} joins two surfaces")
        return problems
