"""
Sphere graphs.

A regular sphere is built from copies of vertex spheres, one copy per position of the
path. A vertex sphere is the first barycentric subdivision of the link, so its nodes
are half-edges and square corners. Every node of a built sphere remembers the raw
keys it was made from:

    (pos, ("edge", half))          a half-edge at the vertex in position ``pos``
    (pos, ("corner", square, k))   corner ``k`` of ``square`` at that vertex

Identified raw keys form one node whose id is the least of them, stored with the
whole set under the ``prov`` node attribute.
"""

from __future__ import annotations

import typing as t
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from jsjcube.complex.models import end_half, start_half
from jsjcube.complex.square import Half, SignedEdge, SquareKey

RawKey = t.Tuple[int, t.Tuple]


def edge_key(pos: int, half: Half) -> RawKey:
    return (pos, ("edge", half))


def corner_key(pos: int, sq: SquareKey, k: int) -> RawKey:
    return (pos, ("corner", sq, k % 4))


def provenance(graph: nx.MultiGraph, node) -> t.FrozenSet:
    return graph.nodes[node].get("prov", frozenset({node}))


def sorted_components(graph: nx.MultiGraph) -> t.List[t.FrozenSet]:
    """connected components, ordered by their least node"""
    comps = [frozenset(c) for c in nx.connected_components(graph)]
    return sorted(comps, key=min)


@dataclass(frozen=True, eq=False)
class SphereGraph:
    graph: nx.MultiGraph
    tokens: t.Tuple[SignedEdge, ...]
    pred: SignedEdge | None = None
    """token of the carrier line before the path, if any"""
    succ: SignedEdge | None = None
    cyclic: bool = False
    index: t.Dict[RawKey, t.Any] = field(default_factory=dict, repr=False)
    """raw key -> node, for every raw key that survived"""

    @property
    def length(self) -> int:
        return len(self.tokens)

    def node_of(self, raw: RawKey):
        return self.index.get(raw)

    def half_node(self, pos: int, half: Half):
        return self.index.get(edge_key(pos, half))

    @cached_property
    def components(self) -> t.List[t.FrozenSet]:
        return sorted_components(self.graph)

    @cached_property
    def labels(self) -> t.Dict[t.Any, int]:
        """node -> index of its component in ``components``"""
        return {n: i for i, comp in enumerate(self.components) for n in comp}

    def label_of_raw(self, raw: RawKey) -> int | None:
        node = self.index.get(raw)
        return None if node is None else self.labels[node]

    @property
    def component_count(self) -> int:
        return len(self.components)

    def is_connected(self) -> bool:
        return self.component_count == 1

    def cut_points(self) -> t.List:
        return sorted(nx.articulation_points(self.graph))

    def exits(self) -> t.Dict[str, t.Any]:
        """nodes where the carrier line leaves the sphere, when it still meets it"""
        out = {}
        if self.pred is not None and not self.cyclic:
            node = self.half_node(0, end_half(self.pred))
            if node is not None:
                out["in"] = node
        if self.succ is not None and not self.cyclic:
            node = self.half_node(self.length, start_half(self.succ))
            if node is not None:
                out["out"] = node
        return out

    def without(self, nodes: t.Iterable) -> nx.MultiGraph:
        g = self.graph.copy()
        g.remove_nodes_from([n for n in nodes if n in g])
        return g
