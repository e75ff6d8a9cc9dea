from __future__ import annotations

import typing as t

import networkx as nx
from pydantic import BaseModel, ConfigDict

from jsjcube.complex.models import TubularComplex
from jsjcube.complex.square import Half, SignedEdge, SquareComplex, VertexKey
from jsjcube.cycles.intersections import SelfIntersection, self_intersection_components
from jsjcube.cycles.records import CycleRecord
from jsjcube.errors import PreconditionError
from jsjcube.spheres.builders import regular_sphere, vertex_sphere
from jsjcube.spheres.paths import vertical_tokens
from jsjcube.spheres.sphere import SphereGraph

Exit = t.Tuple[int, Half]


class CrossingInstance(BaseModel):
    """Two lines through a common compact segment, given by their exits from its sphere."""

    model_config = ConfigDict(frozen=True)

    tokens: t.Tuple[SignedEdge, ...] = ()
    vertex: VertexKey | None = None
    """the shared vertex when the segment has no edges"""
    a_exits: t.Tuple[Exit, Exit]
    b_exits: t.Tuple[Exit, Exit]

    def swapped(self) -> CrossingInstance:
        return CrossingInstance(
            tokens=self.tokens, vertex=self.vertex, a_exits=self.b_exits, b_exits=self.a_exits
        )


def instance_sphere(X: TubularComplex | SquareComplex, inst: CrossingInstance) -> SphereGraph:
    if inst.tokens:
        return regular_sphere(X, inst.tokens)
    if inst.vertex is None:
        raise PreconditionError("crossing instance has neither a segment nor a vertex")
    return vertex_sphere(X, inst.vertex)


def _exit_nodes(sphere: SphereGraph, exits: t.Sequence[Exit]) -> t.List:
    nodes = []
    for pos, half in exits:
        node = sphere.half_node(pos, half)
        if node is None:
            raise PreconditionError(f"exit {half} at position {pos} is not on the sphere")
        nodes.append(node)
    return nodes


def crossing_test(inst: CrossingInstance, sphere: SphereGraph) -> bool:
    """do B's exits fall in different components once A's exits are removed"""
    a_nodes = _exit_nodes(sphere, inst.a_exits)
    b_nodes = _exit_nodes(sphere, inst.b_exits)
    if set(a_nodes) & set(b_nodes):
        raise PreconditionError("the two lines share an exit, so the segment is not maximal")
    rest = sphere.without(a_nodes)
    return not nx.has_path(rest, b_nodes[0], b_nodes[1])


def self_intersection_instance(X: TubularComplex, si: SelfIntersection) -> CrossingInstance:
    def lift(exits):
        return tuple((pos, (("V", si.graph, half[0]), half[1])) for pos, half in exits)

    vertex = None
    if not si.segment:
        graph = X.graph(si.graph)
        edge, end = si.a_exits[1][1]
        vertex = (si.graph, graph.vertex_of_half((edge, end)))
    return CrossingInstance(
        tokens=vertical_tokens(si.graph, si.segment),
        vertex=vertex,
        a_exits=lift(si.a_exits),
        b_exits=lift(si.b_exits),
    )


def has_self_crossing(X: TubularComplex, cycle: CycleRecord) -> bool:
    for si in self_intersection_components(X, cycle):
        inst = self_intersection_instance(X, si)
        if crossing_test(inst, instance_sphere(X, inst)):
            return True
    return False
