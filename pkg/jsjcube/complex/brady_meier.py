from __future__ import annotations

import typing as t

import networkx as nx
from pydantic import BaseModel

from jsjcube.complex.models import TubularComplex
from jsjcube.complex.square import SquareComplex, as_square_complex


class BradyMeierWitness(BaseModel):
    vertex: str
    simplex: str
    reason: str

    def __str__(self) -> str:
        return f"{self.reason} {self.simplex} in the link of {self.vertex}"


def _half_name(half) -> str:
    edge, end = half
    return f"{edge[-1]}@{end}"


def _vertex_name(v) -> str:
    return f"{v[0]}:{v[1]}"


def link_witness(link: nx.MultiGraph, v) -> BradyMeierWitness | None:
    """first reason the link fails to be connected after deleting any simplex"""
    if link.number_of_nodes() < 2:
        return BradyMeierWitness(vertex=_vertex_name(v), simplex="", reason="degenerate link")
    for node in sorted(link.nodes):
        if link.degree(node) == 0:
            return BradyMeierWitness(
                vertex=_vertex_name(v), simplex=_half_name(node), reason="isolated link vertex"
            )
    if not nx.is_connected(link):
        return BradyMeierWitness(vertex=_vertex_name(v), simplex="", reason="disconnected link")
    cut = sorted(nx.articulation_points(link))
    if cut:
        return BradyMeierWitness(
            vertex=_vertex_name(v), simplex=_half_name(cut[0]), reason="cut vertex"
        )
    bridges = sorted(tuple(sorted(b)) for b in nx.bridges(link))
    if bridges:
        a, b = bridges[0]
        return BradyMeierWitness(
            vertex=_vertex_name(v),
            simplex=f"{_half_name(a)}-{_half_name(b)}",
            reason="cut edge",
        )
    return None


def brady_meier_check(
    X: TubularComplex | SquareComplex,
) -> t.Tuple[bool, BradyMeierWitness | None]:
    """every link connected, and still connected after removing any vertex or edge"""
    sc = as_square_complex(X)
    for v in sorted(sc.vertices):
        witness = link_witness(sc.link(v), v)
        if witness is not None:
            return False, witness
    return True, None


def is_closed_surface(X: TubularComplex | SquareComplex) -> bool:
    """every link is a single cycle"""
    sc = as_square_complex(X)
    if not sc.vertices:
        return False
    for v in sc.vertices:
        link = sc.link(v)
        if link.number_of_nodes() < 2 or not nx.is_connected(link):
            return False
        if any(d != 2 for _, d in link.degree()):
            return False
    return True
