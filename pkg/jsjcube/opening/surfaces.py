from __future__ import annotations

import typing as t

from jsjcube.complex.fixtures import double_along
from jsjcube.complex.models import SimpleGraph, TubularComplex, Word


def is_surface_pair(graph: SimpleGraph, words: t.Sequence[Word]) -> bool:
    """every edge of the double of ``graph`` along ``words`` lies in exactly two squares"""
    if graph.is_circle() or not words or not graph.edges:
        return False
    sc = double_along(graph, words).squares
    return all(sc.thickness(e) == 2 for e in sc.edges if e[0] == "V")


def detect_surface_graph(X: TubularComplex, name: str) -> bool:
    """is the vertex graph a surface with boundary, its boundary the incident attaching cycles"""
    return is_surface_pair(X.graph(name), [word for _, word in X.incident_words(name)])
