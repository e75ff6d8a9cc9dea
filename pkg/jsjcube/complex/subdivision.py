from __future__ import annotations

import typing as t

from loguru import logger

from jsjcube.complex.models import (
    AttachingCycle,
    SimpleGraph,
    Tube,
    TubularComplex,
    Word,
)
from jsjcube.complex.square import SquareComplex, subdivide_squares
from jsjcube.errors import PreconditionError


def piece_names(edge: str, factor: int) -> t.List[str]:
    return [f"{edge}/{i}" for i in range(factor)]


def subdivided_graph(graph: SimpleGraph, factor: int) -> SimpleGraph:
    """split every edge into ``factor`` edges"""
    if factor == 1:
        return graph
    vertices = list(graph.vertices)
    edges = {}
    for e in sorted(graph.edges):
        a, b = graph.edges[e]
        inner = [f"{e}/m{i}" for i in range(1, factor)]
        vertices.extend(inner)
        chain = [a, *inner, b]
        for i, name in enumerate(piece_names(e, factor)):
            edges[name] = (chain[i], chain[i + 1])
    return SimpleGraph(vertices=tuple(vertices), edges=edges, origin=graph.origin)


def subdivide_word(word: Word, factor: int) -> Word:
    out = []
    for e, s in word:
        pieces = piece_names(e, factor) if factor > 1 else [e]
        if s < 0:
            pieces = pieces[::-1]
        out.extend((p, s) for p in pieces)
    return tuple(out)


def subdivide_graphs(X: TubularComplex, factors: t.Mapping[str, int]) -> TubularComplex:
    """subdivide several vertex graphs at once; tube lengths scale with them"""
    for name, factor in factors.items():
        X.graph(name)
        if factor < 1:
            raise PreconditionError(f"subdivision factor must be positive, got {factor}")

    def factor_of(name):
        return factors.get(name, 1)

    tubes = []
    for tube in X.tubes:
        fa, fb = factor_of(tube.end_a.target), factor_of(tube.end_b.target)
        if fa != fb:
            raise PreconditionError(
                f"tube {tube.id} joins graphs subdivided by {fa} and {fb}"
            )
        tubes.append(
            Tube(
                id=tube.id,
                length=tube.length * fa,
                end_a=AttachingCycle(
                    target=tube.end_a.target, word=subdivide_word(tube.end_a.word, fa)
                ),
                end_b=AttachingCycle(
                    target=tube.end_b.target, word=subdivide_word(tube.end_b.word, fb)
                ),
            )
        )
    graphs = {
        name: subdivided_graph(graph, factor_of(name))
        for name, graph in X.vertex_graphs.items()
    }
    return TubularComplex(
        vertex_graphs=graphs, tubes=tuple(tubes), hyperbolic=X.hyperbolic, notes=X.notes
    )


def subdivide_edges(X: TubularComplex, graph: str, factor: int) -> TubularComplex:
    return subdivide_graphs(X, {graph: factor})


def make_loop_free(X: TubularComplex) -> TubularComplex:
    """bisect every vertex-graph edge once if any graph has loops or parallel edges"""
    if not any(g.has_loops() or g.has_parallel_edges() for g in X.vertex_graphs.values()):
        return X
    logger.debug("bisecting all vertex graphs to remove loops")
    return subdivide_graphs(X, {name: 2 for name in X.vertex_graphs})


def _cubical_once(X: TubularComplex) -> TubularComplex:
    graphs = {name: subdivided_graph(g, 2) for name, g in X.vertex_graphs.items()}
    tubes = []
    for tube in X.tubes:
        n = 2 * tube.length
        circle = f"{tube.id}/m"
        graphs[circle] = SimpleGraph(
            vertices=tuple(f"c{j}" for j in range(n)),
            edges={f"k{j}": (f"c{j}", f"c{(j + 1) % n}") for j in range(n)},
        )
        around = tuple((f"k{j}", 1) for j in range(n))
        tubes.append(
            Tube(
                id=f"{tube.id}/0",
                length=n,
                end_a=AttachingCycle(
                    target=tube.end_a.target, word=subdivide_word(tube.end_a.word, 2)
                ),
                end_b=AttachingCycle(target=circle, word=around),
            )
        )
        tubes.append(
            Tube(
                id=f"{tube.id}/1",
                length=n,
                end_a=AttachingCycle(target=circle, word=around),
                end_b=AttachingCycle(
                    target=tube.end_b.target, word=subdivide_word(tube.end_b.word, 2)
                ),
            )
        )
    return TubularComplex(
        vertex_graphs=graphs, tubes=tuple(tubes), hyperbolic=X.hyperbolic, notes=X.notes
    )


def subdivide(X: TubularComplex | SquareComplex, n: int) -> TubularComplex | SquareComplex:
    """the n-th cubical subdivision; every square becomes four"""
    if n < 0:
        raise PreconditionError("subdivision depth must be non-negative")
    for _ in range(n):
        X = _cubical_once(X) if isinstance(X, TubularComplex) else subdivide_squares(X)
    return X
