"""
Regular, orthogonal and quotient spheres of vertical paths and cycles.

All spheres are computed from the local data of the complex: links in the universal
cover are copies of links downstairs, so a path sphere only needs one vertex sphere
per position and the squares at each traversed edge.
"""

from __future__ import annotations

import typing as t

import networkx as nx
from loguru import logger

from jsjcube.complex.models import TubularComplex, end_half, start_half
from jsjcube.complex.square import SignedEdge, SquareComplex, VertexKey, as_square_complex
from jsjcube.config.config import Configs
from jsjcube.errors import GluingError, PreconditionError, ResourceLimitError
from jsjcube.spheres.paths import ImmersedPath, check_path, resolve_path
from jsjcube.spheres.sphere import RawKey, SphereGraph, corner_key, edge_key
from jsjcube.spheres.splice import identify_nodes, self_splice, splice

Method = t.Literal["direct", "splice"]


def _path_vertices(sc: SquareComplex, tokens: t.Sequence[SignedEdge]) -> t.List[VertexKey]:
    return [sc.tail(tokens[0])] + [sc.head(tok) for tok in tokens]


def token_corners(sc: SquareComplex, tok: SignedEdge, sq, k: int) -> t.Tuple[int, int]:
    """corners of ``sq`` at the tail and at the head of ``tok``, which lies on side ``k``"""
    if sc.side(sq, k) == tok:
        return k, (k + 1) % 4
    return (k + 1) % 4, k


def _add_vertex_copy(g: nx.MultiGraph, sc: SquareComplex, v: VertexKey, pos: int) -> None:
    for half in sc.halves_at[v]:
        key = edge_key(pos, half)
        g.add_node(key, prov=frozenset({key}))
    for sq, k in sc.corners_at[v]:
        key = corner_key(pos, sq, k)
        g.add_node(key, prov=frozenset({key}))
        a, b = sc.corner_halves(sq, k)
        g.add_edge(key, edge_key(pos, a))
        g.add_edge(key, edge_key(pos, b))


def _check_size(g: nx.MultiGraph) -> None:
    cap = Configs.limits_config.max_cells
    if g.number_of_nodes() > cap:
        raise ResourceLimitError(
            f"sphere has {g.number_of_nodes()} nodes, over the cap of {cap}",
            details={"max_cells": cap},
        )


def _index(g: nx.MultiGraph) -> t.Dict[RawKey, t.Any]:
    return {raw: n for n, data in g.nodes(data=True) for raw in data["prov"]}


def _edge_pairs(
    sc: SquareComplex, tok: SignedEdge, a: int, b: int
) -> t.Tuple[t.List[RawKey], t.List[RawKey]]:
    """corner keys glued across ``tok`` running from position ``a`` to ``b``, in canonical square order"""
    tails, heads = [], []
    for sq, k in sc.occurrences[tok[0]]:
        tk, hk = token_corners(sc, tok, sq, k)
        tails.append(corner_key(a, sq, tk))
        heads.append(corner_key(b, sq, hk))
    return tails, heads


def _glued(
    sc: SquareComplex,
    tokens: t.Sequence[SignedEdge],
    cyclic: bool = False,
    cut: t.Iterable[RawKey] = (),
) -> nx.MultiGraph:
    vertices = _path_vertices(sc, tokens)
    positions = len(tokens) if cyclic else len(tokens) + 1
    raw = nx.MultiGraph()
    for pos in range(positions):
        _add_vertex_copy(raw, sc, vertices[pos], pos)
    _check_size(raw)

    removed = set(cut)
    pairs = []
    for i, tok in enumerate(tokens, start=1):
        a, b = i - 1, (i % positions if cyclic else i)
        removed.add(edge_key(a, start_half(tok)))
        removed.add(edge_key(b, end_half(tok)))
        tails, heads = _edge_pairs(sc, tok, a, b)
        pairs.extend(zip(tails, heads))
    raw.remove_nodes_from(removed)
    return identify_nodes(raw, pairs)


def _spliced(sc: SquareComplex, tokens: t.Sequence[SignedEdge]) -> nx.MultiGraph:
    vertices = _path_vertices(sc, tokens)
    g = nx.MultiGraph()
    _add_vertex_copy(g, sc, vertices[0], 0)
    for i, tok in enumerate(tokens, start=1):
        nxt = nx.MultiGraph()
        _add_vertex_copy(nxt, sc, vertices[i], i)
        index = _index(g)
        tails, heads = _edge_pairs(sc, tok, i - 1, i)
        g = splice(
            g,
            edge_key(i - 1, start_half(tok)),
            [index[key] for key in tails],
            nxt,
            edge_key(i, end_half(tok)),
            heads,
        )
        _check_size(g)
    return g


def _sphere(g: nx.MultiGraph, tokens, pred=None, succ=None, cyclic=False) -> SphereGraph:
    return SphereGraph(
        graph=g, tokens=tuple(tokens), pred=pred, succ=succ, cyclic=cyclic, index=_index(g)
    )


def vertex_sphere(X: TubularComplex | SquareComplex, v: t.Sequence[str]) -> SphereGraph:
    """first barycentric subdivision of the link of ``v``"""
    sc = as_square_complex(X)
    v = tuple(v)
    if v not in sc.halves_at:
        raise PreconditionError(f"unknown vertex {v!r}")
    g = nx.MultiGraph()
    _add_vertex_copy(g, sc, v, 0)
    return _sphere(g, ())


def regular_sphere(
    X: TubularComplex | SquareComplex,
    path: ImmersedPath | t.Sequence[SignedEdge],
    pred: SignedEdge | None = None,
    succ: SignedEdge | None = None,
    method: Method = "direct",
) -> SphereGraph:
    """
    The regular sphere of an immersed path.

    ``pred`` and ``succ`` name the tokens of a carrier line before and after the path;
    they only mark the exit nodes. ``method="splice"`` builds the sphere one vertex at a
    time with ``splice``; the default glues all copies in one pass. Both give the same
    graph with the same node ids.
    """
    if isinstance(path, ImmersedPath) and not path.word:
        if path.start is None:
            raise PreconditionError("empty path without a start vertex")
        return vertex_sphere(X, (path.graph, path.start))
    sc, tokens = resolve_path(X, path)
    if not tokens:
        raise PreconditionError("empty path without a start vertex")
    check_path(sc, tokens)
    g = _spliced(sc, tokens) if method == "splice" else _glued(sc, tokens)
    return _sphere(g, tokens, pred=pred, succ=succ)


def segment_sphere(
    X: TubularComplex | SquareComplex,
    tokens: t.Sequence[SignedEdge],
    pred: SignedEdge,
    succ: SignedEdge,
) -> SphereGraph:
    """regular sphere of a segment of a line with the line's two exit points removed"""
    sc = as_square_complex(X)
    tokens = tuple(tokens)
    check_path(sc, (pred,) + tokens + (succ,))
    m = len(tokens)
    cut = (edge_key(0, end_half(pred)), edge_key(m, start_half(succ)))
    if tokens:
        g = _glued(sc, tokens, cut=cut)
    else:
        g = nx.MultiGraph()
        _add_vertex_copy(g, sc, sc.head(pred), 0)
        g.remove_nodes_from(cut)
        _check_size(g)
    return _sphere(g, tokens, pred=pred, succ=succ)


def orthogonal_sphere(
    X: TubularComplex | SquareComplex,
    path: ImmersedPath | t.Sequence[SignedEdge],
    power: int = 1,
) -> SphereGraph:
    """
    Sphere of ``power`` consecutive fundamental domains of a cycle, with the two
    exit points of the cycle removed.
    """
    sc, tokens = resolve_path(X, path)
    check_path(sc, tokens, cyclic=True)
    tokens = tuple(tokens) * power
    return segment_sphere(sc, tokens, pred=tokens[-1], succ=tokens[0])


def quotient_sphere(
    X: TubularComplex | SquareComplex,
    cycle: ImmersedPath | t.Sequence[SignedEdge],
    power: int = 1,
    method: Method = "direct",
) -> SphereGraph:
    """
    Regular sphere of a cycle: the orthogonal sphere with its two ends glued by the
    deck translation. ``method="splice"`` closes the sphere of all but the last edge
    with ``self_splice``.
    """
    sc, tokens = resolve_path(X, cycle)
    check_path(sc, tokens, cyclic=True)
    tokens = tuple(tokens) * power
    if method != "splice":
        return _sphere(_glued(sc, tokens, cyclic=True), tokens, cyclic=True)

    last = tokens[-1]
    ell = len(tokens)
    g = _glued(sc, tokens[:-1])
    index = _index(g)
    tails, heads = _edge_pairs(sc, last, ell - 1, 0)
    g = self_splice(
        g,
        edge_key(ell - 1, start_half(last)),
        [index[key] for key in tails],
        edge_key(0, end_half(last)),
        [index[key] for key in heads],
    )
    return _sphere(g, tokens, cyclic=True)


def trace_components(sub: SphereGraph, full: SphereGraph, offset: int = 0) -> t.Dict[int, int]:
    """
    Component map induced by including the path of ``sub`` at ``offset`` in the path of
    ``full``. A component of ``sub`` whose every node is cut in ``full`` is left out.
    """
    n, m = sub.length, full.length
    if full.cyclic:
        window = tuple(full.tokens[(offset + i) % m] for i in range(n)) if m else ()
    else:
        if offset < 0 or offset + n > m:
            raise PreconditionError(f"window [{offset}, {offset + n}] is outside the path")
        window = full.tokens[offset : offset + n]
    if window != sub.tokens:
        raise PreconditionError("not a subpath at this offset")

    mapping: t.Dict[int, int] = {}
    for (pos, key), node in sub.index.items():
        pos = (pos + offset) % m if full.cyclic else pos + offset
        target = full.index.get((pos, key))
        if target is None:
            continue
        c, d = sub.labels[node], full.labels[target]
        if mapping.setdefault(c, d) != d:
            raise GluingError(f"component {c} traces to both {mapping[c]} and {d}")
    logger.trace(f"traced {len(mapping)} of {sub.component_count} components")
    return mapping
