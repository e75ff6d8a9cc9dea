from __future__ import annotations

import typing as t

from loguru import logger

from jsjcube.complex.models import SimpleGraph, TubularComplex, Word, format_word
from jsjcube.errors import ClosedSurfaceError, GluingError
from jsjcube.opening.decomposition import (
    DecompositionEdge,
    DecompositionGraph,
    DecompositionVertex,
    VertexKind,
)
from jsjcube.opening.surfaces import detect_surface_graph


def circle_graph(length: int) -> SimpleGraph:
    return SimpleGraph(
        vertices=tuple(f"c{j}" for j in range(length)),
        edges={f"k{j}": (f"c{j}", f"c{(j + 1) % length}") for j in range(length)},
    )


def around(length: int) -> Word:
    return tuple((f"k{j}", 1) for j in range(length))


def _covers_once(circle: SimpleGraph | None, word: Word) -> bool:
    """the word runs over every edge of the circle exactly once"""
    return circle is not None and sorted(e for e, _ in word) == sorted(circle.edges)


def piece_rank(graphs: t.Iterable[SimpleGraph]) -> int:
    """rank of a free graph of groups with cyclic edge groups, from its vertex graphs"""
    return 1 - sum(0 if g.is_circle() else g.euler_characteristic for g in graphs)


def classify_graphs(X: TubularComplex) -> t.Dict[str, VertexKind]:
    kinds = {}
    for name in sorted(X.vertex_graphs):
        if X.graph(name).is_circle():
            kinds[name] = VertexKind.CYCLIC
        elif detect_surface_graph(X, name):
            kinds[name] = VertexKind.SURFACE
        else:
            kinds[name] = VertexKind.RIGID
    return kinds


def decomposition_of(X: TubularComplex) -> DecompositionGraph:
    """one vertex per vertex graph, one edge per tube, a cyclic vertex inserted where needed"""
    kinds = classify_graphs(X)
    vertices = {
        name: DecompositionVertex(
            id=name,
            kind=kind,
            members=[name],
            graphs={name: X.graph(name)},
            rank=X.graph(name).rank,
            origin=list(X.origin(name)),
        )
        for name, kind in kinds.items()
    }
    edges = []
    for tube in sorted(X.tubes, key=lambda tb: tb.id):
        a, b = tube.end_a, tube.end_b
        ka, kb = kinds[a.target], kinds[b.target]
        if ka == VertexKind.CYCLIC and kb == VertexKind.CYCLIC:
            raise GluingError(
                f"tube {tube.id} joins cyclic graphs {a.target} and {b.target}",
                details={"tube": tube.id, "end_a": a.target, "end_b": b.target},
            )
        if ka == VertexKind.CYCLIC or kb == VertexKind.CYCLIC:
            cyc, other = (a, b) if ka == VertexKind.CYCLIC else (b, a)
            edges.append(
                DecompositionEdge(
                    id=tube.id,
                    cyclic=cyc.target,
                    other=other.target,
                    cyclic_graph=cyc.target,
                    other_graph=other.target,
                    cyclic_word=cyc.word,
                    other_word=other.word,
                    tube=tube.id,
                )
            )
            continue
        cid = f"{tube.id}~c"
        vertices[cid] = DecompositionVertex(
            id=cid,
            kind=VertexKind.CYCLIC,
            members=[],
            graphs={cid: circle_graph(tube.length)},
            rank=1,
            origin=sorted(set(X.origin(a.target)) | set(X.origin(b.target))),
        )
        for side, end in (("a", a), ("b", b)):
            edges.append(
                DecompositionEdge(
                    id=f"{tube.id}.{side}",
                    cyclic=cid,
                    other=end.target,
                    cyclic_graph=cid,
                    other_graph=end.target,
                    cyclic_word=around(tube.length),
                    other_word=end.word,
                    tube=tube.id,
                )
            )
    return DecompositionGraph(vertices=list(vertices.values()), edges=edges)


def prune_surjective_leaves(dg: DecompositionGraph) -> DecompositionGraph:
    """drop cyclic vertices attached once by a word that goes around exactly once"""
    while True:
        leaf = next(
            (
                v
                for v in dg.vertices
                if v.kind == VertexKind.CYCLIC
                and not v.peripheral
                and len(dg.incident(v.id)) == 1
                and _covers_once(v.graphs.get(dg.incident(v.id)[0].cyclic_graph), dg.incident(v.id)[0].cyclic_word)
            ),
            None,
        )
        if leaf is None:
            return dg
        logger.debug(f"cyclic vertex {leaf.id} is a trivial leaf")
        dg = DecompositionGraph(
            vertices=[v for v in dg.vertices if v.id != leaf.id],
            edges=[e for e in dg.edges if e.cyclic != leaf.id],
        )


def collapse_surface_chains(dg: DecompositionGraph) -> t.Tuple[DecompositionGraph, int]:
    """merge each valence-2 cyclic vertex between surfaces into one surface vertex"""
    collapsed = 0
    while True:
        kinds = {v.id: v.kind for v in dg.vertices}
        target = None
        for v in sorted(dg.vertices, key=lambda v: v.id):
            incident = dg.incident(v.id)
            if v.kind == VertexKind.CYCLIC and not v.peripheral and len(incident) == 2 and all(
                kinds[e.other] == VertexKind.SURFACE for e in incident
            ):
                target = v, incident
                break
        if target is None:
            return dg, collapsed
        c, (e1, e2) = target
        for e in (e1, e2):
            if not _covers_once(c.graphs.get(e.cyclic_graph), e.cyclic_word):
                raise GluingError(
                    f"cyclic vertex {c.id} does not run once around its seam with surface {e.other}: "
                    f"{format_word(e.cyclic_word)}"
                )
        s1, s2 = dg.vertex(e1.other), dg.vertex(e2.other)
        parts = [s1, c] if s1.id == s2.id else [s1, c, s2]
        graphs = {}
        for part in parts:
            graphs.update(part.graphs)
        merged = DecompositionVertex(
            id=min(s1.id, s2.id),
            kind=VertexKind.SURFACE,
            members=[m for part in parts for m in part.members],
            graphs=graphs,
            rank=piece_rank(graphs.values()),
            origin=sorted({o for part in parts for o in part.origin}),
        )
        gone = {p.id for p in parts}
        vertices = [v for v in dg.vertices if v.id not in gone] + [merged]
        edges = []
        for e in dg.edges:
            if e.id in (e1.id, e2.id):
                continue
            if e.other in gone:
                e = e.model_copy(update={"other": merged.id})
            edges.append(e)
        dg = DecompositionGraph(vertices=vertices, edges=edges)
        collapsed += 1
        logger.debug(f"merged {' + '.join(p.id for p in parts)} into surface {merged.id}")


def finish_decomposition(dg: DecompositionGraph) -> DecompositionGraph:
    dg = prune_surjective_leaves(dg)
    dg, collapsed = collapse_surface_chains(dg)
    dg = dg.canonical()
    if len(dg.vertices) == 1 and not dg.edges and dg.vertices[0].kind == VertexKind.SURFACE:
        raise ClosedSurfaceError()
    problems = dg.violations()
    if problems:
        raise GluingError("decomposition violates its invariants", details=problems)
    counts = dg.kinds()
    logger.info(
        f"decomposition: {counts[VertexKind.CYCLIC]} cyclic, {counts[VertexKind.SURFACE]} surface, "
        f"{counts[VertexKind.RIGID]} rigid vertices; {collapsed} surface collapses"
    )
    return dg


def assemble_jsj(X: TubularComplex) -> DecompositionGraph:
    return finish_decomposition(decomposition_of(X))
