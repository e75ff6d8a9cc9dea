from __future__ import annotations

import typing as t
from dataclasses import dataclass, field

from loguru import logger

from jsjcube.complex.brady_meier import brady_meier_check
from jsjcube.complex.models import (
    AttachingCycle,
    SimpleGraph,
    Tube,
    TubularComplex,
    Word,
    format_word,
)
from jsjcube.cycles.records import CycleRecord, normalize_cycle
from jsjcube.errors import GluingError, NotBradyMeierError
from jsjcube.opening.dual_tree import Backend
from jsjcube.opening.open import EdgeRef, VertexRef, open_along


@dataclass(eq=False)
class Projection:
    """the composite map from the cells of an opened complex to the input complex"""

    vertex: t.Dict[VertexRef, VertexRef]
    edge: t.Dict[EdgeRef, t.Tuple[EdgeRef, int]]

    @classmethod
    def identity(cls, X: TubularComplex) -> Projection:
        return cls(
            vertex={(g, v): (g, v) for g, gr in X.vertex_graphs.items() for v in gr.vertices},
            edge={(g, e): ((g, e), 1) for g, gr in X.vertex_graphs.items() for e in gr.edges},
        )

    def then(self, vertex: t.Mapping, edge: t.Mapping) -> Projection:
        """precompose with the projection of one more opening"""
        out_edge = {}
        for new, (old, s) in edge.items():
            base, s0 = self.edge[old]
            out_edge[new] = (base, s * s0)
        return Projection(vertex={new: self.vertex[old] for new, old in vertex.items()}, edge=out_edge)


def lift_word(X: TubularComplex, eta: Projection, graph: str, word: Word) -> t.List[t.Tuple[str, Word]]:
    """closed paths of ``X`` that project onto the closed path ``word`` of the input graph"""
    lifts = set()
    for name in sorted(X.vertex_graphs):
        gr = X.vertex_graphs[name]
        if not word or eta.vertex[(name, gr.vertices[0])][0] != graph:
            continue
        for v in gr.vertices:
            path = []
            x = v
            for tok in word:
                step = _step(eta, name, gr, x, tok)
                if step is None:
                    break
                path.append(step)
                x = gr.head(step)
            else:
                if x == v:
                    lifts.add((name, tuple(path)))
    return sorted(lifts)


def _step(eta: Projection, name: str, gr: SimpleGraph, v: str, tok) -> t.Tuple[str, int] | None:
    # projections are immersions, so at most one edge at v lies over tok
    for out in gr.outgoing(v):
        (_, e), s = eta.edge[(name, out[0])]
        if (e, s * out[1]) == tok:
            return out
    return None


@dataclass(eq=False)
class XPrimeResult:
    complex: TubularComplex
    opened: t.List[CycleRecord] = field(default_factory=list)
    """the cycles opened along, as cycles of the complex at the time"""
    skipped: t.List[CycleRecord] = field(default_factory=list)
    projection: Projection | None = field(default=None, repr=False)


def build_X_prime(
    X: TubularComplex,
    cycles: t.Sequence[CycleRecord],
    threads: int | None = None,
    backend: Backend = "word",
) -> XPrimeResult:
    """
    Open along each cycle in turn, as long as it still factors through a vertical
    cycle of a non-circle graph of the current complex.
    """
    current = X
    eta = Projection.identity(X)
    result = XPrimeResult(complex=X, projection=eta)
    for cycle in sorted(cycles, key=lambda c: (c.graph, c.word)):
        lifts = lift_word(current, eta, cycle.graph, cycle.word)
        if any(current.graph(name).is_circle() for name, _ in lifts):
            logger.debug(f"{cycle} is already opened")
            result.skipped.append(cycle)
            continue
        if not lifts:
            logger.debug(f"{cycle} does not factor through a vertical cycle")
            result.skipped.append(cycle)
            continue
        name, word = lifts[0]
        lifted = normalize_cycle(word, graph=name, carrier=current.graph(name))
        opened = open_along(current, lifted, threads=threads, backend=backend)
        ok, witness = brady_meier_check(opened.complex)
        if not ok:
            logger.error(f"opening along {lifted} broke the Brady-Meier condition at {witness}")
            raise NotBradyMeierError(witness)
        eta = eta.then(opened.eta_vertex, opened.eta_edge)
        current = opened.complex
        result.opened.append(lifted)
    result.complex = current
    result.projection = eta
    logger.info(f"X' after {len(result.opened)} openings; {len(result.skipped)} cycles skipped")
    return result


def _absorb(X: TubularComplex, tube: Tube, keep_end: AttachingCycle, drop_end: AttachingCycle) -> TubularComplex:
    """identify the circle at ``drop_end`` with the circle at ``keep_end`` through the tube"""
    kept = X.graph(keep_end.target)
    edge_map: t.Dict[str, t.Tuple[str, int]] = {}
    for (e, s), (f, r) in zip(drop_end.word, keep_end.word):
        edge_map[e] = (f, s * r)

    def move(end: AttachingCycle) -> AttachingCycle:
        if end.target != drop_end.target:
            return end
        word = tuple((edge_map[e][0], s * edge_map[e][1]) for e, s in end.word)
        return AttachingCycle(target=keep_end.target, word=word)

    tubes = tuple(
        Tube(id=other.id, length=other.length, end_a=move(other.end_a), end_b=move(other.end_b))
        for other in X.tubes
        if other.id != tube.id
    )
    graphs = {name: gr for name, gr in X.vertex_graphs.items() if name != drop_end.target}
    origin = tuple(sorted(set(X.origin(keep_end.target)) | set(X.origin(drop_end.target))))
    graphs[keep_end.target] = SimpleGraph(vertices=kept.vertices, edges=kept.edges, origin=origin)
    logger.debug(f"tube {tube.id}: {drop_end.target} absorbed into {keep_end.target}")
    return TubularComplex(vertex_graphs=graphs, tubes=tubes, hyperbolic=X.hyperbolic, notes=X.notes)


def _covers_once(graph: SimpleGraph, word: Word) -> bool:
    return len(word) == len(graph.edges) and len({e for e, _ in word}) == len(word)


def build_X_doubleprime(X: TubularComplex) -> TubularComplex:
    """remove every tube joining two distinct circle graphs, identifying the circles"""
    removed = 0
    while True:
        tube = next(
            (
                tube
                for tube in sorted(X.tubes, key=lambda tb: tb.id)
                if tube.end_a.target != tube.end_b.target
                and X.graph(tube.end_a.target).is_circle()
                and X.graph(tube.end_b.target).is_circle()
            ),
            None,
        )
        if tube is None:
            break
        a_iso = _covers_once(X.graph(tube.end_a.target), tube.end_a.word)
        b_iso = _covers_once(X.graph(tube.end_b.target), tube.end_b.word)
        if a_iso:
            X = _absorb(X, tube, keep_end=tube.end_b, drop_end=tube.end_a)
        elif b_iso:
            X = _absorb(X, tube, keep_end=tube.end_a, drop_end=tube.end_b)
        else:
            raise GluingError(
                f"tube {tube.id} joins two circles and covers both more than once: "
                f"{format_word(tube.end_a.word)} / {format_word(tube.end_b.word)}"
            )
        removed += 1
    logger.info(f"X'': removed {removed} tubes between circles")
    return X
