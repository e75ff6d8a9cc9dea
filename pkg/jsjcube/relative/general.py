"""
JSJ decompositions of graphs of free groups with cyclic edge groups.

Every vertex of rank at least two is replaced by its JSJ relative to the words of its
incident edges. Each edge then joins two cyclic vertices, one of which it identifies
with the other; what is left is the JSJ of the whole group once trivial leaves are
pruned and surfaces glued along a cyclic vertex are merged.
"""

from __future__ import annotations

import typing as t

import networkx as nx
from loguru import logger
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from jsjcube.complex.fixtures import letter_tokens
from jsjcube.complex.models import SimpleGraph, Word
from jsjcube.errors import PreconditionError
from jsjcube.opening.assemble import circle_graph, finish_decomposition
from jsjcube.opening.decomposition import (
    DecompositionEdge,
    DecompositionGraph,
    DecompositionVertex,
    VertexKind,
)
from jsjcube.opening.dual_tree import Backend
from jsjcube.opening.pipeline import JsjResult, Provenance
from jsjcube.relative.family import FreeGroupFamily, cyclic_reduce, format_letters, letters
from jsjcube.relative.jsj import RelativeResult, relative_jsj
from jsjcube.utils.parallel import run_in_thread_pool

UNIT = "k0"
"""the single edge of the one-edge circle every cyclic vertex is drawn with"""

Power = t.Tuple[int, int]
"""(sign, degree): the word ``k0^(sign * degree)``"""


class GogVertex(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    rank: int

    @property
    def cyclic(self) -> bool:
        return self.rank == 1


class GogEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    a: str
    word_a: Word
    b: str
    word_b: Word

    @field_validator("word_a", "word_b", mode="before")
    @classmethod
    def _parse_letters(cls, v):
        return letter_tokens(v) if isinstance(v, str) else tuple(map(tuple, v))

    def ends(self) -> t.Tuple[t.Tuple[str, Word], t.Tuple[str, Word]]:
        return (self.a, self.word_a), (self.b, self.word_b)


class GraphOfFreeGroups(BaseModel):
    """Free vertex groups of given ranks; each edge names a cyclic word at both of its ends."""

    model_config = ConfigDict(frozen=True)

    vertices: t.Tuple[GogVertex, ...]
    edges: t.Tuple[GogEdge, ...] = ()

    @model_validator(mode="after")
    def _check(self):
        ranks = {}
        for v in self.vertices:
            if v.name in ranks:
                raise PreconditionError(f"duplicate vertex {v.name!r}")
            if v.rank < 1:
                raise PreconditionError(f"vertex {v.name} has rank {v.rank}; ranks start at 1")
            ranks[v.name] = v.rank
        seen = set()
        for e in self.edges:
            if e.id in seen:
                raise PreconditionError(f"duplicate edge {e.id!r}")
            seen.add(e.id)
            for name, word in e.ends():
                if name not in ranks:
                    raise PreconditionError(f"edge {e.id} ends at unknown vertex {name!r}")
                if not cyclic_reduce(word):
                    raise PreconditionError(f"edge {e.id} has a trivial word at {name}")
                extra = {x for x, _ in word} - set(letters(ranks[name]))
                if extra:
                    raise PreconditionError(
                        f"edge {e.id}: letters {sorted(extra)} exceed the rank of {name}"
                    )
        if self.vertices and not nx.is_connected(self.to_networkx()):
            raise PreconditionError("graph of free groups is not connected")
        return self

    def vertex(self, name: str) -> GogVertex:
        for v in self.vertices:
            if v.name == name:
                return v
        raise KeyError(name)

    def ends_at(self, name: str) -> t.List[t.Tuple[GogEdge, int]]:
        """(edge, side) for each edge end at the vertex; side 0 is ``a``"""
        out = []
        for e in self.edges:
            for side, (target, _) in enumerate(e.ends()):
                if target == name:
                    out.append((e, side))
        return out

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(v.name for v in self.vertices)
        for e in self.edges:
            g.add_edge(e.a, e.b, key=e.id)
        return g


def unit_word(power: Power) -> Word:
    sign, degree = power
    return ((UNIT, sign),) * degree


def power_of_word(circle: SimpleGraph, word: Word) -> Power:
    """the closed path ``word`` on a circle graph as a signed number of turns"""
    forward = set(circle.circle_word())
    sign = 1 if tuple(word[0]) in forward else -1
    return sign, len(word) // len(circle.edges)


def unit_power(word: Word) -> Power:
    return word[0][1], len(word)


def letter_power(word: Word) -> Power:
    """a power of the one generator of a rank-one vertex"""
    exponent = sum(s for _, s in cyclic_reduce(word))
    return (1 if exponent > 0 else -1), abs(exponent)


class _Absorption:
    """cyclic vertices identified with others, each with the power it becomes there"""

    def __init__(self):
        self.into: t.Dict[str, t.Tuple[str, Power]] = {}

    def resolve(self, vid: str, power: Power = (1, 1)) -> t.Tuple[str, Power]:
        sign, degree = power
        while vid in self.into:
            vid, (s, d) = self.into[vid]
            sign, degree = sign * s, degree * d
        return vid, (sign, degree)

    def identify(self, edge: str, first: t.Tuple[str, Power], second: t.Tuple[str, Power]):
        (x, (sx, dx)), (y, (sy, dy)) = self.resolve(*first), self.resolve(*second)
        if x == y:
            raise PreconditionError(
                f"edge {edge} conjugates the cyclic vertex {x} into itself; the group is not hyperbolic"
            )
        if dx == 1:
            self.into[x] = (y, (sx * sy, dy))
        elif dy == 1:
            self.into[y] = (x, (sx * sy, dx))
        else:
            raise PreconditionError(
                f"edge {edge} joins cyclic vertices {x} and {y} with degrees {dx} and {dy}; "
                "the group is not hyperbolic"
            )
        logger.debug(f"edge {edge}: identified {x} and {y}")


def _vertex_jsj(vertex: GogVertex, words: t.List[Word], max_word_len, threads, backend) -> RelativeResult:
    logger.info(f"relative JSJ of vertex {vertex.name}")
    return relative_jsj(
        FreeGroupFamily(rank=vertex.rank, words=tuple(words)),
        max_word_len=max_word_len,
        threads=threads,
        backend=backend,
    )


def _substitute(name: str, result: RelativeResult) -> t.Tuple[t.List[DecompositionVertex], t.List[DecompositionEdge]]:
    """the relative JSJ of one vertex, ids prefixed by the vertex name, cyclic words as powers"""

    def p(x: str) -> str:
        return f"{name}/{x}"

    dg = result.decomposition
    vertices = []
    for v in dg.vertices:
        if v.kind == VertexKind.CYCLIC:
            graphs = {p(v.id): circle_graph(1)}
        else:
            graphs = {p(g): gr for g, gr in v.graphs.items()}
        vertices.append(
            v.model_copy(
                update={
                    "id": p(v.id),
                    "members": [p(m) for m in v.members],
                    "graphs": graphs,
                    "origin": sorted({name} | {p(o) for o in v.origin}),
                    "peripheral": False,
                }
            )
        )
    edges = []
    for e in dg.edges:
        power = power_of_word(dg.vertex(e.cyclic).graphs[e.cyclic_graph], e.cyclic_word)
        edges.append(
            e.model_copy(
                update={
                    "id": p(e.id),
                    "cyclic": p(e.cyclic),
                    "other": p(e.other),
                    "cyclic_graph": p(e.cyclic),
                    "other_graph": p(e.other_graph),
                    "cyclic_word": unit_word(power),
                    "tube": p(e.tube) if e.tube else "",
                }
            )
        )
    return vertices, edges


def general_jsj(
    gog: GraphOfFreeGroups,
    max_word_len: int | None = None,
    threads: int | None = None,
    backend: Backend = "word",
) -> JsjResult:
    """the JSJ decomposition of the fundamental group of a graph of free groups"""
    rigid_candidates = [v for v in gog.vertices if not v.cyclic]
    if not rigid_candidates:
        raise PreconditionError("every vertex group is cyclic: no one-ended certificate")

    ends = {v.name: gog.ends_at(v.name) for v in rigid_candidates}
    results = run_in_thread_pool(
        _vertex_jsj,
        [
            {
                "vertex": v,
                "words": [e.ends()[side][1] for e, side in ends[v.name]],
                "max_word_len": max_word_len,
                "threads": 1,
                "backend": backend,
            }
            for v in rigid_candidates
        ],
        threads=threads,
        desc="relative JSJ per vertex",
    )

    vertices: t.Dict[str, DecompositionVertex] = {}
    edges: t.List[DecompositionEdge] = []
    # (gog edge, side) -> the cyclic vertex and power the edge end attaches by
    attach: t.Dict[t.Tuple[str, int], t.Tuple[str, Power]] = {}
    for v, result in zip(rigid_candidates, results):
        vs, es = _substitute(v.name, result)
        vertices.update({x.id: x for x in vs})
        edges.extend(es)
        for i, (e, side) in enumerate(ends[v.name]):
            entry = result.report.entry(i)
            periph = f"{v.name}/{result.peripheral[entry.class_index]}"
            attach[(e.id, side)] = (periph, (-1 if entry.inverted else 1, entry.exponent))
    for v in gog.vertices:
        if v.cyclic:
            vertices[v.name] = DecompositionVertex(
                id=v.name,
                kind=VertexKind.CYCLIC,
                members=[v.name],
                graphs={v.name: circle_graph(1)},
                rank=1,
                origin=[v.name],
            )
            for e, side in gog.ends_at(v.name):
                attach[(e.id, side)] = (v.name, letter_power(e.ends()[side][1]))

    absorbed = _Absorption()
    for e in sorted(gog.edges, key=lambda e: e.id):
        absorbed.identify(e.id, attach[(e.id, 0)], attach[(e.id, 1)])

    for vid in sorted(absorbed.into):
        rep, _ = absorbed.resolve(vid)
        gone, kept = vertices.pop(vid), vertices[rep]
        vertices[rep] = kept.model_copy(
            update={
                "members": kept.members + gone.members,
                "origin": sorted(set(kept.origin) | set(gone.origin)),
            }
        )
    moved = []
    for e in edges:
        rep, power = absorbed.resolve(e.cyclic, unit_power(e.cyclic_word))
        moved.append(e.model_copy(update={"cyclic": rep, "cyclic_graph": rep, "cyclic_word": unit_word(power)}))

    logger.info(
        f"general JSJ: {len(rigid_candidates)} vertex JSJs substituted, "
        f"{len(absorbed.into)} cyclic vertices identified"
    )
    dg = finish_decomposition(DecompositionGraph(vertices=list(vertices.values()), edges=moved))
    return JsjResult(
        decomposition=dg,
        provenance=Provenance(
            command="general-jsj",
            cycles=[
                f"{v.name}: {format_letters(w)}"
                for v, result in zip(rigid_candidates, results)
                for w in result.family.words
            ],
        ),
    )
