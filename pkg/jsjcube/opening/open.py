"""
Opening a complex along a splitting cycle.

The vertex graph carrying the cycle is cut along the image of the cycle (``Y'``),
and every vertex and edge of the image is replaced by the regions of its dual tree.
The lifts of the cycle themselves close up into one new circle graph, joined to the
regions by one tube per orbit of the deck permutation on half-spaces.
"""

from __future__ import annotations

import typing as t
from collections import defaultdict
from dataclasses import dataclass, field

import networkx as nx
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from jsjcube.complex.models import AttachingCycle, SimpleGraph, Tube, TubularComplex, Word
from jsjcube.complex.square import euler_characteristic
from jsjcube.complex.validation import validate_complex
from jsjcube.cycles.records import CycleRecord
from jsjcube.errors import GluingError, PreconditionError
from jsjcube.opening.dual_tree import Backend, DualTree, dual_tree_at
from jsjcube.opening.walls import half_labels, head_position, square_labels
from jsjcube.separation.halfspace import HalfspaceLabeling, halfspace_labels
from jsjcube.separation.permutations import orbits
from jsjcube.utils.parallel import run_in_thread_pool

VertexRef = t.Tuple[str, str]
EdgeRef = t.Tuple[str, str]


class SquareStub(BaseModel):
    """a square of a tube whose side lies on an edge of the cycle"""

    model_config = ConfigDict(frozen=True)

    tube: str
    index: int
    end: str
    """``a`` or ``b``"""
    edge: str

    @property
    def side(self) -> int:
        return 0 if self.end == "a" else 2


class YPrime(BaseModel):
    """The carrier graph with the image of the cycle removed."""

    model_config = ConfigDict(frozen=True)

    graph: str
    kept: SimpleGraph
    """surviving cells, plus one stub vertex per half-edge that ended on the cycle"""
    half_stubs: t.Dict[str, t.Tuple[str, t.Tuple[str, int]]] = Field(default_factory=dict)
    """stub vertex -> (removed vertex, half-edge)"""
    square_stubs: t.List[SquareStub] = Field(default_factory=list)
    on_vertices: t.List[str] = Field(default_factory=list)
    on_edges: t.List[str] = Field(default_factory=list)


def build_Y_prime(X: TubularComplex, cycle: CycleRecord) -> YPrime:
    graph = X.graph(cycle.graph)
    on_vertices = sorted({graph.tail(tok) for tok in cycle.root})
    on_edges = sorted({tok[0] for tok in cycle.root})
    on = set(on_vertices)

    vertices = [v for v in graph.vertices if v not in on]
    edges = {}
    half_stubs = {}
    for e in sorted(graph.edges):
        if e in on_edges:
            continue
        ends = list(graph.edges[e])
        for end in (0, 1):
            if ends[end] in on:
                stub = f"{ends[end]}@{e}.{end}"
                half_stubs[stub] = (ends[end], (e, end))
                vertices.append(stub)
                ends[end] = stub
        edges[e] = tuple(ends)

    square_stubs = []
    for tube in X.tubes:
        for end_name, end in (("a", tube.end_a), ("b", tube.end_b)):
            if end.target != cycle.graph:
                continue
            for i, (e, _) in enumerate(end.word):
                if e in on_edges:
                    square_stubs.append(SquareStub(tube=tube.id, index=i, end=end_name, edge=e))

    return YPrime(
        graph=cycle.graph,
        kept=SimpleGraph(vertices=tuple(vertices), edges=edges, origin=graph.origin),
        half_stubs=half_stubs,
        square_stubs=square_stubs,
        on_vertices=on_vertices,
        on_edges=on_edges,
    )


@dataclass(eq=False)
class OpenResult:
    complex: TubularComplex
    cycle: CycleRecord
    K: int
    circle: str
    new_tubes: t.List[str]
    pieces: t.List[str]
    """graphs that replace the carrier graph"""
    eta_vertex: t.Dict[VertexRef, VertexRef] = field(repr=False)
    """new vertex -> vertex of the complex that was opened"""
    eta_edge: t.Dict[EdgeRef, t.Tuple[EdgeRef, int]] = field(repr=False)
    trees: t.Dict[t.Tuple[str, ...], DualTree] = field(default_factory=dict, repr=False)


def _fresh(taken: t.Container[str], stem: str) -> str:
    n = 0
    while f"{stem}{n}" in taken:
        n += 1
    return f"{stem}{n}"


def _region(u: str, w: int) -> str:
    return f"{u}~w{w}"


def _edge_region(e: str, w: int) -> str:
    return f"{e}~w{w}"


class _Opening:
    def __init__(self, X: TubularComplex, cycle: CycleRecord, labeling: HalfspaceLabeling):
        self.X = X
        self.cycle = cycle
        self.labeling = labeling
        self.g = cycle.graph
        self.graph = X.graph(self.g)
        self.root: Word = labeling.root
        self.vtrees: t.Dict[str, DualTree] = {}
        self.etrees: t.Dict[str, DualTree] = {}

    def half_vector(
        self, tree: DualTree, half: t.Tuple[str, int], fixed: t.Mapping[int, int] | None = None
    ) -> t.List[int]:
        """sides of every lift of ``tree`` holding ``half``, except those given in ``fixed``"""
        fixed = fixed or {}
        vector = []
        for anchor in tree.anchors:
            if anchor in fixed:
                vector.append(fixed[anchor])
            else:
                vector.append(half_labels(self.X, self.labeling, anchor, [half])[half])
        return vector

    def edge_ends(self, e: str) -> t.Dict[int, t.Tuple[str, str]]:
        a, b = self.graph.edges[e]
        te, ta, tb = self.etrees[e], self.vtrees[a], self.vtrees[b]
        out = {}
        for w in range(te.white_count):
            vec = te.vector(w)
            at_tail = dict(zip(te.anchors, vec))
            at_head = {}
            for anchor, label in at_tail.items():
                pos, twisted = self.labeling.normalize(head_position(self.root, anchor, e), label)
                at_head[pos] = twisted
            tail = ta.find_white(self.half_vector(ta, (e, 0), at_tail))
            head = tb.find_white(self.half_vector(tb, (e, 1), at_head))
            out[w] = (_region(a, tail), _region(b, head))
        return out

    def square_regions(self, e: str, stubs: t.Sequence[SquareStub]) -> t.Dict[SquareStub, int]:
        te = self.etrees[e]
        corners = [((s.tube, s.index), s.side) for s in stubs]
        per_line = [square_labels(self.X, self.labeling, anchor, e, corners) for anchor in te.anchors]
        return {
            stub: te.find_white([labels[corner] for labels in per_line])
            for stub, corner in zip(stubs, corners)
        }

    def orbit_word(self, lam: int, r: int) -> Word:
        ell = len(self.root)
        word = []
        for j in range(r * ell):
            e, s = self.root[j % ell]
            pos = j if s > 0 else j + 1
            anchor, label = self.labeling.normalize(pos, lam)
            tree = self.etrees[e]
            word.append((_edge_region(e, tree.white_of(tree.line_index(anchor), label)), s))
        return tuple(word)


def open_along(
    X: TubularComplex,
    cycle: CycleRecord,
    labeling: HalfspaceLabeling | None = None,
    threads: int | None = None,
    backend: Backend = "word",
) -> OpenResult:
    """the complex opened along every translate of a splitting cycle"""
    root = cycle.root_record()
    labeling = labeling or halfspace_labels(X, root)
    if labeling.K < 2:
        raise PreconditionError(f"{cycle} is not UC-separating")
    g = root.graph
    y = build_Y_prime(X, root)
    op = _Opening(X, root, labeling)

    cells = [(g, u) for u in y.on_vertices] + [("V", g, e) for e in y.on_edges]
    trees = run_in_thread_pool(
        dual_tree_at,
        [{"X": X, "cycle": root, "cell": c, "labeling": labeling, "backend": backend} for c in cells],
        threads=threads,
        desc="dual trees",
    )
    by_cell = dict(zip(cells, trees))
    op.vtrees = {u: by_cell[(g, u)] for u in y.on_vertices}
    op.etrees = {e: by_cell[("V", g, e)] for e in y.on_edges}

    # glue Y' to the regions
    place: t.Dict[str, str] = {}
    for stub, (u, half) in sorted(y.half_stubs.items()):
        tree = op.vtrees[u]
        place[stub] = _region(u, tree.find_white(op.half_vector(tree, half)))
    base_vertex = {v: v for v in y.kept.vertices if v not in y.half_stubs}
    for u, tree in op.vtrees.items():
        for w in range(tree.white_count):
            base_vertex[_region(u, w)] = u
    edges: t.Dict[str, t.Tuple[str, str]] = {
        e: (place.get(a, a), place.get(b, b)) for e, (a, b) in y.kept.edges.items()
    }
    base_edge = {e: e for e in edges}
    for e in y.on_edges:
        for w, ends in op.edge_ends(e).items():
            edges[_edge_region(e, w)] = ends
            base_edge[_edge_region(e, w)] = e

    # squares on the cycle move to the edge region that holds them
    stubs_by_edge: t.Dict[str, t.List[SquareStub]] = defaultdict(list)
    for stub in y.square_stubs:
        stubs_by_edge[stub.edge].append(stub)
    moved: t.Dict[t.Tuple[str, str, int], str] = {}
    for e, stubs in sorted(stubs_by_edge.items()):
        for stub, w in op.square_regions(e, stubs).items():
            moved[(stub.tube, stub.end, stub.index)] = _edge_region(e, w)

    # split the carrier into its connected pieces
    carrier = nx.MultiGraph()
    carrier.add_nodes_from(base_vertex)
    for e, (a, b) in edges.items():
        carrier.add_edge(a, b, key=e)
    components = sorted((sorted(c) for c in nx.connected_components(carrier)), key=lambda c: c[0])
    taken = set(X.vertex_graphs)
    piece_of: t.Dict[str, str] = {}
    pieces = []
    graphs = {name: gr for name, gr in X.vertex_graphs.items() if name != g}
    for i, comp in enumerate(components):
        name = g if len(components) == 1 else f"{g}.{i}"
        while name in taken and name != g:
            name += "+"
        taken.add(name)
        pieces.append(name)
        members = set(comp)
        graphs[name] = SimpleGraph(
            vertices=tuple(comp),
            edges={e: ab for e, ab in sorted(edges.items()) if ab[0] in members},
            origin=X.origin(g),
        )
        for e, ab in edges.items():
            if ab[0] in members:
                piece_of[e] = name

    def rewrite(tube: Tube, end_name: str, end: AttachingCycle) -> AttachingCycle:
        if end.target != g:
            return end
        word = tuple(
            (moved.get((tube.id, end_name, i), e), s) for i, (e, s) in enumerate(end.word)
        )
        return AttachingCycle(target=piece_of[word[0][0]], word=word)

    tubes = [
        Tube(
            id=tube.id,
            length=tube.length,
            end_a=rewrite(tube, "a", tube.end_a),
            end_b=rewrite(tube, "b", tube.end_b),
        )
        for tube in X.tubes
    ]

    # the lifts of the cycle close up into one circle
    ell = len(op.root)
    circle = _fresh(taken, f"{g}~c")
    graphs[circle] = SimpleGraph(
        vertices=tuple(f"c{j}" for j in range(ell)),
        edges={f"k{j}": (f"c{j}", f"c{(j + 1) % ell}") for j in range(ell)},
        origin=X.origin(g),
    )
    new_tubes = []
    for orbit in sorted(orbits(labeling.deck), key=min):
        lam, r = min(orbit), len(orbit)
        word = op.orbit_word(lam, r)
        tube_id = f"{circle}.t{lam}"
        tubes.append(
            Tube(
                id=tube_id,
                length=r * ell,
                end_a=AttachingCycle(
                    target=circle, word=tuple((f"k{j % ell}", 1) for j in range(r * ell))
                ),
                end_b=AttachingCycle(target=piece_of[word[0][0]], word=word),
            )
        )
        new_tubes.append(tube_id)

    opened = TubularComplex(
        vertex_graphs=graphs, tubes=tuple(tubes), hyperbolic=X.hyperbolic, notes=X.notes
    )
    report = validate_complex(opened)
    if not report.ok:
        raise GluingError(f"opening along {cycle} produced an invalid complex", details=report)
    if euler_characteristic(opened) != euler_characteristic(X):
        raise GluingError(f"opening along {cycle} changed the Euler characteristic")

    eta_vertex: t.Dict[VertexRef, VertexRef] = {}
    eta_edge: t.Dict[EdgeRef, t.Tuple[EdgeRef, int]] = {}
    for name, gr in graphs.items():
        if name in pieces:
            eta_vertex.update({(name, v): (g, base_vertex[v]) for v in gr.vertices})
            eta_edge.update({(name, e): ((g, base_edge[e]), 1) for e in gr.edges})
        elif name == circle:
            for j, (e, s) in enumerate(op.root):
                eta_vertex[(name, f"c{j}")] = (g, op.graph.tail((e, s)))
                eta_edge[(name, f"k{j}")] = ((g, e), s)
        else:
            eta_vertex.update({(name, v): (name, v) for v in gr.vertices})
            eta_edge.update({(name, e): ((name, e), 1) for e in gr.edges})

    logger.info(
        f"opened along {root}: K={labeling.K}, {len(pieces)} pieces, circle {circle}, "
        f"{len(new_tubes)} new tubes"
    )
    return OpenResult(
        complex=opened,
        cycle=root,
        K=labeling.K,
        circle=circle,
        new_tubes=new_tubes,
        pieces=pieces,
        eta_vertex=eta_vertex,
        eta_edge=eta_edge,
        trees=by_cell,
    )
