from __future__ import annotations

import typing as t
from collections import Counter

import networkx as nx
from pydantic import BaseModel, Field
from strenum import StrEnum

from jsjcube.complex.models import TubularComplex, Word, format_word, inverse_token
from jsjcube.errors import ValidationError


class ViolationCode(StrEnum):
    NON_SIMPLICIAL = "non-simplicial graph"
    DISCONNECTED_VERTEX_GRAPH = "disconnected vertex graph"
    UNKNOWN_REFERENCE = "unknown reference"
    LENGTH_MISMATCH = "tube length mismatch"
    NOT_CLOSED = "attaching word is not a closed path"
    NOT_IMMERSION = "not an immersion"
    BIGON = "bigon in a link"
    DISCONNECTED = "disconnected underlying graph"


class Violation(BaseModel):
    code: ViolationCode
    where: str = ""
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.code}"
        if self.where:
            text += f" at {self.where}"
        if self.detail:
            text += f" ({self.detail})"
        return text


class ValidationReport(BaseModel):
    violations: t.List[Violation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> t.Set[ViolationCode]:
        return {v.code for v in self.violations}

    def add(self, code: ViolationCode, where: str = "", detail: str = ""):
        self.violations.append(Violation(code=code, where=where, detail=detail))

    def raise_for_violations(self):
        if not self.ok:
            raise ValidationError(self)


def _check_word(X: TubularComplex, tube_id: str, side: str, target: str, word: Word, length: int, report: ValidationReport) -> bool:
    where = f"tube {tube_id} end {side}"
    if target not in X.vertex_graphs:
        report.add(ViolationCode.UNKNOWN_REFERENCE, where, f"vertex graph {target!r}")
        return False
    graph = X.vertex_graphs[target]
    unknown = [e for e, _ in word if e not in graph.edges]
    if unknown:
        report.add(ViolationCode.UNKNOWN_REFERENCE, where, f"edges {sorted(set(unknown))}")
        return False
    if len(word) != length:
        report.add(
            ViolationCode.LENGTH_MISMATCH, where, f"word has {len(word)} edges, tube has {length}"
        )
        return False
    sound = True
    for i, tok in enumerate(word):
        nxt = word[(i + 1) % len(word)]
        if graph.head(tok) != graph.tail(nxt):
            report.add(ViolationCode.NOT_CLOSED, where, f"break after position {i}")
            return False
        if len(word) > 1 and nxt == inverse_token(tok):
            report.add(
                ViolationCode.NOT_IMMERSION, where, f"backtracking at position {i}: {format_word((tok, nxt))}"
            )
            sound = False
    return sound


def validate_complex(raw: TubularComplex) -> ValidationReport:
    """check every structural invariant of a tubular complex; never raises"""
    report = ValidationReport()

    for name in sorted(raw.vertex_graphs):
        graph = raw.vertex_graphs[name]
        vertices = set(graph.vertices)
        bad = [e for e, (a, b) in graph.edges.items() if a not in vertices or b not in vertices]
        if bad:
            report.add(ViolationCode.UNKNOWN_REFERENCE, f"graph {name}", f"edges {sorted(bad)}")
            continue
        loops = sorted(e for e, (a, b) in graph.edges.items() if a == b)
        if loops:
            report.add(ViolationCode.NON_SIMPLICIAL, f"graph {name}", f"loops {loops}")
        elif graph.has_parallel_edges():
            report.add(ViolationCode.NON_SIMPLICIAL, f"graph {name}", "parallel edges")
        if not graph.is_connected():
            report.add(ViolationCode.DISCONNECTED_VERTEX_GRAPH, f"graph {name}")

    words_sound = True
    for tube in raw.tubes:
        if tube.length < 1:
            report.add(ViolationCode.LENGTH_MISMATCH, f"tube {tube.id}", "non-positive length")
            words_sound = False
            continue
        for side, end in (("A", tube.end_a), ("B", tube.end_b)):
            if not _check_word(raw, tube.id, side, end.target, end.word, tube.length, report):
                words_sound = False

    if raw.vertex_graphs and not nx.is_connected(raw.underlying_graph()):
        report.add(ViolationCode.DISCONNECTED)

    if words_sound and not report.codes() & {ViolationCode.UNKNOWN_REFERENCE}:
        sc = raw.squares
        for v in sc.vertices:
            pairs = Counter(
                frozenset(sc.corner_halves(sq, k)) for sq, k in sc.corners_at[v]
            )
            for pair, count in sorted(pairs.items(), key=lambda kv: sorted(kv[0])):
                if count > 1:
                    halves = ", ".join(f"{h[0][2]}@{h[1]}" for h in sorted(pair))
                    report.add(ViolationCode.BIGON, f"vertex {v[0]}:{v[1]}", halves)
    return report
