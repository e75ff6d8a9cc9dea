"""
The ``.tgg`` text format for tubular complexes::

    # comment
    assert hyperbolic
    note <free text>
    vgraph A
      v o
      e a o o
    endvgraph
    tube T 4
      end A a b -a -b
      end B a b -a -b
    endtube
"""

from __future__ import annotations

import re
import typing as t

from jsjcube.complex.models import (
    AttachingCycle,
    SimpleGraph,
    Tube,
    TubularComplex,
    format_token,
    parse_token,
)
from jsjcube.complex.subdivision import make_loop_free
from jsjcube.complex.validation import validate_complex
from jsjcube.errors import InputSyntaxError

NAME = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.~/@'+]*$")


class _Line(t.NamedTuple):
    number: int
    words: t.List[t.Tuple[int, str]]
    """(column, text) of each whitespace separated word"""

    @property
    def keyword(self) -> str:
        return self.words[0][1]

    def fail(self, message: str, index: int = 0) -> InputSyntaxError:
        column = self.words[index][0] if index < len(self.words) else self.words[-1][0]
        return InputSyntaxError(message, self.number, column)


def split_lines(text: str) -> t.Iterator[_Line]:
    """non-empty lines with ``#`` comments removed"""
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        words = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if words:
            yield _Line(number, words)


def check_name(line: _Line, index: int) -> str:
    if index >= len(line.words):
        raise line.fail(f"{line.keyword}: missing name", len(line.words) - 1)
    name = line.words[index][1]
    if not NAME.match(name):
        raise line.fail(f"invalid name {name!r}", index)
    return name


def _parse_vgraph(lines: t.Iterator[_Line], head: _Line) -> t.Tuple[str, SimpleGraph]:
    name = check_name(head, 1)
    vertices: t.List[str] = []
    edges: t.Dict[str, t.Tuple[str, str]] = {}
    for line in lines:
        if line.keyword == "endvgraph":
            if not vertices:
                raise line.fail(f"vertex graph {name} has no vertices")
            return name, SimpleGraph(vertices=tuple(vertices), edges=edges)
        if line.keyword == "v":
            for i in range(1, len(line.words)):
                v = check_name(line, i)
                if v in vertices:
                    raise line.fail(f"duplicate vertex {v!r} in {name}", i)
                vertices.append(v)
        elif line.keyword == "e":
            if len(line.words) != 4:
                raise line.fail("expected: e <id> <v1> <v2>")
            e = check_name(line, 1)
            if e in edges:
                raise line.fail(f"duplicate edge {e!r} in {name}", 1)
            ends = []
            for i in (2, 3):
                v = line.words[i][1]
                if v not in vertices:
                    raise line.fail(f"unknown vertex {v!r} in {name}", i)
                ends.append(v)
            edges[e] = (ends[0], ends[1])
        else:
            raise line.fail(f"unexpected {line.keyword!r} inside vgraph {name}")
    raise head.fail(f"vgraph {name} is not closed by endvgraph")


def _parse_tube(lines: t.Iterator[_Line], head: _Line, graphs: t.Mapping[str, SimpleGraph]) -> Tube:
    name = check_name(head, 1)
    if len(head.words) != 3 or not head.words[2][1].isdigit():
        raise head.fail("expected: tube <name> <length>", min(2, len(head.words) - 1))
    length = int(head.words[2][1])
    ends: t.List[AttachingCycle] = []
    for line in lines:
        if line.keyword == "endtube":
            if len(ends) != 2:
                raise line.fail(f"tube {name} needs exactly two end lines, got {len(ends)}")
            return Tube(id=name, length=length, end_a=ends[0], end_b=ends[1])
        if line.keyword != "end":
            raise line.fail(f"unexpected {line.keyword!r} inside tube {name}")
        if len(ends) == 2:
            raise line.fail(f"tube {name} has more than two ends")
        target = line.words[1][1] if len(line.words) > 1 else ""
        if target not in graphs:
            raise line.fail(f"unknown vertex graph {target!r}", 1)
        word = []
        for i in range(2, len(line.words)):
            tok = parse_token(line.words[i][1])
            if tok[0] not in graphs[target].edges:
                raise line.fail(f"unknown edge {tok[0]!r} of {target}", i)
            word.append(tok)
        ends.append(AttachingCycle(target=target, word=tuple(word)))
    raise head.fail(f"tube {name} is not closed by endtube")


def parse_tgg(text: str) -> TubularComplex:
    """parse, remove loops and parallel edges, and validate"""
    graphs: t.Dict[str, SimpleGraph] = {}
    tubes: t.List[Tube] = []
    hyperbolic = False
    notes: t.List[str] = []
    lines = split_lines(text)
    for line in lines:
        if line.keyword == "vgraph":
            name, graph = _parse_vgraph(lines, line)
            if name in graphs:
                raise line.fail(f"duplicate vertex graph {name!r}", 1)
            graphs[name] = graph
        elif line.keyword == "tube":
            tube = _parse_tube(lines, line, graphs)
            if any(tube.id == other.id for other in tubes):
                raise line.fail(f"duplicate tube {tube.id!r}", 1)
            tubes.append(tube)
        elif line.keyword == "assert":
            if len(line.words) != 2 or line.words[1][1] != "hyperbolic":
                raise line.fail("expected: assert hyperbolic", 1 if len(line.words) > 1 else 0)
            hyperbolic = True
        elif line.keyword == "note":
            notes.append(" ".join(w for _, w in line.words[1:]))
        else:
            raise line.fail(f"unknown keyword {line.keyword!r}")
    if not graphs:
        raise InputSyntaxError("no vertex graphs", 1, 1)
    X = TubularComplex(vertex_graphs=graphs, tubes=tuple(tubes), hyperbolic=hyperbolic, notes=tuple(notes))
    X = make_loop_free(X)
    validate_complex(X).raise_for_violations()
    return X


def emit_tgg(X: TubularComplex) -> str:
    out = []
    if X.hyperbolic:
        out.append("assert hyperbolic")
    out.extend(f"note {note}" for note in X.notes)
    for name in sorted(X.vertex_graphs):
        graph = X.vertex_graphs[name]
        out.append(f"vgraph {name}")
        out.append("  v " + " ".join(graph.vertices))
        for e in sorted(graph.edges):
            a, b = graph.edges[e]
            out.append(f"  e {e} {a} {b}")
        out.append("endvgraph")
    for tube in sorted(X.tubes, key=lambda tb: tb.id):
        out.append(f"tube {tube.id} {tube.length}")
        for end in tube.ends():
            out.append(f"  end {end.target} " + " ".join(format_token(tok) for tok in end.word))
        out.append("endtube")
    return "\n".join(out) + "\n"
