"""
The ``.gog`` text format for graphs of free groups::

    v A rank 2
    v B rank 2
    e t A:aaabbb B:aaabbb

Lowercase letters are generators (``a`` is the first), capitals their inverses.
"""

from __future__ import annotations

import typing as t

from jsjcube.errors import InputSyntaxError, PreconditionError
from jsjcube.io.tgg import check_name, split_lines
from jsjcube.relative.family import format_letters, letters
from jsjcube.relative.general import GogEdge, GogVertex, GraphOfFreeGroups


def parse_gog(text: str) -> GraphOfFreeGroups:
    ranks: t.Dict[str, int] = {}
    vertices: t.List[GogVertex] = []
    edges: t.List[GogEdge] = []
    last = 1
    for line in split_lines(text):
        last = line.number
        if line.keyword == "v":
            if len(line.words) != 4 or line.words[2][1] != "rank" or not line.words[3][1].isdigit():
                raise line.fail("expected: v <name> rank <r>", min(len(line.words) - 1, 3))
            name = check_name(line, 1)
            if name in ranks:
                raise line.fail(f"duplicate vertex {name!r}", 1)
            ranks[name] = int(line.words[3][1])
            if ranks[name] < 1:
                raise line.fail("rank must be at least 1", 3)
            vertices.append(GogVertex(name=name, rank=ranks[name]))
        elif line.keyword == "e":
            if len(line.words) != 4:
                raise line.fail("expected: e <name> <vA>:<wordA> <vB>:<wordB>")
            name = check_name(line, 1)
            ends = []
            for i in (2, 3):
                vertex, sep, word = line.words[i][1].partition(":")
                if not sep or not word:
                    raise line.fail("expected <vertex>:<word>", i)
                if vertex not in ranks:
                    raise line.fail(f"unknown vertex {vertex!r}", i)
                allowed = set(letters(ranks[vertex]))
                bad = next((ch for ch in word if ch.lower() not in allowed), None)
                if bad is not None:
                    raise line.fail(f"letter {bad!r} is not a generator of {vertex} (rank {ranks[vertex]})", i)
                ends.append((vertex, word))
            edges.append(GogEdge(id=name, a=ends[0][0], word_a=ends[0][1], b=ends[1][0], word_b=ends[1][1]))
        else:
            raise line.fail(f"unknown keyword {line.keyword!r}")
    if not vertices:
        raise InputSyntaxError("no vertices", 1, 1)
    try:
        return GraphOfFreeGroups(vertices=tuple(vertices), edges=tuple(edges))
    except PreconditionError as e:
        raise InputSyntaxError(e.message, last, 1) from e


def emit_gog(gog: GraphOfFreeGroups) -> str:
    out = [f"v {v.name} rank {v.rank}" for v in gog.vertices]
    out.extend(
        f"e {e.id} {e.a}:{format_letters(e.word_a)} {e.b}:{format_letters(e.word_b)}" for e in gog.edges
    )
    return "\n".join(out) + "\n"
