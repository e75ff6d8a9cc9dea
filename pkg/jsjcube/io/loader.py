from __future__ import annotations

import typing as t
from pathlib import Path

from loguru import logger

from jsjcube.complex.models import TubularComplex
from jsjcube.errors import InputSyntaxError
from jsjcube.io.gog import parse_gog
from jsjcube.io.tgg import parse_tgg, split_lines
from jsjcube.relative.general import GraphOfFreeGroups

InputKind = t.Literal["tgg", "gog"]


def sniff(text: str) -> InputKind:
    """``gog`` if the first statement is a ``v <name> rank <r>`` line, else ``tgg``"""
    for line in split_lines(text):
        words = [w for _, w in line.words]
        if words[0] == "v" and len(words) > 2 and words[2] == "rank":
            return "gog"
        return "tgg"
    raise InputSyntaxError("empty input", 1, 1)


def parse_input(text: str, kind: InputKind | None = None) -> TubularComplex | GraphOfFreeGroups:
    kind = kind or sniff(text)
    return parse_gog(text) if kind == "gog" else parse_tgg(text)


def load_input(path: str | Path, kind: InputKind | None = None) -> TubularComplex | GraphOfFreeGroups:
    path = Path(path)
    if kind is None and path.suffix in (".tgg", ".gog"):
        kind = path.suffix[1:]
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise InputSyntaxError(f"{path} is not UTF-8 text", 1, 1) from e
    logger.debug(f"reading {path} as {kind or sniff(text)}")
    return parse_input(text, kind)
