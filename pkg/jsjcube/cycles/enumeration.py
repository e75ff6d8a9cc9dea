from __future__ import annotations

import typing as t

from loguru import logger

from jsjcube.complex.models import SimpleGraph, Token, TubularComplex, inverse_token
from jsjcube.config.config import Configs
from jsjcube.cycles.records import CycleRecord, normalize_cycle
from jsjcube.cycles.words import canonical, token_key
from jsjcube.errors import ResourceLimitError


def _closed_walks(graph: SimpleGraph, start: Token, length: int) -> t.Iterator[t.List[Token]]:
    """immersed walks of ``length`` tokens beginning with ``start`` whose tokens never undercut it"""
    floor = token_key(start)
    origin = graph.tail(start)
    walk = [start]

    def allowed(tok: Token) -> bool:
        return token_key(tok) >= floor and token_key(inverse_token(tok)) >= floor

    def extend():
        if len(walk) == length:
            last = walk[-1]
            if graph.head(last) == origin and (length == 1 or start != inverse_token(last)):
                yield list(walk)
            return
        back = inverse_token(walk[-1])
        for tok in sorted(graph.outgoing(graph.head(walk[-1])), key=token_key):
            if tok == back or not allowed(tok):
                continue
            walk.append(tok)
            yield from extend()
            walk.pop()

    if allowed(start):
        yield from extend()


def enumerate_cycles(
    X: TubularComplex | SimpleGraph,
    graph_name: str = "",
    max_len: int = 0,
    max_cycles: int | None = None,
) -> t.Iterator[CycleRecord]:
    """
    Every immersed cycle of at most ``max_len`` edges, one canonical word per class
    under rotation and inversion, ordered by length and then by word.
    """
    graph = X.graph(graph_name) if isinstance(X, TubularComplex) else X
    cap = max_cycles if max_cycles is not None else Configs.limits_config.max_cycles
    tokens = sorted(
        {tok for v in graph.vertices for tok in graph.outgoing(v)}, key=token_key
    )
    count = 0
    for length in range(1, max_len + 1):
        for start in tokens:
            for walk in _closed_walks(graph, start, length):
                word = tuple(walk)
                if canonical(word) != word:
                    continue
                count += 1
                if count > cap:
                    raise ResourceLimitError(
                        f"more than {cap} cycles in {graph_name or 'graph'} up to length {max_len}",
                        details={"max_cycles": cap},
                    )
                yield normalize_cycle(word, graph=graph_name)
    logger.debug(f"enumerated {count} cycle classes in {graph_name or 'graph'} up to length {max_len}")
