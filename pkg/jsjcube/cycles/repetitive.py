from __future__ import annotations

import typing as t
from collections import defaultdict

from jsjcube.complex.models import TubularComplex
from jsjcube.config.config import Configs
from jsjcube.cycles.records import CycleRecord
from jsjcube.errors import PreconditionError
from jsjcube.separation.halfspace import halfspace_labels
from jsjcube.spheres.builders import orthogonal_sphere, token_corners
from jsjcube.spheres.paths import vertical_tokens
from jsjcube.spheres.sphere import corner_key


def _repetitions(X: TubularComplex, cycle: CycleRecord) -> int:
    """largest set of visits to one edge whose squares fall in matching sphere components"""
    sc = X.squares
    tokens = vertical_tokens(cycle.graph, cycle.domain)
    sphere = orthogonal_sphere(X, tokens)
    groups: t.Dict[t.Tuple, int] = defaultdict(int)
    for i, tok in enumerate(tokens):
        signature = []
        for sq, k in sc.occurrences[tok[0]]:
            tail, _ = token_corners(sc, tok, sq, k)
            signature.append(sphere.label_of_raw(corner_key(i, sq, tail)))
        groups[(tok[0], tuple(signature))] += 1
    return max(groups.values(), default=0)


def is_k_repetitive(
    X: TubularComplex,
    cycle: CycleRecord,
    k: int,
    scan_all: bool | None = None,
    check_separating: bool = True,
) -> bool:
    """
    Some edge is crossed at least ``k`` times by the fundamental domain, and at every
    such crossing each square at the edge lands in the same sphere component.

    The answer depends on the fundamental domain; ``scan_all`` tries every rotation.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if check_separating:
        if halfspace_labels(X, cycle).K < 2:
            raise PreconditionError(f"{cycle} is not UC-separating")
    scan_all = Configs.limits_config.scan_all_domains if scan_all is None else scan_all
    starts = range(cycle.length) if scan_all else [cycle.domain_start]
    return any(_repetitions(X, cycle.with_domain(s)) >= k for s in starts)
