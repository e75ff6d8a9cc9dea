"""
Half-space labels of a lifted cycle.

The lift ``L`` of a primitive root is parametrised by vertex positions ``x`` in Z.
Components of the orthogonal sphere of ``p`` consecutive periods, once the count has
stopped changing under doubling, are in natural bijection with the half-spaces of
``L``; they are numbered by their least node. A window of ``L`` that starts in period
``s`` is the translate of a base window by the ``s``-th power of the deck
transformation, which acts on labels by ``deck``.
"""

from __future__ import annotations

import threading
import typing as t
from dataclasses import dataclass, field

from loguru import logger

from jsjcube.complex.models import TubularComplex, Word
from jsjcube.complex.square import SquareComplex, as_square_complex
from jsjcube.cycles.lines import CycleLine
from jsjcube.cycles.records import CycleRecord
from jsjcube.errors import GluingError, PreconditionError
from jsjcube.separation.permutations import Perm, power
from jsjcube.spheres.builders import orthogonal_sphere, segment_sphere, trace_components
from jsjcube.spheres.paths import vertical_tokens
from jsjcube.spheres.sphere import SphereGraph


@dataclass(eq=False)
class HalfspaceLabeling:
    graph: str
    root: Word
    K: int
    power: int
    """periods of the root in the stabilised window"""
    counts: t.List[int]
    """component counts for 1, 2, 4, ... periods"""
    deck: Perm
    sphere: SphereGraph

    _windows: t.Dict[int, t.Tuple[SphereGraph, t.Dict[int, int]]] = field(
        default_factory=dict, repr=False
    )
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def period(self) -> int:
        return len(self.root)

    @property
    def line(self) -> CycleLine:
        return CycleLine(self.root)

    def normalize(self, x: int, label: int) -> t.Tuple[int, int]:
        """the same half-space, described from the lift parametrised so that ``x`` is in one period"""
        s, r = divmod(x, self.period)
        return r, power(self.deck, -s)[label]

    def window(self, X, periods: int) -> t.Tuple[SphereGraph, t.Dict[int, int]]:
        """orthogonal sphere of ``periods`` periods and its component -> label map"""
        with self._lock:
            if periods in self._windows:
                return self._windows[periods]
        sphere = orthogonal_sphere(X, vertical_tokens(self.graph, self.root), power=periods)
        base = trace_components(self.sphere, sphere, 0)
        if sorted(base) != list(range(self.K)) or sorted(base.values()) != list(
            range(sphere.component_count)
        ):
            raise GluingError(
                f"stabilised labels of {self.graph} do not trace bijectively into {periods} periods"
            )
        labels = {c: lam for lam, c in base.items()}
        with self._lock:
            self._windows[periods] = (sphere, labels)
        return sphere, labels


def halfspace_labels(X: TubularComplex | SquareComplex, cycle: CycleRecord) -> HalfspaceLabeling:
    """count and label the half-spaces of a lift of the cycle's primitive root"""
    tokens = vertical_tokens(cycle.graph, cycle.root)
    N = max(1, as_square_complex(X).max_thickness)
    counts: t.List[int] = []
    sphere = None
    periods = 1
    for j in range(N + 1):
        periods = 2**j
        sphere = orthogonal_sphere(X, tokens, power=periods)
        counts.append(sphere.component_count)
        if len(counts) > 1 and counts[-1] > counts[-2]:
            logger.warning(f"component count grew under doubling for {cycle}: {counts}")
        if len(counts) > 1 and counts[-1] == counts[-2]:
            break
    K = counts[-1]

    double = orthogonal_sphere(X, tokens, power=2 * periods)
    t0 = trace_components(sphere, double, 0)
    t1 = trace_components(sphere, double, len(cycle.root))
    for trace in (t0, t1):
        if sorted(trace) != list(range(K)) or sorted(trace.values()) != list(range(K)):
            raise GluingError(f"half-space labels of {cycle} are not stable at {periods} periods")
    back = {c: lam for lam, c in t0.items()}
    deck = tuple(back[t1[lam]] for lam in range(K))

    labeling = HalfspaceLabeling(
        graph=cycle.graph,
        root=cycle.root,
        K=K,
        power=periods,
        counts=counts,
        deck=deck,
        sphere=sphere,
    )
    labeling._windows[2 * periods] = (double, back)
    logger.debug(f"{cycle}: K={K} counts={counts} deck={deck}")
    return labeling


def deck_permutation(X: TubularComplex | SquareComplex, cycle: CycleRecord) -> Perm:
    """the action of one period of the root on half-space labels"""
    return halfspace_labels(X, cycle).deck


def segment_labels(
    X: TubularComplex | SquareComplex,
    labeling: HalfspaceLabeling,
    start: int,
    length: int,
) -> t.Tuple[SphereGraph, t.Dict[int, int]]:
    """
    The sphere of the lift's segment ``[start, start + length]``, with the lift's own
    exits removed, and a half-space label for each of its components.
    """
    if length < 0:
        raise PreconditionError("segment length must be non-negative")
    ell = labeling.period
    s, offset = divmod(start, ell)
    periods = max(labeling.power, -(-(offset + length + 1) // ell))
    window, window_labels = labeling.window(X, periods)

    line = labeling.line
    seg = segment_sphere(
        X,
        vertical_tokens(labeling.graph, line.tokens(start, length)),
        pred=vertical_tokens(labeling.graph, (line.token(start - 1),))[0],
        succ=vertical_tokens(labeling.graph, (line.token(start + length),))[0],
    )
    trace = trace_components(seg, window, offset)
    twist = power(labeling.deck, s)
    labels = {c: twist[window_labels[d]] for c, d in trace.items()}
    return seg, labels
