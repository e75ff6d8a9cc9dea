from __future__ import annotations

import typing as t

from loguru import logger
from pydantic import BaseModel, Field

from jsjcube.complex.brady_meier import brady_meier_check
from jsjcube.complex.models import TubularComplex, Word
from jsjcube.config.config import Configs
from jsjcube.cycles.bounds import repetitive_length_bound
from jsjcube.cycles.enumeration import enumerate_cycles
from jsjcube.cycles.records import CycleRecord, normalize_cycle, power_of
from jsjcube.errors import NotBradyMeierError, PreconditionError
from jsjcube.separation.crossing import has_self_crossing
from jsjcube.separation.halfspace import HalfspaceLabeling, halfspace_labels
from jsjcube.separation.permutations import (
    Perm,
    is_transitive,
    order,
    power,
    proper_subsets,
    setwise_period,
)
from jsjcube.spheres.builders import quotient_sphere
from jsjcube.utils.parallel import run_in_thread_pool


class ClassificationRecord(BaseModel):
    graph: str
    word: Word
    root: Word
    exponent: int
    K: int
    deck: t.List[int]
    strongly_separating: bool
    stabiliser_condition: bool
    """some proper set of half-spaces has stabiliser exactly the cycle's group"""
    no_self_crossing: bool
    representative_power: int | None = None
    """least power of the root that is a splitting cycle"""
    splitting: bool

    def cycle(self) -> CycleRecord:
        return CycleRecord(
            graph=self.graph, word=self.word, root=self.root, exponent=self.exponent
        )

    def representative(self) -> CycleRecord | None:
        if self.representative_power is None:
            return None
        return power_of(self.cycle().root_record(), self.representative_power)


class SplittingCycleList(BaseModel):
    cycles: t.List[CycleRecord] = Field(default_factory=list)
    records: t.List[ClassificationRecord] = Field(default_factory=list)
    max_len: int
    theoretical_cap: int
    truncated: bool


def require_brady_meier(X: TubularComplex) -> None:
    ok, witness = brady_meier_check(X)
    if not ok:
        raise NotBradyMeierError(witness)


def is_strongly_uc_separating(X: TubularComplex, cycle: CycleRecord) -> bool:
    return not quotient_sphere(X, cycle.path()).is_connected()


def separating_power(
    X: TubularComplex, cycle: CycleRecord, labeling: HalfspaceLabeling | None = None
) -> t.Tuple[int, CycleRecord] | None:
    """least ``n`` such that the ``n``-th power of the cycle is strongly UC-separating"""
    labeling = labeling or halfspace_labels(X, cycle)
    if labeling.K < 2:
        raise PreconditionError(f"{cycle} is not UC-separating")
    step = power(labeling.deck, cycle.exponent)
    for n in range(1, order(step) + 1):
        if not is_transitive(power(step, n)):
            return n, power_of(cycle, n)
    return None


def stabiliser_condition(deck: Perm, exponent: int) -> bool:
    return any(setwise_period(deck, subset) == exponent for subset in proper_subsets(len(deck)))


def least_splitting_power(deck: Perm) -> int | None:
    if len(deck) < 2:
        return None
    j = 1
    while is_transitive(power(deck, j)):
        j += 1
    return j


def is_splitting_cycle(X: TubularComplex, cycle: CycleRecord, check: bool = True) -> ClassificationRecord:
    """strongly UC-separating, stabiliser of a proper set of half-spaces, and no self-crossing"""
    if check:
        require_brady_meier(X)
    labeling = halfspace_labels(X, cycle)
    K, deck = labeling.K, labeling.deck
    strongly = K >= 2 and is_strongly_uc_separating(X, cycle)
    if K >= 2 and strongly == is_transitive(power(deck, cycle.exponent)):
        logger.warning(f"{cycle}: quotient sphere disagrees with the deck action {deck}")
    stabiliser = K >= 2 and stabiliser_condition(deck, cycle.exponent)
    # three or more half-spaces leave no room for a crossing
    no_crossing = K != 2 or not has_self_crossing(X, cycle)
    record = ClassificationRecord(
        graph=cycle.graph,
        word=cycle.word,
        root=cycle.root,
        exponent=cycle.exponent,
        K=K,
        deck=list(deck),
        strongly_separating=strongly,
        stabiliser_condition=stabiliser,
        no_self_crossing=no_crossing,
        representative_power=least_splitting_power(deck) if no_crossing else None,
        splitting=strongly and stabiliser and no_crossing,
    )
    logger.debug(
        f"{cycle}: K={K} strongly={strongly} stabiliser={stabiliser} "
        f"no_crossing={no_crossing} splitting={record.splitting}"
    )
    return record


def tube_cycles(X: TubularComplex, graphs: t.Iterable[str] | None = None) -> t.List[CycleRecord]:
    wanted = set(graphs) if graphs is not None else None
    out = {}
    for tube in X.tubes:
        for end in tube.ends():
            if wanted is not None and end.target not in wanted:
                continue
            rec = normalize_cycle(end.word, graph=end.target, carrier=X.graph(end.target))
            out.setdefault((rec.graph, rec.root), rec.root_record())
    return [out[k] for k in sorted(out)]


def _classify(X: TubularComplex, cycle: CycleRecord) -> ClassificationRecord:
    return is_splitting_cycle(X, cycle, check=False)


def splitting_cycle_list(
    X: TubularComplex,
    max_len: int | None = None,
    graphs: t.Iterable[str] | None = None,
    threads: int | None = None,
    include_tubes: bool = True,
) -> SplittingCycleList:
    """
    Splitting cycles up to length ``max_len``, one per commensurability class, always
    including the attaching cycles of tubes. The theoretical length bound is clamped
    by ``max_len`` (default ``max_cycle_len``).
    """
    require_brady_meier(X)
    E, F = X.vertical_edge_count, X.square_count
    cap = repetitive_length_bound(E, max(F, 1), 3, strict=False).cap
    clamp = max_len if max_len is not None else Configs.limits_config.max_cycle_len
    clamp = min(clamp, cap)
    truncated = clamp < cap
    if truncated:
        logger.warning(
            f"enumerating cycles up to length {clamp}; the theoretical bound is a "
            f"{cap.bit_length()}-bit number"
        )

    names = sorted(graphs) if graphs is not None else sorted(X.vertex_graphs)
    candidates: t.Dict[t.Tuple[str, Word], CycleRecord] = {}
    for name in names:
        if X.graph(name).is_circle():
            continue
        for rec in enumerate_cycles(X, name, clamp):
            candidates.setdefault((name, rec.root), rec.root_record())
    forced = set()
    if include_tubes:
        for rec in tube_cycles(X):
            if X.graph(rec.graph).is_circle():
                continue
            candidates.setdefault((rec.graph, rec.root), rec)
            forced.add((rec.graph, rec.root))
    ordered = [candidates[k] for k in sorted(candidates)]
    logger.info(f"classifying {len(ordered)} candidate cycles up to length {clamp}")

    records = run_in_thread_pool(
        _classify,
        [{"X": X, "cycle": c} for c in ordered],
        threads=threads,
        desc="classify cycles",
    )

    chosen: t.Dict[t.Tuple[str, Word], CycleRecord] = {}
    for cycle, record in zip(ordered, records):
        rep = cycle if record.splitting else record.representative()
        if rep is None or record.K < 2:
            if (cycle.graph, cycle.root) in forced:
                logger.warning(f"tube cycle {cycle} does not classify as splitting")
            continue
        chosen[(rep.graph, rep.root)] = rep
    cycles = [chosen[k] for k in sorted(chosen)]
    logger.info(f"{len(cycles)} splitting cycles")
    return SplittingCycleList(
        cycles=cycles,
        records=records,
        max_len=clamp,
        theoretical_cap=cap,
        truncated=truncated,
    )
