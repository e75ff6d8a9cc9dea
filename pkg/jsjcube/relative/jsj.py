from __future__ import annotations

import typing as t

from loguru import logger
from pydantic import BaseModel, Field

from jsjcube.complex.brady_meier import brady_meier_check
from jsjcube.complex.models import TubularComplex
from jsjcube.config.config import Configs
from jsjcube.errors import CertificationError, GluingError, PreconditionError
from jsjcube.opening.assemble import decomposition_of, finish_decomposition
from jsjcube.opening.decomposition import DecompositionGraph, VertexKind
from jsjcube.opening.dual_tree import Backend
from jsjcube.opening.iterate import build_X_doubleprime, build_X_prime
from jsjcube.opening.pipeline import Provenance
from jsjcube.relative.complex import CENTRAL, build_relative_complex, central_factor, circle_name
from jsjcube.relative.family import FreeGroupFamily, NormalizationReport, normalize_family
from jsjcube.relative.whitehead import whitehead_reduce
from jsjcube.separation.classify import splitting_cycle_list


class RelativeResult(BaseModel):
    decomposition: DecompositionGraph
    family: FreeGroupFamily
    """the normalized family the complex was built from"""
    report: NormalizationReport
    peripheral: t.Dict[int, str] = Field(default_factory=dict)
    """class index in ``family`` -> id of its peripheral cyclic vertex"""
    whitehead_reduced: bool = False
    provenance: Provenance = Field(default_factory=lambda: Provenance(command="relative-jsj"))


def certified_complex(family: FreeGroupFamily) -> t.Tuple[TubularComplex, FreeGroupFamily, bool]:
    """the relative complex of the family, or of its Whitehead reduction, whichever is Brady-Meier"""
    X = build_relative_complex(family)
    ok, witness = brady_meier_check(X)
    if ok:
        return X, family, False
    logger.info(f"relative complex of {family} is not Brady-Meier at {witness}; trying a Whitehead reduction")
    reduced = whitehead_reduce(family)
    if reduced != family:
        X = build_relative_complex(reduced)
        ok, witness = brady_meier_check(X)
        if ok:
            return X, reduced, True
    raise CertificationError(
        f"cannot certify that F{family.rank} is freely indecomposable relative to {family}",
        details=[str(witness)],
    )


def central_part(dg: DecompositionGraph, classes: int) -> t.Tuple[DecompositionGraph, t.Dict[int, str]]:
    """the vertices over the central graph, plus one peripheral cyclic vertex per word"""
    keep = {}
    peripheral: t.Dict[int, str] = {}
    for v in dg.vertices:
        owned = [i for i in range(classes) if circle_name(i) in v.origin]
        if owned:
            if v.kind != VertexKind.CYCLIC:
                raise GluingError(f"peripheral circle of word {owned[0]} ended in a {v.kind} vertex {v.id}")
            for i in owned:
                peripheral[i] = v.id
            keep[v.id] = v.model_copy(update={"peripheral": True})
        elif CENTRAL in v.origin:
            keep[v.id] = v
    missing = [i for i in range(classes) if i not in peripheral]
    if missing:
        raise GluingError(f"no peripheral vertex for words {missing}")
    edges = [e for e in dg.edges if e.cyclic in keep and e.other in keep]
    return DecompositionGraph(vertices=list(keep.values()), edges=edges), peripheral


def relative_jsj(
    family: FreeGroupFamily,
    max_word_len: int | None = None,
    threads: int | None = None,
    backend: Backend = "word",
) -> RelativeResult:
    """the JSJ decomposition of a free group relative to a family of cyclic words"""
    normalized, report = normalize_family(family)
    if not normalized.words:
        raise PreconditionError(
            f"F{family.rank} is freely decomposable relative to the empty family: no one-ended certificate"
        )
    if normalized.rank == 1:
        raise PreconditionError("no JSJ: peripheral word surjects")

    X, used, reduced = certified_complex(normalized)
    f = central_factor(used)
    clamp = (max_word_len or Configs.limits_config.max_word_len) * f
    logger.info(f"relative JSJ of {used}: central factor {f}, cycle length clamp {clamp}")

    found = splitting_cycle_list(X, max_len=clamp, graphs=[CENTRAL], threads=threads)
    prime = build_X_prime(X, found.cycles, threads=threads, backend=backend)
    final = build_X_doubleprime(prime.complex)
    dg, peripheral = central_part(decomposition_of(final), len(used.words))
    dg = finish_decomposition(dg)
    return RelativeResult(
        decomposition=dg,
        family=used,
        report=report,
        peripheral=peripheral,
        whitehead_reduced=reduced,
        provenance=Provenance(
            command="relative-jsj",
            max_cycle_len=found.max_len,
            theoretical_cap=str(found.theoretical_cap),
            truncated=found.truncated,
            cycles=[str(c) for c in found.cycles],
            opened=[str(c) for c in prime.opened],
        ),
    )
