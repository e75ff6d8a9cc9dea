from __future__ import annotations

import typing as t

from loguru import logger
from pydantic import BaseModel, Field

from jsjcube import __version__
from jsjcube.complex.brady_meier import is_closed_surface
from jsjcube.complex.models import TubularComplex
from jsjcube.complex.validation import validate_complex
from jsjcube.errors import ClosedSurfaceError
from jsjcube.opening.assemble import assemble_jsj
from jsjcube.opening.decomposition import DecompositionGraph
from jsjcube.opening.dual_tree import Backend
from jsjcube.opening.iterate import build_X_doubleprime, build_X_prime
from jsjcube.separation.classify import require_brady_meier, splitting_cycle_list


class Provenance(BaseModel):
    tool_version: str = __version__
    command: str = "jsj"
    max_cycle_len: int | None = None
    theoretical_cap: str | None = None
    """the length bound for repetitive cycles, as a decimal string"""
    truncated: bool = False
    cycles: t.List[str] = Field(default_factory=list)
    opened: t.List[str] = Field(default_factory=list)


class JsjResult(BaseModel):
    decomposition: DecompositionGraph
    provenance: Provenance = Field(default_factory=Provenance)
    final_complex: TubularComplex | None = Field(default=None, exclude=True)


def jsj(
    X: TubularComplex,
    max_cycle_len: int | None = None,
    threads: int | None = None,
    backend: Backend = "word",
) -> JsjResult:
    """the JSJ decomposition of the fundamental group of a Brady-Meier tubular complex"""
    validate_complex(X).raise_for_violations()
    require_brady_meier(X)
    if is_closed_surface(X):
        raise ClosedSurfaceError()

    logger.info("enumerating splitting cycles")
    found = splitting_cycle_list(X, max_len=max_cycle_len, threads=threads)
    logger.info(f"opening along {len(found.cycles)} splitting cycles")
    prime = build_X_prime(X, found.cycles, threads=threads, backend=backend)
    logger.info("removing tubes between circles")
    final = build_X_doubleprime(prime.complex)
    decomposition = assemble_jsj(final)
    return JsjResult(
        decomposition=decomposition,
        provenance=Provenance(
            max_cycle_len=found.max_len,
            theoretical_cap=str(found.theoretical_cap),
            truncated=found.truncated,
            cycles=[str(c) for c in found.cycles],
            opened=[str(c) for c in prime.opened],
        ),
        final_complex=final,
    )
