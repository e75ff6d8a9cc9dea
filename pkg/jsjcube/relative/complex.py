"""
The auxiliary complex of a free group relative to a family of words: a central rose,
one circle per word, and two genus-two surfaces glued along each circle.
"""

from __future__ import annotations

import typing as t

from loguru import logger

from jsjcube.complex.fixtures import genus_two_template, rose
from jsjcube.complex.models import AttachingCycle, SimpleGraph, Tube, TubularComplex
from jsjcube.complex.subdivision import subdivide_word, subdivided_graph
from jsjcube.errors import PreconditionError
from jsjcube.opening.assemble import around, circle_graph
from jsjcube.relative.family import FreeGroupFamily

CENTRAL = "central"
SURFACE_BOUNDARY_LENGTH = 8


def circle_name(i: int) -> str:
    return f"circle{i}"


def central_factor(family: FreeGroupFamily) -> int:
    """least f >= 2 with every f*|w| a multiple of 8 and at least 16"""
    lengths = [len(w) for w in family.words]
    f = 2
    while not all(
        f * n % SURFACE_BOUNDARY_LENGTH == 0 and f * n >= 2 * SURFACE_BOUNDARY_LENGTH for n in lengths
    ):
        f += 1
    return f


def build_relative_complex(family: FreeGroupFamily) -> TubularComplex:
    if not family.words:
        raise PreconditionError("the relative complex needs at least one word")
    f = central_factor(family)
    template, boundary = genus_two_template()
    graphs: t.Dict[str, SimpleGraph] = {
        CENTRAL: subdivided_graph(rose(family.rank, origin=(CENTRAL,)), f),
    }
    tubes: t.List[Tube] = []
    for i, word in enumerate(family.words):
        length = f * len(word)
        circle = circle_name(i)
        graphs[circle] = circle_graph(length).model_copy(update={"origin": (circle,)})
        tubes.append(
            Tube(
                id=f"peripheral{i}",
                length=length,
                end_a=AttachingCycle(target=CENTRAL, word=subdivide_word(word, f)),
                end_b=AttachingCycle(target=circle, word=around(length)),
            )
        )
        s = length // SURFACE_BOUNDARY_LENGTH
        for side in ("1", "2"):
            surface = f"surface{i}_{side}"
            graphs[surface] = subdivided_graph(template, s).model_copy(update={"origin": (surface,)})
            tubes.append(
                Tube(
                    id=f"surface{i}{'a' if side == '1' else 'b'}",
                    length=length,
                    end_a=AttachingCycle(target=circle, word=around(length)),
                    end_b=AttachingCycle(target=surface, word=subdivide_word(boundary, s)),
                )
            )
    logger.debug(
        f"relative complex for {family}: central factor {f}, "
        f"{len(graphs)} vertex graphs, {len(tubes)} tubes"
    )
    return TubularComplex(
        vertex_graphs=graphs,
        tubes=tuple(tubes),
        hyperbolic=True,
        notes=(f"relative complex of {family}",),
    )
