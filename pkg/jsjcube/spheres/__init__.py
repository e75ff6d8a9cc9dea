from .builders import (
    orthogonal_sphere,
    quotient_sphere,
    regular_sphere,
    segment_sphere,
    trace_components,
    vertex_sphere,
)
from .paths import ImmersedPath
from .sphere import SphereGraph
from .splice import self_splice, splice
