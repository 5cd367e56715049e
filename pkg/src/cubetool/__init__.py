"""cubetool: finite combinatorial constructions for cube complexes.

Validation and non-positive-curvature testing, hyperplanes and specialness,
truncated universal covers with gates and half-spaces, canonical completions,
wall-graph colorings, combinatorial cusped spaces, and graph-of-groups
presentations with the gluing-equation ledger.
"""

from .complex_core import (
    CubeComplex,
    Cube,
    CubicalMap,
    VertexLink,
    Verdict,
    validate_complex,
    complex_violations,
    complex_to_data,
    complex_to_json,
    complex_from_json,
    build_complex,
    full_subcomplex,
    closure_subcomplex,
    link,
    is_npc,
    subface,
    map_from_data,
    map_to_data,
    validate_map,
    identity_map,
    compose_maps,
    maps_equal,
    is_local_isometry,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
