"""Polyhedral maps with prescribed face and vertex counts.

Oriented maps, patches and expansion patches, the ring and edge-patch
constructions, growth rewrites, and a pipeline that replaces every face of
a seed map by a patch while keeping the result polyhedral.
"""

from .catalog import get_patch, get_seed
from .expansion import (
    ExpansionPatch,
    ExpansionRoles,
    edge_patch,
    has_polyhedral_property,
    ring,
    validate_expansion_patch,
)
from .growth import grow, grow_diamond, grow_square, grow_vertex
from .mapkernel import (
    MapSummary,
    OrientedMap,
    build_map,
    dual,
    from_faces,
    from_rotation,
    is_polyhedral,
    is_simple_valid_map,
    is_three_connected,
    meets_properly,
    summarize,
)
from .patchwork import (
    GrowthMarker,
    Patch,
    boundary_weights,
    glue_along,
    is_r_patch,
    is_self_fitting,
    is_w_k_gonal,
)
from .pipeline import (
    Family,
    FamilySpec,
    RealizationReport,
    check_admissible,
    expand_map,
    expand_polyhedral,
    realize_family,
)
from .search import SearchBounds, search_patch
from .sequences import CountSequence, add, bracket, proportional, scale

__all__ = [
    "CountSequence", "add", "bracket", "proportional", "scale",
    "OrientedMap", "MapSummary", "build_map", "from_faces", "from_rotation", "summarize",
    "dual", "meets_properly", "is_polyhedral", "is_simple_valid_map", "is_three_connected",
    "Patch", "GrowthMarker", "boundary_weights", "is_r_patch", "is_self_fitting",
    "is_w_k_gonal", "glue_along",
    "ExpansionPatch", "ExpansionRoles", "validate_expansion_patch", "ring", "edge_patch",
    "has_polyhedral_property",
    "grow", "grow_square", "grow_diamond", "grow_vertex",
    "get_patch", "get_seed",
    "Family", "FamilySpec", "RealizationReport", "check_admissible", "expand_map",
    "expand_polyhedral", "realize_family",
    "SearchBounds", "search_patch",
]
