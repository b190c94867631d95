"""Equivariant Lefschetz invariants of cellular self-maps of finite G-CW complexes."""

from .complexes import (
    Cell,
    CellComplex,
    CellMap,
    add_maps,
    compose_maps,
    empty_complex,
    fixed_relative_data,
    generator_map,
    identity_map,
    is_valid,
    mapping_cone,
    normalize_complex,
    normalize_map,
    orbit_point,
    orbit_sphere,
    quotient_data,
    scale_map,
    solve_chain_maps,
    suspend,
    validate_complex,
    validate_map,
    wedge,
    wedge_maps,
    zero_map,
)
from .errors import EquilefError, ValidationError
from .groups import (
    FiniteGroup,
    Subgroup,
    SubgroupClass,
    WeylGroup,
    all_subgroups,
    element_classes,
    is_subconjugate,
    load_group,
    subgroup_classes,
    weyl,
)
from .invariants import (
    analytical_lefschetz,
    decompose,
    ell_component,
    fixed_orbit_index,
    fixed_orbit_report,
    homological_lefschetz,
)
from .kernels import compiled_available, default_backend
from .orbits import MorphismSum, OrbitMorphism, compose, make_morphism, morphism_set, weyl_morphism
from .rings import ConjClassSum, TomDieckElement, cc_augment, downward_augment, project
from .traces import GroupRingMatrix, MorphismMatrix, group_ring_trace, hs_trace, integer_trace

__version__ = "0.1.0"


def data_path(name):
    """Path of a bundled example file."""
    import os

    return os.path.join(os.path.dirname(__file__), "data", name)
