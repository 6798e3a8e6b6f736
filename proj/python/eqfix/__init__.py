"""Exact Burnside ring invariants for finite group actions."""

from eqfix._core import (
    Error,
    InputError,
    PreconditionError,
    Group,
    Subgroup,
    Representation,
    LinearMap,
    make_group,
    subgroup,
    subgroup_from_members,
    trivial_subgroup,
    full_subgroup,
    class_count,
    class_representatives,
    class_of,
    normalizer,
    weyl_group,
    is_subconjugate,
    promote,
    table_of_marks,
    marks,
    from_marks,
    mul,
    format_element,
    eta,
    induce,
    restrict,
    representation,
    trivial_representation,
    restrict_representation,
    fixed_subspace_dimension,
    linear_map,
    equivariant_degree,
    lefschetz_from_orbits,
    lefschetz_from_marks,
    hopf_lefschetz,
    fuller_single,
    fuller_detect,
    run_scene,
)

__all__ = [
    "Error",
    "InputError",
    "PreconditionError",
    "Group",
    "Subgroup",
    "Representation",
    "LinearMap",
    "make_group",
    "subgroup",
    "subgroup_from_members",
    "trivial_subgroup",
    "full_subgroup",
    "class_count",
    "class_representatives",
    "class_of",
    "normalizer",
    "weyl_group",
    "is_subconjugate",
    "promote",
    "table_of_marks",
    "marks",
    "from_marks",
    "mul",
    "format_element",
    "eta",
    "induce",
    "restrict",
    "representation",
    "trivial_representation",
    "restrict_representation",
    "fixed_subspace_dimension",
    "linear_map",
    "equivariant_degree",
    "lefschetz_from_orbits",
    "lefschetz_from_marks",
    "hopf_lefschetz",
    "fuller_single",
    "fuller_detect",
    "run_scene",
]
