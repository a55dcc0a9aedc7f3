from chevcheck.algebra.centralizer import (
    Subspace,
    lie_centralizer,
    lie_fixed_space,
    reductive_pair_check,
    separability_probe,
)
from chevcheck.algebra.chevalley import (
    ChevalleyForm,
    LieAlgebraOverField,
    LieVector,
    chevalley_build,
    divided_exponential,
    lie_reduce,
)
from chevcheck.algebra.field import (
    FieldElement,
    FiniteField,
    RatFuncField,
    field_embedding,
    field_enumerate,
    field_from_order,
    field_make,
    ratfunc_derivative,
    ratfunc_field,
)
from chevcheck.algebra.group import GroupElement, root_element, torus_element, weyl_rep
from chevcheck.algebra.parabolic import ParabolicDatum, parabolic_split
from chevcheck.algebra.rootsystem import Cocharacter, RootSystem, rootsystem_build, rootsystem_from_label
from chevcheck.algebra.subgroup import FiniteSubgroup, closure, root_subgroup

__all__ = [
    "ChevalleyForm",
    "Cocharacter",
    "FieldElement",
    "FiniteField",
    "FiniteSubgroup",
    "GroupElement",
    "LieAlgebraOverField",
    "LieVector",
    "ParabolicDatum",
    "RatFuncField",
    "RootSystem",
    "Subspace",
    "chevalley_build",
    "closure",
    "divided_exponential",
    "field_embedding",
    "field_enumerate",
    "field_from_order",
    "field_make",
    "lie_centralizer",
    "lie_fixed_space",
    "lie_reduce",
    "parabolic_split",
    "ratfunc_derivative",
    "ratfunc_field",
    "reductive_pair_check",
    "root_element",
    "root_subgroup",
    "rootsystem_build",
    "rootsystem_from_label",
    "separability_probe",
    "torus_element",
    "weyl_rep",
]
