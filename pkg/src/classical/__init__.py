"""Corpos finitos e grupos clássicos de posto 1 como grupos de permutações."""

from src.classical.field import FieldElement, FieldSpec, field_make, split_prime_power
from src.classical.groups import (
    CLASSICAL_KINDS,
    COSET_KINDS,
    LabeledCoset,
    classical_group,
    diagonal_outer,
    expected_order,
    m10,
    make_coset,
    outer_coset,
    special_linear_group,
)
from src.classical.projective import ProjectivePoint, frobenius_permutation, mobius_permutation, points

__all__ = [
    "CLASSICAL_KINDS",
    "COSET_KINDS",
    "FieldElement",
    "FieldSpec",
    "LabeledCoset",
    "ProjectivePoint",
    "classical_group",
    "diagonal_outer",
    "expected_order",
    "field_make",
    "frobenius_permutation",
    "m10",
    "make_coset",
    "mobius_permutation",
    "outer_coset",
    "points",
    "special_linear_group",
    "split_prime_power",
]
