"""Refined Littlewood-Richardson coefficients by three independent engines."""

from .permutations import Permutation, longest_element
from .refined import (
    EngineDisagreement,
    EngineReport,
    bruhat_value_table,
    classical_lr_oracle,
    refined_lr,
    saturation_check,
    saturation_scan,
    symmetry_map,
)

__all__ = [
    "Permutation", "longest_element", "EngineDisagreement", "EngineReport",
    "bruhat_value_table", "classical_lr_oracle", "refined_lr", "saturation_check",
    "saturation_scan", "symmetry_map",
]
