"""Oriented maximal Wicks forms: the one-face duals of 1-vertex triangulations."""

__version__ = "0.1.0"

from .count import (MassReport, feasible_params, mass_m1, mass_m2, mass_m3, mass_m6,
                    pointed_count, recursion_check, report)
from .surface import SurfaceMap, VertexSign, build_surface_map, genus, is_maximal, vertex_signs
from .symmetry import AutGroup, SymmetryParams, automorphisms, canonical_form, symmetry_parameters
from .word import Letter, WicksWord, parse_word, validate

__all__ = [
    "AutGroup", "Letter", "MassReport", "SurfaceMap", "SymmetryParams", "VertexSign", "WicksWord",
    "automorphisms", "build_surface_map", "canonical_form", "feasible_params", "genus", "is_maximal",
    "mass_m1", "mass_m2", "mass_m3", "mass_m6", "parse_word", "pointed_count", "recursion_check",
    "report", "symmetry_parameters", "validate", "vertex_signs",
]
