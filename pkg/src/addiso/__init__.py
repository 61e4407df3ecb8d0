"""Additive codes over a field pair K in L: column spaces, isometries, extendibility."""

from .codes import GenMatrix, SpaceTuple, column_space, space_tuple, weight_distribution
from .errors import AddisoError
from .gf_tower import FieldPair, make_field_pair, parse_field
from .isometry import (
    CodeMap,
    MonomialMap,
    is_extendible_bruteforce,
    is_extendible_tuples,
    is_isometry_criterion,
    is_isometry_direct,
)
from .solutions import build_counterexample, indicator_table, sweep_theorem

__all__ = [
    "AddisoError",
    "CodeMap",
    "FieldPair",
    "GenMatrix",
    "MonomialMap",
    "SpaceTuple",
    "build_counterexample",
    "column_space",
    "indicator_table",
    "is_extendible_bruteforce",
    "is_extendible_tuples",
    "is_isometry_criterion",
    "is_isometry_direct",
    "make_field_pair",
    "parse_field",
    "space_tuple",
    "sweep_theorem",
    "weight_distribution",
]
