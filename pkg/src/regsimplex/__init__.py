"""Exact census of regular simplices on orthogonal-circle configurations."""

from .exactnum import Quad3, Rational, cos30_table
from .lenz import (
    CircleConfig,
    Component,
    build_even_config,
    build_odd_config,
    place_on_circle,
    theorem12_partition,
)
from .census import CountReport, brute_force_structured, count_structured

__all__ = [
    "Quad3",
    "Rational",
    "cos30_table",
    "CircleConfig",
    "Component",
    "build_even_config",
    "build_odd_config",
    "place_on_circle",
    "theorem12_partition",
    "CountReport",
    "brute_force_structured",
    "count_structured",
]
