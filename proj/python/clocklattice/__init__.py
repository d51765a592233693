"""Clock lattices of knot universes: heights, cycle decompositions and state lattices."""

import json

from ._core import (
    DEFAULT_CAP,
    Error,
    Instance,
    count_matchings,
    fixture_names,
    from_text,
    gamma_dot,
    grid_height_closed_form,
    height_routes,
    lattice_dot,
    load_fixture,
    require_strict,
    verify_clock_theorem,
    verify_morse,
)
from . import _core

__all__ = [
    "DEFAULT_CAP",
    "Error",
    "Instance",
    "count_matchings",
    "decompose",
    "fixture_names",
    "from_text",
    "gamma_dot",
    "grid",
    "grid_height_closed_form",
    "height",
    "height_routes",
    "lattice",
    "lattice_dot",
    "load_fixture",
    "parse_pd",
    "require_strict",
    "spanning_tree_count",
    "verify_clock_theorem",
    "verify_morse",
]


def parse_pd(code, stars=None):
    return from_text(code, stars)


def grid(m, n):
    """Balanced graph of an m x n grid of squares (both odd)."""
    return load_fixture(f"grid_{m}_{n}")


def height(instance, cap=DEFAULT_CAP):
    return height_routes(instance, cap)["height"]


def spanning_tree_count(instance):
    return int(_core._spanning_tree_count(instance))


def decompose(instance, route="symdiff"):
    return json.loads(_core._decomposition_json(instance, route))


def lattice(instance, cap=DEFAULT_CAP):
    return json.loads(_core._lattice_json(instance, cap))
