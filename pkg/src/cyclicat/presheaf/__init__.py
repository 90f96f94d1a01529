"""Finite truncated simplicial and cyclic sets."""

from .bipresheaf import BiPresheafMap, FinBiPresheaf, biproduct_generator
from .constructions import *  # noqa: F401,F403
from .constructions import __all__ as _construction_names
from .core import (
    FinCyclicSet,
    FinSimplicialSet,
    PresheafMap,
    act,
    compose_maps,
    compose_tables,
    constant,
    empty_like,
    evaluate,
    evaluate_ordinal,
    from_json,
    identity_map,
    initial_map,
    map_from_json,
    point,
    terminal_map,
    underlying_simplicial,
    validate,
)
from .search import count_maps, enumerate_maps, find_map, iter_maps

__all__ = [
    "BiPresheafMap",
    "FinBiPresheaf",
    "FinCyclicSet",
    "FinSimplicialSet",
    "PresheafMap",
    "act",
    "biproduct_generator",
    "compose_maps",
    "compose_tables",
    "constant",
    "count_maps",
    "empty_like",
    "enumerate_maps",
    "evaluate",
    "evaluate_ordinal",
    "find_map",
    "from_json",
    "identity_map",
    "initial_map",
    "iter_maps",
    "map_from_json",
    "point",
    "terminal_map",
    "underlying_simplicial",
    "validate",
    *_construction_names,
]
