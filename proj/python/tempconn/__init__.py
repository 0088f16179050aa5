"""Reachability and connected components in temporal graphs."""

from ._core import (
    TemporalGraph,
    TempconnError,
    components,
    find_component,
    is_component,
    is_connected_set,
    reach_profile,
    reaches,
    run_cli,
)

__all__ = [
    "TemporalGraph",
    "TempconnError",
    "components",
    "find_component",
    "is_component",
    "is_connected_set",
    "reach_profile",
    "reaches",
    "run_cli",
]
