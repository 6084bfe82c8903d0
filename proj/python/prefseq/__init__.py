"""de Bruijn sequence generation and analysis via preference functions."""

from ._prefseq import (
    PreferenceFunction,
    census,
    complexity,
    count_by_complexity,
    count_de_bruijn,
    enumerate_complete,
    equivalent_to_ford,
    generate,
    halt_length,
    is_complete,
    is_de_bruijn,
    prefer_higher,
    prefer_opposite,
)

__all__ = [
    "PreferenceFunction",
    "census",
    "complexity",
    "count_by_complexity",
    "count_de_bruijn",
    "enumerate_complete",
    "equivalent_to_ford",
    "generate",
    "halt_length",
    "is_complete",
    "is_de_bruijn",
    "prefer_higher",
    "prefer_opposite",
]
