"""Linear-space order index for forward-stable NFAs.

``build`` turns a forward-stable automaton into a :class:`CfsIndex` of six
integers per state; ``CfsIndex.query(u, v)`` then decides ``u <=_FS v``.
"""

from .index import CfsIndex, build, construct, deserialize, serialize
from .nfa import Nfa, forward_stable_quotient, normalize, parse_nfa, format_nfa, validate
from .oracle import max_colex_order

__all__ = [
    "CfsIndex",
    "Nfa",
    "build",
    "construct",
    "deserialize",
    "format_nfa",
    "forward_stable_quotient",
    "max_colex_order",
    "normalize",
    "parse_nfa",
    "serialize",
    "validate",
]
