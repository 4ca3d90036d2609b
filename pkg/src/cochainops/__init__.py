"""Operadic structure on simplicial and Hochschild cochains.

A symbolic engine for the bar-construction operad of the symmetric groups,
the surjection operad, the table reduction between them, and the interval-cut
action on normalized cochains (cup-i products, Steenrod squares), together
with sphere/cone/suspension algebras, path objects, and the brace structure
on Hochschild cochains.  Everything is exact, over Z or a prime field, and
ships with a verification battery (`cochainops.verify`).
"""

from .formal import FormalSum
from .permutations import (
    block_permutation,
    compose,
    compose_full,
    compose_partial,
    identity,
    inverse,
    koszul_sign,
    sign,
)
from . import barratt_eccles
from . import surjections
from . import table_reduction
from . import simplicial
from . import interval_cut
from . import ealgebras
from . import hochschild
from . import linalg
from . import serialize
from . import verify

__version__ = "1.0.0"

__all__ = [
    "FormalSum",
    "barratt_eccles",
    "block_permutation",
    "compose",
    "compose_full",
    "compose_partial",
    "ealgebras",
    "hochschild",
    "identity",
    "interval_cut",
    "inverse",
    "koszul_sign",
    "linalg",
    "serialize",
    "sign",
    "simplicial",
    "surjections",
    "table_reduction",
    "verify",
]
