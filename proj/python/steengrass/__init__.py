"""Exact Steenrod / Landweber-Novikov operator actions on symmetric functions
and Schubert classes of Grassmannians.

All arithmetic is exact; big integers arrive as python ints and rationals as
fractions.Fraction. Partitions are plain lists of weakly decreasing ints.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
