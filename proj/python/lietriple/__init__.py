"""Exact computations for LY algebras, their cohomology and 2-term algebras.

Rationals come back as fractions.Fraction; inputs may be int, str ("3/2") or Fraction.
"""

from ._core import *  # noqa: F401,F403
from ._core import InputError, InvalidStructure, ResourceError, ConsistencyError  # noqa: F401

__version__ = "0.1.0"
