"""Hyperbolic-valued fuzzy sets: arithmetic, set operations, convexity and separation."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
