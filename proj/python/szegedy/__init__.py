"""Szegedy quantum-walk circuits: synthesis, verification, quantum PageRank."""

from ._szegedy import *  # noqa: F401,F403
from ._szegedy import __doc__  # noqa: F401

__version__ = "0.1.0"
