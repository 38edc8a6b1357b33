"""Earthquake deformations on the Teichmuller space of the once-punctured torus."""

from ._torusquake import *  # noqa: F401,F403
from ._torusquake import DomainError, NumericHorizonError  # noqa: F401
