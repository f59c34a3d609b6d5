"""Thermal two-point functions of the 2D Ising field theory."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
