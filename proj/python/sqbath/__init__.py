"""Dynamics of open quantum systems coupled to non-Markovian squeezed baths.

Thin re-export of the compiled core: dense operator algebra, squeezed-bath
correlation functions, the adiabatic and XY-chain models, the coupled
master-equation integrator with its Markovian Lindblad oracle, and the
config-driven run/sweep front end shared with the `sqbath` CLI.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
