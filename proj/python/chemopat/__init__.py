"""Chemotaxis pattern-formation toolkit.

Linear stability classification, 1-D PDE simulation, cosine-spectral
decomposition and truncated-Fourier steady states for a growing chemotactic
population.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
