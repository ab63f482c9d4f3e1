"""Variance Gamma and Student Levy processes.

Closed-form densities and chfs, exact mixture weights of the T(3) process at
integer times, Levy triplets (closed-form and extracted numerically from the
chf), and jump-driven Ornstein-Uhlenbeck simulation.
"""

from ._levymix import *  # noqa: F401,F403
from ._levymix import __version__  # noqa: F401
