"""Two-variable Hermite polynomials, Weyl symbols and Wigner functions."""

from ._hermiweyl import *  # noqa: F401,F403
from ._hermiweyl import __doc__  # noqa: F401
