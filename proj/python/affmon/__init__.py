"""Exact monoid structures on affine spaces over Q.

Constructors for the classified families, symbolic axiom verification,
quadratic Galois twisting, norm forms of etale algebras, and automorphism
regularity checks. Everything is exact rational arithmetic; no floats.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
