"""Exact computer algebra for fused Specht polynomials, valenced
Temperley-Lieb actions, and degenerate conformal blocks at central
charge one.  All arithmetic is over the rationals; there is no floating
point anywhere in the verification paths (floats appear only in the
numeric shadow checks that guard the exact pipeline).
"""

from .backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
