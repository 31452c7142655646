"""Kernel backend selection.

The compiled Cython kernel is preferred when it is importable; otherwise
the pure-Python twin is used.  Setting the environment variable
``FUSEDSPECHT_PURE=1`` before import forces the pure-Python kernel (used
by the benchmark and the backend-parity tests).
"""

import os

if os.environ.get("FUSEDSPECHT_PURE") == "1":
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as kernel

poly_add = kernel.poly_add
poly_axpy = kernel.poly_axpy
poly_scale = kernel.poly_scale
poly_mul = kernel.poly_mul
poly_permute = kernel.poly_permute
binomial_divide = kernel.binomial_divide
project_blocks = kernel.project_blocks

BACKEND = kernel.BACKEND
