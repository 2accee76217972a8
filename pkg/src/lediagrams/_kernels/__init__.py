"""Grid kernels: the compiled core when available, else the pure-Python twin.

Set ``LEDIAGRAMS_PURE=1`` to force the fallback.  ``BACKEND`` names the one
in use; both modules are importable directly for parity tests.
"""
import os

from . import _purepy

if os.environ.get("LEDIAGRAMS_PURE"):
    kernel = _purepy
    BACKEND = "python"
else:
    try:
        from . import _core as kernel
        BACKEND = "cython"
    except ImportError:
        kernel = _purepy
        BACKEND = "python"

HOLE = kernel.HOLE
PHI, PHI_INV, PHI2, PHI2_INV = kernel.PHI, kernel.PHI_INV, kernel.PHI2, kernel.PHI2_INV
X_MASK = kernel.X_MASK
LE_MASK = kernel.LE_MASK
MAX_DIM = kernel.MAX_DIM

__all__ = ["kernel", "BACKEND", "HOLE", "PHI", "PHI_INV", "PHI2", "PHI2_INV",
           "X_MASK", "LE_MASK", "MAX_DIM"]
