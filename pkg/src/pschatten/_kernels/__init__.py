"""Numeric kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting
PSCHATTEN_PURE_PYTHON=1 forces the pure-Python twin (useful for debugging
and for benchmarking one against the other).
"""

import os

if os.environ.get("PSCHATTEN_PURE_PYTHON", "") not in ("", "0"):
    from . import pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import pykernels as _impl  # type: ignore[no-redef]

        BACKEND = "python"

as_coeffs = _impl.as_coeffs
poly_ratio = _impl.poly_ratio
log_poly_ratio = _impl.log_poly_ratio
log1p_ratio_over_x = _impl.log1p_ratio_over_x
jacobi_eigenvalues = _impl.jacobi_eigenvalues

__all__ = [
    "BACKEND",
    "as_coeffs",
    "poly_ratio",
    "log_poly_ratio",
    "log1p_ratio_over_x",
    "jacobi_eigenvalues",
]
