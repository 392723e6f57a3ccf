"""Eigensolver kernel selection.

The compiled extension is used when it imported cleanly; otherwise the
pure-Python twin takes over. ``BACKEND`` records which one is active, and
both modules stay importable directly for benchmarking and cross-checks.
"""

from wedgemap._kernels import jacobi_py

try:
    from wedgemap._kernels import _jacobi as _compiled
except ImportError:
    _compiled = None

if _compiled is not None:
    jacobi_eigh = _compiled.jacobi_eigh
    BACKEND = "cython"
else:
    jacobi_eigh = jacobi_py.jacobi_eigh
    BACKEND = "python"

__all__ = ["jacobi_eigh", "BACKEND", "jacobi_py"]
