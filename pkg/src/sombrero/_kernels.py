"""Backend dispatch for the eigensolver hot loops.

The Sturm bisection and inverse-iteration kernels dominate the runtime
of every eigensolver call, and their recurrences are inherently
sequential, so they are JIT-compiled with numba when available.  Setting
the environment variable SOMBRERO_PURE_NUMPY=1 (or numba being absent)
selects the plain-Python fallback in sombrero._kernels_impl instead.
Both backends run the same function bodies and give identical results;
benchmarks/compare_backends.py measures the speed difference.
"""

import os

from . import _kernels_impl as _impl

PURE_NUMPY_ENV = "SOMBRERO_PURE_NUMPY"


def _pure_requested() -> bool:
    return os.environ.get(PURE_NUMPY_ENV, "").strip().lower() in ("1", "true", "yes")


_backend = "numpy"
if not _pure_requested():
    try:
        from numba import njit
    except ImportError:
        njit = None
    if njit is not None:
        _backend = "numba"

if _backend == "numba":
    sturm_count_below = njit(cache=True)(_impl.sturm_count_below)
    smallest_eigenvalue = njit(cache=True)(_impl.smallest_eigenvalue)
    inverse_iteration = njit(cache=True)(_impl.inverse_iteration)
else:
    sturm_count_below = _impl.sturm_count_below
    smallest_eigenvalue = _impl.smallest_eigenvalue
    inverse_iteration = _impl.inverse_iteration


def backend_name() -> str:
    """Active kernel backend: 'numba' or 'numpy'."""
    return _backend
