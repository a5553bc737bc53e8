"""Backend selection for the enumeration kernels.

The compiled extension is used when it was built; otherwise, or when
``KNOTLATTICE_PURE_PYTHON=1`` is set, the pure-Python module is used.
"""

import os

from . import _kernels_py

if os.environ.get("KNOTLATTICE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

short_vectors = _impl.short_vectors
find_violator = _impl.find_violator
batch_flags = _impl.batch_flags
