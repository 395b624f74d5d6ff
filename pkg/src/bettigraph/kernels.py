"""Kernel backend selection.

The compiled extension is used when importable; set ``BETTIGRAPH_PURE=1``
to force the pure-Python implementation.
"""
import os

from bettigraph import _kernels_py

if os.environ.get("BETTIGRAPH_PURE"):
    _impl = _kernels_py
else:
    try:
        from bettigraph import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

component_count = _impl.component_count
froberg_sums = _impl.froberg_sums
min_code = _impl.min_code
