"""Kernel backend selection.

The compiled extension is used when it imported cleanly and the group fits
in 64 bits; otherwise the pure-Python kernel runs.  Setting
``EQUILEF_PURE_PYTHON=1`` forces the fallback everywhere.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

FORCE_PURE = os.environ.get("EQUILEF_PURE_PYTHON", "") not in ("", "0")


def compiled_available():
    return _ckernels is not None


def make_kernel(table, inverse, identity, backend=None):
    """Build a kernel for one Cayley table.

    ``backend`` is ``"python"``, ``"cython"`` or None (automatic).
    """
    if backend == "python":
        return _pykernels.Kernel(table, inverse, identity)
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        return _ckernels.Kernel(table, inverse, identity)
    if _ckernels is not None and not FORCE_PURE and len(table) <= _ckernels.MAX_ORDER:
        return _ckernels.Kernel(table, inverse, identity)
    return _pykernels.Kernel(table, inverse, identity)


def default_backend():
    if _ckernels is not None and not FORCE_PURE:
        return _ckernels.BACKEND
    return _pykernels.BACKEND
