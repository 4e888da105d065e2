"""Kernel backend selection.

The echelon engine has two interchangeable int64 kernel sets: numba-compiled
loops and pure-numpy vector code.  GIMLAB_BACKEND picks one at import time
("numba" or "numpy"); without the variable, numba is used when importable.
Arbitrary-precision (object dtype) work always routes through the numpy
implementation regardless of the selection, since numba cannot compile
big-integer loops.  Both backends produce bit-identical results; see
benchmarks/bench_backends.py for the speed comparison.
"""

import os

from . import _kernels_numpy

_BACKEND_NAME = None
_KERNELS = None


def _load(name):
    if name == "numpy":
        return "numpy", _kernels_numpy
    try:
        from . import _kernels_numba
        return "numba", _kernels_numba
    except ImportError:
        if name == "numba":
            raise RuntimeError("GIMLAB_BACKEND=numba but numba is not importable")
        return "numpy", _kernels_numpy


def set_backend(name):
    """Force the int64 kernel backend ("numba" or "numpy"). Mainly for tests."""
    global _BACKEND_NAME, _KERNELS
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    _BACKEND_NAME, _KERNELS = _load(name)
    return _BACKEND_NAME


def get_backend_name():
    if _BACKEND_NAME is None:
        _init_from_env()
    return _BACKEND_NAME


def kernels():
    """The active int64 kernel module."""
    if _KERNELS is None:
        _init_from_env()
    return _KERNELS


def _init_from_env():
    global _BACKEND_NAME, _KERNELS
    env = os.environ.get("GIMLAB_BACKEND", "").strip().lower()
    if env and env not in ("numba", "numpy"):
        raise RuntimeError(f"GIMLAB_BACKEND must be 'numba' or 'numpy', got {env!r}")
    _BACKEND_NAME, _KERNELS = _load(env or "auto")
