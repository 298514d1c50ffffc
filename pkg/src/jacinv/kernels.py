"""Backend selection for the polynomial kernels.

The compiled extension is used when it imports; set ``JACINV_PURE_PYTHON=1``
to force the fallback. :func:`set_backend` swaps at runtime (benchmarks and
the equivalence tests use it).
"""
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

__all__ = ["BACKEND", "available_backends", "set_backend",
           "convolve", "horner", "derive", "affine_horner"]

_NAMES = ("convolve", "horner", "derive", "affine_horner")


def available_backends():
    return ("cython", "python") if _ckernels is not None else ("python",)


def set_backend(name):
    """Route kernel calls to ``"cython"`` or ``"python"``."""
    global BACKEND
    if name == "cython":
        if _ckernels is None:
            raise ImportError("jacinv._ckernels is not built")
        mod = _ckernels
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    g = globals()
    for fn in _NAMES:
        g[fn] = getattr(mod, fn)
    BACKEND = name


BACKEND = "python"
convolve = _pykernels.convolve
horner = _pykernels.horner
derive = _pykernels.derive
affine_horner = _pykernels.affine_horner

if _ckernels is not None and not os.environ.get("JACINV_PURE_PYTHON"):
    set_backend("cython")
