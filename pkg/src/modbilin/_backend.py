"""Kernel backend selection.

The resize kernels exist twice: a numba-compiled version and a pure-numpy
version with identical arithmetic. The active backend is chosen by the
``MODBILIN_BACKEND`` environment variable (``numba`` or ``numpy``); when
unset, numba is used if it imports, numpy otherwise. Both paths produce
bit-identical images.
"""

from __future__ import annotations

import os
from types import ModuleType

ENV_VAR = "MODBILIN_BACKEND"

_numba_module: "ModuleType | None" = None
_numba_import_error: "Exception | None" = None
_numba_probed = False


def _numba_kernels() -> "ModuleType | None":
    global _numba_module, _numba_import_error, _numba_probed
    if not _numba_probed:
        _numba_probed = True
        try:
            from . import _kernels_numba

            _numba_module = _kernels_numba
        except ImportError as exc:  # numba missing or incompatible
            _numba_import_error = exc
    return _numba_module


def available_backends() -> tuple[str, ...]:
    """Names of the usable backends, preferred first."""
    if _numba_kernels() is not None:
        return ("numba", "numpy")
    return ("numpy",)


def resolve_backend(name: "str | None" = None) -> ModuleType:
    """Return the kernel module for an explicit name or the environment default."""
    from . import _kernels_numpy

    if name is None:
        name = os.environ.get(ENV_VAR, "").strip().lower() or None
    if name is None:
        return _numba_kernels() or _kernels_numpy
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        mod = _numba_kernels()
        if mod is None:
            raise RuntimeError(
                f"numba backend requested but unavailable: {_numba_import_error}"
            )
        return mod
    raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")


def active_backend_name(name: "str | None" = None) -> str:
    """Resolved backend name, for logging and CSV headers."""
    mod = resolve_backend(name)
    return "numba" if mod is _numba_kernels() and mod is not None else "numpy"
