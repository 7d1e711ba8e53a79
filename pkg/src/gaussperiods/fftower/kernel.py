"""Backend selection for the cyclotomic-quotient arithmetic kernel.

The compiled ``_ckernel`` extension is used when it imports; otherwise, or when
``GAUSSPERIODS_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_pykernel`` takes over.  Both expose ``mul`` and ``power`` with identical
signatures and results.
"""
import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

_BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    _BACKENDS["cython"] = _ckernel

_impl = _pykernel if os.environ.get("GAUSSPERIODS_PURE_PYTHON") or _ckernel is None else _ckernel


def available_backends():
    return sorted(_BACKENDS)


def backend():
    return _impl.BACKEND


def set_backend(name):
    """Switch the active kernel; returns the previously active backend name."""
    global _impl
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable (have {available_backends()})")
    previous = _impl.BACKEND
    _impl = _BACKENDS[name]
    return previous


def mul(a, b, r, k, p, mod):
    return _impl.mul(a, b, r, k, p, mod)


def power(a, e, r, k, p, mod):
    return _impl.power(a, e, r, k, p, mod)
