"""Kernel backend selection.

The compiled extension is used when importable; set the environment
variable ``SIGMAHALL_KERNELS=python`` to force the numpy fallback.
"""
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

_active = None


def use_backend(name):
    """Switch the active backend ("compiled" or "python")."""
    global _active, closure, product_mask, permutes, permutability_matrix
    try:
        mod = BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None
    _active = name
    closure = mod.closure
    product_mask = mod.product_mask
    permutes = mod.permutes
    permutability_matrix = mod.permutability_matrix


def backend():
    return _active


_requested = os.environ.get("SIGMAHALL_KERNELS", "").strip().lower()
if _requested in BACKENDS:
    use_backend(_requested)
else:
    use_backend("compiled" if _ckernels is not None else "python")
