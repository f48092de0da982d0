"""Backend selection: compiled extension if available, numpy fallback otherwise.

Set SPLITQUAT_BACKEND=py (or =c) to force a backend; "c" raises if the
extension was not built.
"""

import os

_requested = os.environ.get("SPLITQUAT_BACKEND", "auto")

if _requested in ("auto", "c"):
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        if _requested == "c":
            raise
        from . import _kernels_py as _impl

        BACKEND = "py"
elif _requested == "py":
    from . import _kernels_py as _impl

    BACKEND = "py"
else:
    raise ValueError(f"unknown SPLITQUAT_BACKEND {_requested!r}")

from . import _kernels_py as _pyimpl

reciprocal_modes = _impl.reciprocal_modes
reciprocal_sq_modes = _impl.reciprocal_sq_modes
assoc_legendre_table = _impl.assoc_legendre_table
hyp2f1_series_arr = _impl.hyp2f1_series_arr
contour_t = _impl.contour_t
# array-coefficient variants exist in the numpy backend only; the compiled
# scalar kernels cover the hot paths
reciprocal_modes_arr = getattr(_impl, "reciprocal_modes_arr", _pyimpl.reciprocal_modes_arr)
reciprocal_sq_modes_arr = getattr(
    _impl, "reciprocal_sq_modes_arr", _pyimpl.reciprocal_sq_modes_arr
)

__all__ = [
    "BACKEND",
    "reciprocal_modes",
    "reciprocal_sq_modes",
    "reciprocal_modes_arr",
    "reciprocal_sq_modes_arr",
    "assoc_legendre_table",
    "hyp2f1_series_arr",
    "contour_t",
]
