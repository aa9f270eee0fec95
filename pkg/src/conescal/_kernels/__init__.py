"""Backend selection for the compute kernels.

Two interchangeable implementations exist: a compiled Cython module
(``_cy``) and a pure-numpy fallback (``_py``).  The compiled one is preferred
when importable; set ``CONESCAL_KERNELS=py`` or ``CONESCAL_KERNELS=cy`` to
force a backend (forcing ``cy`` raises if the extension is missing).
"""

import os

KIND_L1 = 0
KIND_L2 = 1
KIND_LINF = 2
KIND_MAXABS = 3
KIND_SUMABS = 4

_requested = os.environ.get("CONESCAL_KERNELS", "").strip().lower()

if _requested in ("py", "python"):
    from . import _py as _impl

    BACKEND = "python"
elif _requested in ("", "cy", "cython"):
    try:
        from . import _cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        if _requested:
            raise
        from . import _py as _impl

        BACKEND = "python"
else:
    raise ValueError(
        f"CONESCAL_KERNELS must be 'py' or 'cy', got {_requested!r}"
    )

seminorm_many = _impl.seminorm_many
margin_many = _impl.margin_many
simplex_pivot_loop = _impl.simplex_pivot_loop
pivot = _impl.pivot

__all__ = [
    "BACKEND",
    "KIND_L1",
    "KIND_L2",
    "KIND_LINF",
    "KIND_MAXABS",
    "KIND_SUMABS",
    "seminorm_many",
    "margin_many",
    "simplex_pivot_loop",
    "pivot",
]
