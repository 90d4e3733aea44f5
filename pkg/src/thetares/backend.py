"""Kernel backend selection.

Imports the compiled kernels when the extension built, the pure-Python
module otherwise.  THETARES_BACKEND=py or =cy forces the choice (``cy``
raises if the extension is missing, so benchmarks cannot silently
compare a backend against itself).
"""

import os

_forced = os.environ.get("THETARES_BACKEND")

if _forced not in (None, "", "py", "cy"):
    raise RuntimeError(f"THETARES_BACKEND must be 'py' or 'cy', got {_forced!r}")

if _forced == "py":
    from . import _kernels_py as _impl

    BACKEND = "py"
elif _forced == "cy":
    from . import _kernels_cy as _impl  # type: ignore[attr-defined]

    BACKEND = "cy"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "cy"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "py"

conv = _impl.conv
conv_trunc = _impl.conv_trunc
divexact_linear = _impl.divexact_linear
eval_at_inv = _impl.eval_at_inv
geom_coeffs = _impl.geom_coeffs
series_inv_cleared = _impl.series_inv_cleared
content_gcd = _impl.content_gcd
