"""Kernel backend selection.

Prefers the compiled extension and falls back to the pure-Python kernels
when it is unavailable.  Set ``GENTRIG_PURE=1`` to force the fallback
(useful for benchmarking and parity testing).
"""

import os

if os.environ.get("GENTRIG_PURE") == "1":
    from gentrig import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from gentrig import _kernels_cy as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from gentrig import _kernels_py as _impl
        BACKEND = "python"

series_2f1_tail = _impl.series_2f1_tail
series_3f2_tail = _impl.series_3f2_tail
quad_defining = _impl.quad_defining
SERIES_MAX_TERMS = _impl.SERIES_MAX_TERMS
QUAD_MAX_PANELS = _impl.QUAD_MAX_PANELS
