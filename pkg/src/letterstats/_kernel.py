"""Selects the counting kernel at import time.

Prefers the compiled extension and falls back to the pure-Python kernel when
the extension was not built.  Set LETTERSTATS_PURE_PYTHON=1 to force the
fallback (useful for benchmarking and for debugging suspected kernel bugs).
"""

import os

if os.environ.get("LETTERSTATS_PURE_PYTHON"):
    from ._speedups_py import count_ascii_letters

    KERNEL_BACKEND = "python"
else:
    try:
        from ._speedups import count_ascii_letters

        KERNEL_BACKEND = "c"
    except ImportError:
        from ._speedups_py import count_ascii_letters

        KERNEL_BACKEND = "python"

__all__ = ["count_ascii_letters", "KERNEL_BACKEND"]
