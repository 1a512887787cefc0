"""Select the composition kernel: compiled if available, else pure Python.

Set ``AFFINETL_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("AFFINETL_PURE_PYTHON"):
    from ._kernel_py import BACKEND, compose_trace
else:
    try:
        from ._kernel_c import BACKEND, compose_trace
    except ImportError:  # extension not built
        from ._kernel_py import BACKEND, compose_trace

__all__ = ["BACKEND", "compose_trace"]
