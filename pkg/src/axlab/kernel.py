"""Selects the partition-search kernel.

The compiled extension is used when built; otherwise the pure-Python
implementation takes over with identical behavior. Set AXLAB_KERNEL=python
to force the fallback (the parity tests and the benchmark rely on this).
"""

from __future__ import annotations

import os

if os.environ.get("AXLAB_KERNEL", "").lower() == "python":
    from ._kernel_py import best_connected_partitions

    KERNEL_NAME = "python"
else:
    try:
        from ._kernel_cy import best_connected_partitions  # type: ignore[no-redef]

        KERNEL_NAME = "cython"
    except ImportError:
        from ._kernel_py import best_connected_partitions  # type: ignore[no-redef]

        KERNEL_NAME = "python"

__all__ = ["best_connected_partitions", "KERNEL_NAME"]
