"""Kernel selection: compiled extension when available, pure Python otherwise.

Both backends expose the same functions on "compiled pattern" arguments,
i.e. tuples ``(letters, blocks)`` of plain ints.  Set the environment
variable ``VINCULAR_BACKEND=pure`` (or ``cython``) before import to force
a backend; by default the compiled kernel is used when importable.
"""

from __future__ import annotations

import os

_requested = os.environ.get("VINCULAR_BACKEND", "").strip().lower()

if _requested in ("pure", "python"):
    from . import pure as _active
elif _requested in ("c", "cython", "compiled"):
    from . import _cycore as _active  # type: ignore[no-redef]
else:
    try:
        from . import _cycore as _active  # type: ignore[no-redef]
    except ImportError:
        from . import pure as _active

contains = _active.contains
count_avoiders = _active.count_avoiders
list_avoiders = _active.list_avoiders
count_avoiders_naive = _active.count_avoiders_naive
closure_counterexample = _active.closure_counterexample
implication_counterexample = _active.implication_counterexample


def backend_name() -> str:
    """Name of the kernel in use: ``"cython"`` or ``"pure"``."""
    return _active.BACKEND
