"""Hot-loop kernels: compiled core with a pure-Python fallback.

The compiled extension (``_core``, built from Cython) is used when
importable; otherwise the numpy fallback provides identical semantics.
Set ``POSETCODES_BACKEND=python`` to force the fallback or
``POSETCODES_BACKEND=compiled`` to make a missing extension an error.
"""

from __future__ import annotations

import os

from . import _fallback

_requested = os.environ.get("POSETCODES_BACKEND", "auto").strip().lower() or "auto"
if _requested not in ("auto", "compiled", "python"):
    raise RuntimeError(f"POSETCODES_BACKEND must be auto/compiled/python, got {_requested!r}")

_impl = None
if _requested in ("auto", "compiled"):
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = None
if _impl is None:
    _impl = _fallback

BACKEND = "python" if _impl is _fallback else "compiled"

gf_rank = _impl.gf_rank
support_bits = _impl.support_bits
min_support_weight = _impl.min_support_weight
pattern_counts = _impl.pattern_counts

__all__ = [
    "BACKEND",
    "gf_rank",
    "support_bits",
    "min_support_weight",
    "pattern_counts",
]
