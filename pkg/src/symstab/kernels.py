"""Selects the distance-scan core at import time.

The compiled extension is preferred; the pure-Python twin takes over when
the extension was not built (or when SYMSTAB_PURE=1 is set, which the
benchmark and the kernel-parity tests use to force the fallback).
"""

from __future__ import annotations

import os

from . import _scan_py

if os.environ.get("SYMSTAB_PURE"):
    _impl = _scan_py
    HAVE_EXT = False
else:
    try:
        from . import _scan as _impl  # type: ignore[attr-defined]

        HAVE_EXT = True
    except ImportError:
        _impl = _scan_py
        HAVE_EXT = False

NO_WEIGHT = _scan_py.NO_WEIGHT
element_at = _scan_py.element_at


def dual_weight_scan(basis_words, r_s, n, t_start, t_end, early_exit=0, monitor_pure=False):
    if HAVE_EXT and n <= 32 and len(basis_words) <= 64:
        return _impl.dual_weight_scan(
            basis_words, r_s, n, t_start, t_end, early_exit, monitor_pure
        )
    return _scan_py.dual_weight_scan(
        basis_words, r_s, n, t_start, t_end, early_exit, monitor_pure
    )
