"""Kernel selection: compiled bar-transfer core with a pure-Python fallback.

The compiled extension is optional; when it failed to build or import,
the pure-Python implementation takes over with identical results.  Set
``AZTECOUNT_KERNEL=python`` or ``=compiled`` to force a backend.
"""

import os

from . import _barcore_py

try:
    from . import _barcore as _compiled
except ImportError:
    _compiled = None


def available_backends() -> dict:
    """Mapping of backend name to its ``apply_bar`` callable."""
    backends = {"python": _barcore_py.apply_bar}
    if _compiled is not None:
        backends["compiled"] = _compiled.apply_bar
    return backends


def _select():
    choice = os.environ.get("AZTECOUNT_KERNEL", "auto")
    if choice == "python":
        return "python", _barcore_py.apply_bar
    if choice == "compiled":
        if _compiled is None:
            raise ImportError("AZTECOUNT_KERNEL=compiled but the extension is not available")
        return "compiled", _compiled.apply_bar
    if choice != "auto":
        raise ValueError(f"unknown AZTECOUNT_KERNEL value {choice!r}")
    if _compiled is not None:
        return "compiled", _compiled.apply_bar
    return "python", _barcore_py.apply_bar


BACKEND, apply_bar = _select()
