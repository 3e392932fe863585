"""Kernel backend selection.

The compiled extension (metazeta._fastcore) and the pure-Python module
(metazeta._purecore) export the same two functions; whichever loads
becomes the default.  Set METAZETA_BACKEND=python or =compiled to force
one; forcing the compiled backend when the extension is absent is an
error rather than a silent fallback.
"""

from __future__ import annotations

import os

from . import _purecore


def _load():
    choice = os.environ.get("METAZETA_BACKEND", "").strip().lower()
    if choice not in ("", "python", "compiled", "fast"):
        raise ValueError(f"unrecognized METAZETA_BACKEND={choice!r}")
    if choice == "python":
        return _purecore
    try:
        from . import _fastcore
        return _fastcore
    except ImportError:
        if choice:
            raise ImportError(
                f"METAZETA_BACKEND={choice} but the extension is not built; "
                "reinstall without METAZETA_SKIP_EXT or unset METAZETA_BACKEND")
        return _purecore


_impl = _load()

BACKEND_NAME: str = _impl.NAME
close_subgroup = _impl.close_subgroup
enumerate_subgroups = _impl.enumerate_subgroups


def available_backends() -> list[str]:
    out = [_purecore.NAME]
    try:
        from . import _fastcore
        out.append(_fastcore.NAME)
    except ImportError:
        pass
    return out
