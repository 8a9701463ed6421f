"""Kernel selection: compiled extension when available, numpy fallback.

``CONVINV_PURE=1`` in the environment forces the fallback.  Both
implementations expose the same three callables and are interchangeable;
see ``pure`` for the contract.  ``IMPLEMENTATION`` names the active one.
"""

from __future__ import annotations

import os

from . import pure

_forced_pure = bool(os.environ.get("CONVINV_PURE"))


def load_fast():
    """The compiled kernel module, or None when it is not importable."""
    try:
        from . import _fast  # type: ignore

        return _fast
    except ImportError:
        return None


if not _forced_pure and (_mod := load_fast()) is not None:
    IMPLEMENTATION = "fast"
    pivot_search = _mod.pivot_search
    relax_forward = _mod.relax_forward
    relax_backward = _mod.relax_backward
else:
    IMPLEMENTATION = "pure"
    pivot_search = pure.pivot_search
    relax_forward = pure.relax_forward
    relax_backward = pure.relax_backward
