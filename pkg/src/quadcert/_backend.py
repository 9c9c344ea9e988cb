"""Numeric backend selection.

The compiled extension ``quadcert._core`` is used when it is importable,
otherwise the pure-Python fallback ``quadcert._purepy``. Set
``QUADCERT_BACKEND=python`` or ``QUADCERT_BACKEND=compiled`` to force a
choice; forcing "compiled" without the extension installed raises
ImportError at import time.
"""

import os

from . import _purepy

_FORCED = os.environ.get("QUADCERT_BACKEND")

if _FORCED == "python":
    _impl = _purepy
elif _FORCED not in (None, "", "compiled"):
    raise ImportError(f"QUADCERT_BACKEND={_FORCED!r} is not one of 'python', 'compiled'")
else:
    try:
        from . import _core as _impl
    except ImportError:
        if _FORCED == "compiled":
            raise
        _impl = _purepy

BACKEND_NAME = _impl.BACKEND_NAME
make_func = _impl.make_func
adaptive_quad = _impl.adaptive_quad


def backend_name():
    """Name of the numeric backend in use: "compiled" or "python"."""
    return BACKEND_NAME
