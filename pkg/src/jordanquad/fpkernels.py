"""Kernel selection: compiled _fpcore when available, pure Python otherwise.

The compiled module is an optional build artifact; everything works (just
slower) on the fallback.  Set JORDANQUAD_PURE=1 to force the fallback, for
debugging or benchmarking.
"""

import os

from . import _fpcore_py as pure

try:
    from . import _fpcore as compiled
except ImportError:
    compiled = None

HAVE_COMPILED = compiled is not None

if os.environ.get("JORDANQUAD_PURE"):
    active = pure
else:
    active = compiled if compiled is not None else pure


def backend_name():
    return "compiled" if active is compiled and compiled is not None else "pure-python"
