"""Backend selection for the reachability kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``GENCOL_PURE_PYTHON=1`` is set, the pure-Python
implementation is used. ``BACKEND`` names the active one.
"""

import os

from gencol import _pykernels

BACKEND = "python"
weak_bfs = _pykernels.weak_bfs
strong_bfs = _pykernels.strong_bfs

if os.environ.get("GENCOL_PURE_PYTHON", "") != "1":
    try:
        from gencol import _kernels
    except ImportError:
        _kernels = None
    else:
        BACKEND = "cython"
        weak_bfs = _kernels.weak_bfs
        strong_bfs = _kernels.strong_bfs


def available_backends():
    out = {"python": _pykernels}
    try:
        from gencol import _kernels as compiled
    except ImportError:
        pass
    else:
        out["cython"] = compiled
    return out
