"""Kernel backend selection.

The compiled extension is used when it was built and ``RAAG_GENUS_PURE`` is
not set; otherwise the pure-Python versions are used. Both return identical
results.
"""

from __future__ import annotations

import os

from . import _kernels_py

_compiled = None
if not os.environ.get("RAAG_GENUS_PURE"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

if _compiled is not None:
    bareiss_rank = _compiled.bareiss_rank
    bareiss_det = _compiled.bareiss_det

    def vertex_cover_mask(n: int, adj: list[int]) -> int:
        if n > 64:
            return _kernels_py.vertex_cover_mask(n, adj)
        return _compiled.vertex_cover_mask(n, adj)

else:
    bareiss_rank = _kernels_py.bareiss_rank
    bareiss_det = _kernels_py.bareiss_det
    vertex_cover_mask = _kernels_py.vertex_cover_mask
