"""Kernel backend selection.

The compiled extension (pglab._core) is used when importable; otherwise the
pure-Python reference (pglab._pykernels) takes over. Setting PGLAB_PURE=1
forces the pure backend. The two produce identical outputs; the compiled
subset-search kernels additionally require at most 64 vertices, beyond
which the pure path is used regardless of backend.
"""

from __future__ import annotations

import os

import numpy as np

from pglab import _pykernels

try:
    from pglab import _core
except ImportError:  # built without the extension; fall back
    _core = None

_FORCE_PURE = os.environ.get("PGLAB_PURE", "").strip() not in ("", "0")

INF = _pykernels.INF


def backend() -> str:
    return "pure-python" if (_core is None or _FORCE_PURE) else "compiled"


def _compiled() -> bool:
    return _core is not None and not _FORCE_PURE


def st_vertex_cut(n, indptr, indices, caps, s, t, cutoff=INF):
    """Minimum weighted vertex cut between non-adjacent s and t.

    indptr/indices: CSR adjacency (numpy int32); caps: per-vertex capacities
    (numpy int64). Returns (value, sorted cut list) when value < cutoff,
    else (cutoff, None).
    """
    if _compiled():
        return _core.st_vertex_cut(n, indptr, indices, caps, s, t, cutoff)
    return _pykernels.st_vertex_cut(n, indptr, indices, caps, s, t, cutoff)


def components_count(rows, n, alive):
    if _compiled() and n <= 64:
        if n == 0:
            return 0
        arr = np.array(rows, dtype=np.uint64)
        return _core.components_count(arr, alive)
    return _pykernels.components_count(rows, alive)


def min_sepset_bruteforce(rows, n, base_comps, max_k):
    """First separating subset in (size, index-lex) order; (-1, 0) if none."""
    if _compiled() and 1 <= n <= 64:
        arr = np.array(rows, dtype=np.uint64)
        return _core.min_sepset_bruteforce(arr, n, base_comps, max_k)
    return _pykernels.min_sepset_bruteforce(rows, n, base_comps, max_k)


def minimal_sepsets_upto(rows, n, base_comps, max_k):
    """All minimal separating subsets of size <= max_k, in (size, lex) order."""
    if _compiled() and 1 <= n <= 64:
        arr = np.array(rows, dtype=np.uint64)
        return _core.minimal_sepsets_upto(arr, n, base_comps, max_k)
    return _pykernels.minimal_sepsets_upto(rows, n, base_comps, max_k)
