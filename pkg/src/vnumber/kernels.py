"""Array kernels behind the monomial arithmetic.

A generator set is an int64 matrix with one row per monomial and one
column per variable.  The divisibility sweeps below dominate every
nontrivial pipeline (powers, colons, decompositions), so each kernel
ships in two interchangeable implementations: a numba-compiled loop and
a vectorized pure-numpy fallback.  The active backend is fixed at
import time from the ``VNUMBER_KERNELS`` environment variable:

* ``auto`` (default) -- numba when importable, numpy otherwise;
* ``numba``          -- require the compiled path, fail if missing;
* ``numpy``          -- force the fallback.

Both implementations stay importable under their private names so the
benchmark and the equivalence tests can compare them directly.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("VNUMBER_KERNELS", "auto").strip().lower()
if _FLAG not in {"auto", "numba", "numpy"}:
    raise RuntimeError(
        "VNUMBER_KERNELS must be 'auto', 'numba' or 'numpy', got %r" % (_FLAG,)
    )

_njit = None
if _FLAG in {"auto", "numba"}:
    try:
        from numba import njit as _njit
    except ImportError:
        if _FLAG == "numba":
            raise
        _njit = None

BACKEND = "numba" if _njit is not None else "numpy"


def _antichain_mask_numpy(rows: np.ndarray) -> np.ndarray:
    """Mark rows not componentwise-dominating any earlier kept row.

    ``rows`` must be duplicate-free and sorted by ascending row sum, so
    every divisor of a row occurs strictly before it; the surviving rows
    are then exactly the minimal elements under componentwise <=.
    """
    m, n = rows.shape
    mask = np.zeros(m, dtype=np.bool_)
    kept = np.empty((m, n), dtype=rows.dtype)
    cnt = 0
    for i in range(m):
        if cnt == 0 or not (kept[:cnt] <= rows[i]).all(axis=1).any():
            kept[cnt] = rows[i]
            mask[i] = True
            cnt += 1
    return mask


def _antichain_mask_loops(rows):
    m, n = rows.shape
    mask = np.zeros(m, dtype=np.bool_)
    kept = np.empty((m, n), dtype=rows.dtype)
    cnt = 0
    for i in range(m):
        dominated = False
        for t in range(cnt):
            ok = True
            for c in range(n):
                if kept[t, c] > rows[i, c]:
                    ok = False
                    break
            if ok:
                dominated = True
                break
        if not dominated:
            kept[cnt] = rows[i]
            mask[i] = True
            cnt += 1
    return mask


def _member_mask_numpy(gens: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """For each row, whether some generator divides it componentwise."""
    m = rows.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    if gens.shape[0] == 0 or m == 0:
        return out
    # block the broadcast so the intermediate stays under ~16 MB
    step = max(1, 2_000_000 // max(1, gens.shape[0] * gens.shape[1]))
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        hit = (rows[lo:hi, None, :] >= gens[None, :, :]).all(axis=2)
        out[lo:hi] = hit.any(axis=1)
    return out


def _member_mask_loops(gens, rows):
    m, n = gens.shape
    r = rows.shape[0]
    out = np.zeros(r, dtype=np.bool_)
    for i in range(r):
        for g in range(m):
            ok = True
            for c in range(n):
                if gens[g, c] > rows[i, c]:
                    ok = False
                    break
            if ok:
                out[i] = True
                break
    return out


def _any_divides_numpy(gens: np.ndarray, f: np.ndarray) -> bool:
    """Whether some generator row divides the single exponent vector."""
    if gens.shape[0] == 0:
        return False
    return bool((gens <= f).all(axis=1).any())


def _any_divides_loops(gens, f):
    m, n = gens.shape
    for g in range(m):
        ok = True
        for c in range(n):
            if gens[g, c] > f[c]:
                ok = False
                break
        if ok:
            return True
    return False


if BACKEND == "numba":
    _antichain_mask_numba = _njit(cache=True)(_antichain_mask_loops)
    _member_mask_numba = _njit(cache=True)(_member_mask_loops)
    _any_divides_numba = _njit(cache=True)(_any_divides_loops)
    antichain_mask = _antichain_mask_numba
    member_mask = _member_mask_numba

    def any_divides(gens, f):
        return bool(_any_divides_numba(gens, f))

else:
    _antichain_mask_numba = None
    _member_mask_numba = None
    _any_divides_numba = None
    antichain_mask = _antichain_mask_numpy
    member_mask = _member_mask_numpy
    any_divides = _any_divides_numpy


def warmup() -> None:
    """Trigger jit compilation on tiny inputs (no-op on numpy)."""
    rows = np.array([[0, 1], [1, 1]], dtype=np.int64)
    antichain_mask(rows)
    member_mask(rows, rows)
    any_divides(rows, rows[1])
