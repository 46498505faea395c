"""Bitmask enumeration kernels behind the brute-force counters.

A subset of vertices is encoded as an int64 mask; independence means no
member is looped and no member's adjacency mask intersects the subset.
The full 2^order scan is the hot loop of the oracle, so it is compiled
with numba. A pure-numpy chunked scan provides the fallback path.

Backend selection: numba when importable, unless the environment variable
CHAINSAW_PURE_NUMPY is set to a non-empty value other than "0". Either
backend can also be forced per call, which is how the benchmark compares
them. Results are identical; masks are capped at 48 bits well before
int64 arithmetic could overflow.
"""

from __future__ import annotations

import os

import numpy as np

PURE_NUMPY_ENV = "CHAINSAW_PURE_NUMPY"
_MASK_BIT_LIMIT = 48
_CHUNK_BITS = 20


def _numpy_forced() -> bool:
    return os.environ.get(PURE_NUMPY_ENV, "").strip() not in ("", "0")


try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False


def available_backends() -> tuple[str, ...]:
    return ("jit", "numpy") if _HAVE_NUMBA else ("numpy",)


def active_backend() -> str:
    """Backend used when none is requested explicitly."""
    if _HAVE_NUMBA and not _numpy_forced():
        return "jit"
    return "numpy"


def _count_py(adj, loop_mask, n):
    total = 0
    for s in range(1 << n):
        if s & loop_mask:
            continue
        indep = True
        for v in range(n):
            if (s >> v) & 1 and (adj[v] & s) != 0:
                indep = False
                break
        if indep:
            total += 1
    return total


def _strata_py(adj, loop_mask, chain_mask, n):
    counts = np.zeros(n + 1, dtype=np.int64)
    for s in range(1 << n):
        if s & loop_mask:
            continue
        indep = True
        for v in range(n):
            if (s >> v) & 1 and (adj[v] & s) != 0:
                indep = False
                break
        if indep:
            t = 0
            r = s & chain_mask
            while r:
                r &= r - 1
                t += 1
            counts[t] += 1
    return counts


if _HAVE_NUMBA:
    _count_jit = njit(cache=True)(_count_py)
    _strata_jit = njit(cache=True)(_strata_py)


def _independent_chunk(masks: np.ndarray, adj: np.ndarray, loop_mask: int, n: int) -> np.ndarray:
    """Boolean mask of independent subsets within one chunk of subset masks."""
    viol = (masks & loop_mask) != 0
    for v in range(n):
        viol |= (((masks >> v) & 1) != 0) & ((masks & adj[v]) != 0)
    return ~viol


def _count_numpy(adj: np.ndarray, loop_mask: int, n: int) -> int:
    total = 0
    limit = 1 << n
    step = 1 << min(n, _CHUNK_BITS)
    for lo in range(0, limit, step):
        masks = np.arange(lo, min(lo + step, limit), dtype=np.int64)
        total += int(_independent_chunk(masks, adj, loop_mask, n).sum())
    return total


def _strata_numpy(adj: np.ndarray, loop_mask: int, chain_mask: int, n: int) -> np.ndarray:
    counts = np.zeros(n + 1, dtype=np.int64)
    limit = 1 << n
    step = 1 << min(n, _CHUNK_BITS)
    chain = [v for v in range(n) if (chain_mask >> v) & 1]
    for lo in range(0, limit, step):
        masks = np.arange(lo, min(lo + step, limit), dtype=np.int64)
        good = masks[_independent_chunk(masks, adj, loop_mask, n)]
        t = np.zeros(good.shape, dtype=np.int64)
        for v in chain:
            t += (good >> v) & 1
        counts += np.bincount(t, minlength=n + 1)
    return counts


def _resolve(backend: str | None) -> str:
    if backend is None:
        return active_backend()
    if backend not in ("jit", "numpy"):
        raise ValueError(f"unknown kernel backend {backend!r}; expected 'jit' or 'numpy'")
    if backend == "jit" and not _HAVE_NUMBA:
        raise RuntimeError("jit backend requested but numba is not importable")
    return backend


def _prepare(adj_masks, order):
    if order > _MASK_BIT_LIMIT:
        raise ValueError(f"mask kernels support at most {_MASK_BIT_LIMIT} vertices, got {order}")
    return np.asarray(list(adj_masks), dtype=np.int64).reshape(order)


def count_independent(adj_masks, loop_mask: int, order: int, backend: str | None = None) -> int:
    """Number of independent sets, by full subset enumeration."""
    which = _resolve(backend)
    adj = _prepare(adj_masks, order)
    if which == "jit":
        return int(_count_jit(adj, loop_mask, order))
    return _count_numpy(adj, loop_mask, order)


def strata_by_chain_count(
    adj_masks, loop_mask: int, chain_mask: int, order: int, backend: str | None = None
) -> list[int]:
    """Independent-set counts split by how many chain-mask bits each set uses."""
    which = _resolve(backend)
    adj = _prepare(adj_masks, order)
    if which == "jit":
        counts = _strata_jit(adj, loop_mask, chain_mask, order)
    else:
        counts = _strata_numpy(adj, loop_mask, chain_mask, order)
    return [int(c) for c in counts]
