"""Array-parallel measure evaluation across every function of a small arity.

The exhaustive verification suites need all measures of all 2**(2**n)
functions for n <= 4.  Calling the per-function API that many times would
dominate the runtime, so this module recomputes the same quantities with the
function axis vectorized: tables become rows of one matrix and each measure
becomes a handful of numpy passes.  The scan cross-checks these arrays
against the per-function API on a deterministic subsample, so the two routes
cannot drift apart silently.
"""

from __future__ import annotations

import numpy as np

from ._bitops import popcounts, table_size
from .measures import _dt_table, _packing_lut

MAX_BULK_ARITY = 4


def _tables(n: int, lo: int, hi: int) -> np.ndarray:
    """Rows = function ids in [lo, hi), columns = the 2**n table entries."""
    ids = np.arange(lo, hi, dtype=np.uint32)
    cols = np.arange(table_size(n), dtype=np.uint32)
    return ((ids[:, None] >> cols[None, :]) & 1).astype(np.uint8)


def measure_arrays(n: int, lo: int, hi: int, primes=(2, 3)) -> dict:
    """Every scalar measure for each function id in [lo, hi), as 1-D arrays."""
    if n > MAX_BULK_ARITY:
        raise ValueError(f"bulk engine supports arity <= {MAX_BULK_ARITY}")
    size = table_size(n)
    t = _tables(n, lo, hi)
    m = t.shape[0]
    idx = np.arange(size)
    out: dict = {"ids": np.arange(lo, hi, dtype=np.int64)}

    # sensitivity and variable relevance
    s_pt = np.zeros((m, size), dtype=np.int16)
    depends_all = np.ones(m, dtype=bool)
    for i in range(n):
        diff = t != t[:, idx ^ (1 << i)]
        s_pt += diff
        depends_all &= diff.any(axis=1)
    out["s"] = s_pt.max(axis=1).astype(np.int64)
    out["depends_on_all"] = depends_all

    # block sensitivity through the packing table
    lut, _ = _packing_lut(n)
    pattern = np.zeros((m, size), dtype=np.uint32)
    for block in range(1, size):
        diff = t != t[:, idx ^ block]
        pattern |= diff.astype(np.uint32) << (block - 1)
    bs_pt = lut[pattern]
    bs_all = bs_pt.max(axis=1)
    out["bs"] = bs_all.astype(np.int64)
    out["bs0"] = bs_pt[:, 0].astype(np.int64)
    out["bs_argmax"] = np.argmax(bs_pt == bs_all[:, None], axis=1).astype(np.int64)

    # certificate complexity via the constant-subcube DP
    pc = popcounts(n)
    mins: list[np.ndarray] = [t] * size
    maxs: list[np.ndarray] = [t] * size
    best_free = np.zeros((m, size), dtype=np.int8)
    for v in range(1, size):
        i = (v & -v).bit_length() - 1
        vp = v & (v - 1)
        flip = idx ^ (1 << i)
        mn = np.minimum(mins[vp], mins[vp][:, flip])
        mx = np.maximum(maxs[vp], maxs[vp][:, flip])
        mins[v] = mn
        maxs[v] = mx
        const = mn == mx
        np.maximum(
            best_free, np.where(const, np.int8(pc[v]), np.int8(0)), out=best_free
        )
    out["C"] = n - best_free.astype(np.int64).min(axis=1)

    # alternation of every shift; column b of the DP result is alt(f XOR b)
    steps = [
        (x, x ^ (1 << i))
        for x in range(1, size)
        for i in range(n)
        if (x >> i) & 1
    ]
    alt_by_shift = np.zeros((m, size), dtype=np.int8)
    best = np.zeros((m, size), dtype=np.int8)
    for b in range(size):
        tb = t[:, idx ^ b]
        best[:] = 0
        for x, px in steps:
            cand = best[:, px] + (tb[:, x] != tb[:, px])
            np.maximum(best[:, x], cand, out=best[:, x])
        alt_by_shift[:, b] = best[:, size - 1]
    out["alt"] = alt_by_shift[:, 0].astype(np.int64)
    out["salt"] = alt_by_shift.min(axis=1).astype(np.int64)
    out["salt_argmin"] = np.argmin(alt_by_shift, axis=1).astype(np.int64)

    # degrees from the exact coefficient butterflies
    def butterfly_degree(modulus: int | None) -> np.ndarray:
        a = t.astype(np.int16)
        for i in range(n):
            step = 1 << i
            view = a.reshape(m, -1, 2, step)
            view[:, :, 1, :] -= view[:, :, 0, :]
            if modulus is not None:
                view[:, :, 1, :] %= modulus
        nz = a != 0
        return (nz * pc[None, :].astype(np.int64)).max(axis=1)

    out["deg"] = butterfly_degree(None)
    for p in primes:
        out[f"deg_{p}"] = butterfly_degree(p)

    # Fourier sparsity of the +-1 view
    chi = 1 - 2 * t.astype(np.int32)
    for i in range(n):
        step = 1 << i
        view = chi.reshape(m, -1, 2, step)
        lo_half = view[:, :, 0, :].copy()
        hi_half = view[:, :, 1, :].copy()
        view[:, :, 0, :] = lo_half + hi_half
        view[:, :, 1, :] = lo_half - hi_half
    out["sparsity"] = (chi != 0).sum(axis=1).astype(np.int64)

    # decision-tree depth straight from the all-functions table
    out["DT"] = _dt_table(n)[out["ids"]].astype(np.int64)
    return out
