"""Packed-bitstring and hypercube-indexing primitives shared across the library.

A function table on n variables is a plain Python int carrying 2**n bits:
bit x holds the value at input index x, and variable x1 sits on the least
significant bit of the index.  All modules share this one convention.
numpy views are produced on demand for array kernels.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_ARITY = 24  # 2**24-bit tables (2 MiB) keep every table-level operation in memory


def table_size(n: int) -> int:
    return 1 << n


@lru_cache(maxsize=None)
def table_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def low_half_mask(n: int, i: int) -> int:
    """Mask over 2**n table positions selecting indices whose bit i is clear."""
    s = 1 << i
    chunk = (1 << s) - 1
    width = 1 << n
    m = chunk
    covered = 2 * s
    while covered < width:
        m |= m << covered
        covered *= 2
    return m & table_mask(n)


def xor_shift(table: int, n: int, i: int) -> int:
    """Reindex a packed table by x -> x XOR e_i."""
    s = 1 << i
    m0 = low_half_mask(n, i)
    return ((table & m0) << s) | ((table >> s) & m0)


def xor_shuffle(table: int, n: int, b: int) -> int:
    """Reindex a packed table by x -> x XOR b."""
    t = table
    while b:
        i = (b & -b).bit_length() - 1
        t = xor_shift(t, n, i)
        b &= b - 1
    return t


def unpack(table: int, n: int) -> np.ndarray:
    """Packed int table -> uint8 array of length 2**n."""
    size = 1 << n
    nbytes = (size + 7) // 8
    raw = np.frombuffer(table.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little", count=size)


def pack(values: np.ndarray) -> int:
    """uint8/bool array -> packed int table."""
    arr = np.asarray(values, dtype=np.uint8) & 1
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """Popcount of every index below 2**n, as uint8."""
    size = 1 << n
    idx = np.arange(size, dtype=np.uint32)
    pc = np.zeros(size, dtype=np.uint8)
    for i in range(n):
        pc += ((idx >> i) & 1).astype(np.uint8)
    return pc


@lru_cache(maxsize=None)
def weight_layers(n: int) -> tuple[np.ndarray, ...]:
    """Index arrays grouped by popcount, ascending index within each layer."""
    pc = popcounts(n)
    return tuple(np.flatnonzero(pc == w).astype(np.int64) for w in range(n + 1))


@lru_cache(maxsize=None)
def ascent_steps(n: int) -> tuple[tuple[int, np.ndarray, np.ndarray], ...]:
    """(direction, points, predecessors) triples for the layered chain DP.

    Layers are emitted in ascending weight, so a DP that consumes the triples
    in order always reads finalized predecessor values.
    """
    layers = weight_layers(n)
    steps = []
    for w in range(1, n + 1):
        for i in range(n):
            pts = layers[w]
            sel = pts[(pts >> i) & 1 == 1]
            if sel.size:
                steps.append((i, sel, sel ^ (1 << i)))
    return tuple(steps)


def point_to_str(x: int, n: int) -> str:
    """Assignment as a bitstring, x1 first: '110' means x1=1, x2=1, x3=0."""
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n))


def point_from_str(s: str) -> tuple[int, int]:
    """Bitstring -> (packed assignment, arity)."""
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"not a bitstring: {s!r}")
    x = 0
    for i, c in enumerate(s):
        if c == "1":
            x |= 1 << i
    return x, len(s)


def mask_indices(mask: int) -> tuple[int, ...]:
    """Bitmask -> sorted 1-based variable indices (for reports and JSON)."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def indices_mask(indices) -> int:
    m = 0
    for i in indices:
        if i < 1:
            raise ValueError("variable indices are 1-based")
        m |= 1 << (i - 1)
    return m
