"""Combinatorial communication-complexity artifacts for F(x, y) = f(x AND y).

The two-party problem attached to f is the 2**n x 2**n matrix F with entry
(x, y) = f(x AND y).  This module builds that matrix, the restricted
submatrix certificate whose existence converts a disjoint-block family at
the all-zero input into a lower-bound witness of strength sqrt(k), and the
deterministic upper bound 2 * DT(f).  Protocol values themselves are never
computed here: the outputs are certificates and exactly-checked inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._bitops import mask_indices, point_to_str, table_size
from .core import TruthTable, tt_serialize
from .measures import (
    ArityLimitError,
    block_sensitivity,
    dt_depth,
    modp_degree,
    real_degree,
    sensitivity,
)
from .transforms import bs_to_s_affine

__all__ = [
    "AND_MATRIX_MAX_ARITY",
    "BitMatrix",
    "LowerBoundCertificate",
    "VerificationError",
    "and_matrix",
    "submatrix_witness",
    "det_upper_bound",
    "bound_summary",
]

AND_MATRIX_MAX_ARITY = 13  # 2**26-bit matrix; anything larger must stay implicit


class VerificationError(RuntimeError):
    """An identity that must hold by construction failed; treat as a bug."""


@dataclass(frozen=True)
class BitMatrix:
    """A square 0/1 matrix with rows packed little-endian into bytes."""

    n: int
    rows: np.ndarray  # shape (2**n, ceil(2**n / 8)), uint8

    @property
    def dim(self) -> int:
        return table_size(self.n)

    def entry(self, x: int, y: int) -> int:
        return (int(self.rows[x, y >> 3]) >> (y & 7)) & 1

    def row_bits(self, x: int) -> np.ndarray:
        return np.unpackbits(self.rows[x], bitorder="little", count=self.dim)

    def to_pbm(self) -> str:
        dim = self.dim
        lines = [f"P1\n{dim} {dim}"]
        for x in range(dim):
            lines.append(" ".join("1" if v else "0" for v in self.row_bits(x)))
        return "\n".join(lines) + "\n"

    def to_raw(self) -> bytes:
        """8-byte little-endian dimension, then the packed rows in order."""
        return self.dim.to_bytes(8, "little") + self.rows.tobytes()

    @classmethod
    def from_raw(cls, blob: bytes) -> "BitMatrix":
        dim = int.from_bytes(blob[:8], "little")
        n = dim.bit_length() - 1
        if dim != table_size(n):
            raise ValueError("raw matrix dimension is not a power of two")
        row_bytes = (dim + 7) // 8
        rows = np.frombuffer(blob[8 : 8 + dim * row_bytes], dtype=np.uint8)
        return cls(n, rows.reshape(dim, row_bytes).copy())


def and_matrix(f: TruthTable, limit: int | None = None) -> BitMatrix:
    """The matrix with entry (x, y) = f(x AND y)."""
    ceiling = AND_MATRIX_MAX_ARITY if limit is None else min(limit, AND_MATRIX_MAX_ARITY)
    if f.n > ceiling:
        raise ArityLimitError("and_matrix", f.n, ceiling)
    dim = table_size(f.n)
    arr = f.to_array()
    y = np.arange(dim)
    rows = np.empty((dim, (dim + 7) // 8), dtype=np.uint8)
    for x in range(dim):
        rows[x] = np.packbits(arr[x & y], bitorder="little")
    return BitMatrix(f.n, rows)


@dataclass(frozen=True)
class LowerBoundCertificate:
    """Witness data whose existence certifies a sqrt(k) communication bound."""

    function: TruthTable
    k: int
    blocks: tuple[int, ...]
    w_points: tuple[int, ...]
    g: TruthTable
    verified: bool
    verification_mode: str
    pairs_checked: int

    @property
    def bound(self) -> float:
        return math.sqrt(self.k)

    def to_json_dict(self) -> dict:
        n = self.function.n
        return {
            "function": tt_serialize(self.function),
            "arity": n,
            "k": self.k,
            "blocks": [list(mask_indices(b)) for b in self.blocks],
            "w": [point_to_str(p, n) for p in self.w_points],
            "g": tt_serialize(self.g),
            "bound": {"form": "sqrt(k)", "k": self.k, "value": self.bound},
            "verified": self.verified,
            "verification": {
                "mode": self.verification_mode,
                "pairs": self.pairs_checked,
            },
        }


_FULL_PAIR_BUDGET = 1 << 22


def submatrix_witness(
    f: TruthTable,
    limit: int | None = None,
    seed: int = 0,
    sample_pairs: int = 4096,
) -> LowerBoundCertificate:
    """Certificate that the AND-matrix of f contains the AND-matrix of g.

    g comes from the block-substitution transform at the all-zero input with
    each block column placed on the block's smallest member, and W is the set
    of all XOR combinations of the witness blocks.  The identity
    f(u AND y) = g(u AND y) for u, y in W is checked entrywise (exhaustively
    when the matrix fits, by seeded sampling otherwise); a failure is an
    implementation bug, not a finding, and raises ``VerificationError``.
    """
    n = f.n
    transform = bs_to_s_affine(f, 0, placement="min-in-block", limit=limit)
    blocks = transform.certificate["blocks"]
    k = transform.certificate["block_sensitivity"]
    g = transform.g
    w_points = []
    for a in range(1 << k):
        u = 0
        for j in range(k):
            if (a >> j) & 1:
                u ^= blocks[j]
        w_points.append(u)
    w_points = tuple(sorted(w_points))

    farr = f.to_array()
    garr = g.to_array()
    w_arr = np.array(w_points, dtype=np.int64)
    if n <= AND_MATRIX_MAX_ARITY and w_arr.size * w_arr.size <= _FULL_PAIR_BUDGET:
        grid = w_arr[:, None] & w_arr[None, :]
        mism = np.nonzero(farr[grid] != garr[grid])
        mode = "exhaustive"
        pairs = int(w_arr.size) ** 2
        if mism[0].size:
            u = int(w_arr[mism[0][0]])
            y = int(w_arr[mism[1][0]])
            raise VerificationError(
                f"submatrix identity failed for {tt_serialize(f)} at "
                f"u={point_to_str(u, n)} y={point_to_str(y, n)}: "
                f"f={f.value_at(u & y)} g={g.value_at(u & y)}"
            )
    else:
        rng = np.random.default_rng(seed)
        us = w_arr[rng.integers(0, w_arr.size, sample_pairs)]
        ys = w_arr[rng.integers(0, w_arr.size, sample_pairs)]
        meet = us & ys
        bad = np.nonzero(farr[meet] != garr[meet])[0]
        mode = "sampled"
        pairs = sample_pairs
        if bad.size:
            u, y = int(us[bad[0]]), int(ys[bad[0]])
            raise VerificationError(
                f"submatrix identity failed for {tt_serialize(f)} at "
                f"u={point_to_str(u, n)} y={point_to_str(y, n)}"
            )
    return LowerBoundCertificate(
        function=f,
        k=k,
        blocks=blocks,
        w_points=w_points,
        g=g,
        verified=True,
        verification_mode=mode,
        pairs_checked=pairs,
    )


def det_upper_bound(f: TruthTable, limit: int | None = None) -> int:
    """Deterministic communication upper bound 2 * DT(f) for the AND-matrix."""
    return 2 * dt_depth(f, limit=limit)


def bound_summary(f: TruthTable, primes=(2, 3), limits: dict | None = None) -> dict:
    """All desk-computable bound ingredients for the AND-matrix of f.

    Per prime p this reports the block sensitivity at the all-zero input and
    its square root, the decision-tree depth with the derived certificate
    sqrt(DT)/deg_p, the exactly-checked inequality DT <= bs(f, 0) * deg_p**2,
    and, when f depends on all its variables, deg(f) * 2**deg_p(f) >= n.
    A table of degree gaps between prime pairs is included.  Everything
    asymptotic is labeled a certificate; nothing here is a protocol value.
    """
    limits = limits or {}
    n = f.n
    summary: dict = {
        "function": tt_serialize(f),
        "arity": n,
        "depends_on_all": len(f.relevant_variables()) == n,
        "note": "asymptotic communication bounds are emitted as certificates, not values",
    }
    skipped = []

    def attempt(name, fn):
        try:
            return fn()
        except ArityLimitError as e:
            skipped.append({"quantity": name, "reason": str(e)})
            return None

    bs0 = attempt("bs_at_zero", lambda: block_sensitivity(f, at=0, limit=limits.get("bs")))
    dt = attempt("DT", lambda: dt_depth(f, limit=limits.get("DT")))
    deg = real_degree(f)
    summary["bs_at_zero"] = bs0
    summary["sqrt_bs_at_zero"] = math.sqrt(bs0) if bs0 is not None else None
    summary["DT"] = dt
    summary["comm_upper_2dt"] = 2 * dt if dt is not None else None
    summary["deg"] = deg
    summary["s"] = sensitivity(f)
    per_prime = {}
    degs = {}
    for p in primes:
        dp = modp_degree(f, p)
        degs[p] = dp
        entry: dict = {"deg_p": dp}
        if dt is not None:
            entry["sqrt_dt_over_deg_p"] = math.sqrt(dt) / dp if dp else None
            if bs0 is not None:
                entry["dt_le_bs0_degp_sq"] = {
                    "left": dt,
                    "right": bs0 * dp * dp,
                    "holds": dt <= bs0 * dp * dp,
                }
        if summary["depends_on_all"] and n > 0:
            entry["deg_lower_bound"] = {
                "left": deg * (1 << dp),
                "right": n,
                "statement": "deg(f) * 2**deg_p(f) >= n",
                "holds": deg * (1 << dp) >= n,
            }
        else:
            entry["deg_lower_bound"] = {"holds": None, "reason": "hypothesis-not-met"}
        per_prime[str(p)] = entry
    summary["per_prime"] = per_prime
    gap_table = []
    for p in primes:
        for q in primes:
            if p == q:
                continue
            dp, dq = degs[p], degs[q]
            exponent = (
                math.log(dq) / math.log(dp) if dp and dp > 1 and dq else None
            )
            gap_table.append(
                {
                    "p": p,
                    "q": q,
                    "deg_p": dp,
                    "deg_q": dq,
                    "exponent": exponent,
                    "epsilon": (1 - 2 / exponent) if exponent and exponent > 2 else None,
                }
            )
    summary["degree_gap_table"] = gap_table
    summary["skipped"] = skipped
    return summary
