"""Constructive affine and linear transforms that trade one measure for another.

Three constructions are provided, each returning the map, the transformed
function g = f(A(x)), and a certificate recording the quantities the
construction guarantees:

* ``bs_to_s_affine``: disjoint sensitive blocks at a point become single
  sensitive coordinates of g at the all-zero input, so the block sensitivity
  of f at the point equals the sensitivity of g at 0.
* ``alt_to_s_linear``: the points of a maximum-alternation chain become the
  columns of an invertible map, forcing alt(f) <= 2*s(g, 0) + 1.
* ``sherstov_linear``: the block-substitution map built from the sensitive
  blocks at a block-sensitivity-maximizing input, split by the input's bits.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bitops import mask_indices, point_to_str
from .core import AffineMap, TruthTable, apply_affine, is_invertible, tt_serialize
from .measures import alternation, block_sensitivity, sensitivity

__all__ = [
    "TransformResult",
    "bs_to_s_affine",
    "alt_to_s_linear",
    "sherstov_linear",
]


@dataclass(frozen=True)
class TransformResult:
    """A constructed map, the resulting function, and its guarantee record."""

    kind: str
    source: TruthTable
    map: AffineMap
    g: TruthTable
    certificate: dict

    def to_json_dict(self) -> dict:
        n = self.map.n
        hex_width = max(1, (n + 3) // 4)
        cert = {}
        for key, value in self.certificate.items():
            if key in ("point", "shift", "z"):
                cert[key] = point_to_str(value, n)
            elif key == "chain":
                cert[key] = [point_to_str(p, n) for p in value]
            elif key in ("blocks", "a_sets", "b_sets"):
                cert[key] = [list(mask_indices(m)) for m in value]
            elif key == "substitution":
                cert[key] = list(value)
            else:
                cert[key] = value
        return {
            "transform": self.kind,
            "arity": n,
            "map": {
                "columns": [point_to_str(c, n) for c in self.map.columns],
                "shift": f"{self.map.shift:0{hex_width}x}",
            },
            "g": tt_serialize(self.g),
            "certificate": cert,
        }


def _substitution_record(columns, n: int) -> tuple:
    """Which input variable drives each output coordinate (0 = held constant)."""
    sources = [0] * n
    for j, col in enumerate(columns):
        b = col
        while b:
            t = (b & -b).bit_length() - 1
            sources[t] = j + 1
            b &= b - 1
    return tuple(sources)


def bs_to_s_affine(
    f: TruthTable,
    a: int,
    placement: str = "block-index",
    limit: int | None = None,
) -> TransformResult:
    """Affine map turning a maximum disjoint block family at ``a`` into
    single sensitive coordinates of g at the all-zero input.

    ``placement`` fixes where the block columns sit: ``block-index`` puts the
    j-th block on column j (columns beyond the family are zero), while
    ``min-in-block`` puts each block on the column of its smallest member.
    Both yield s(g, 0) equal to the block sensitivity of f at ``a``; the
    second additionally makes g read, at every coordinate of a block, the
    input variable indexed by that block's smallest member, which is the
    form the submatrix certificate construction needs.
    """
    n = f.n
    k, fam = block_sensitivity(f, at=a, witness=True, limit=limit)
    cols = [0] * n
    if placement == "block-index":
        for j, block in enumerate(fam.blocks):
            cols[j] = block
    elif placement == "min-in-block":
        for block in fam.blocks:
            rep = (block & -block).bit_length() - 1
            cols[rep] = block
    else:
        raise ValueError(f"unknown placement {placement!r}")
    amap = AffineMap(n, tuple(cols), a)
    g = apply_affine(f, amap)
    sg0 = sensitivity(g, at=0)
    certificate = {
        "point": a,
        "block_sensitivity": k,
        "s_g_at_zero": sg0,
        "equality_holds": sg0 == k,
        "blocks": fam.blocks,
        "placement": placement,
        "substitution": _substitution_record(cols, n),
    }
    return TransformResult("bs2s", f, amap, g, certificate)


def alt_to_s_linear(f: TruthTable) -> TransformResult:
    """Invertible linear map whose columns are the points of a maximum
    alternation chain, so that alt(f) <= 2*s(g, 0) + 1.

    Column supports strictly increase along the chain, which makes the map
    invertible; this is verified and recorded rather than assumed.
    """
    n = f.n
    alt, chain = alternation(f, witness=True)
    lmap = AffineMap(n, tuple(chain.points[1:]), 0)
    invertible = is_invertible(lmap)
    g = apply_affine(f, lmap)
    sg0 = sensitivity(g, at=0)
    sg = sensitivity(g)
    certificate = {
        "alt": alt,
        "s_g_at_zero": sg0,
        "s_g": sg,
        "bound": 2 * sg0 + 1,
        "holds": alt <= 2 * sg0 + 1,
        "invertible": invertible,
        "chain": chain.points,
    }
    return TransformResult("alt2s", f, lmap, g, certificate)


def sherstov_linear(f: TruthTable, limit: int | None = None) -> TransformResult:
    """Block-substitution linear map at a block-sensitivity-maximizing input.

    With z the smallest input maximizing pointwise block sensitivity and
    S_1..S_k the witness blocks there, each block splits into its zero part
    (members where z is 0) and one part (members where z is 1).  The column
    of the smallest member of each part carries that part's indicator;
    columns of untouched variables stay themselves; every other column is
    zero.
    """
    n = f.n
    k, fam = block_sensitivity(f, witness=True, limit=limit)
    z = fam.point
    union = 0
    for block in fam.blocks:
        union |= block
    cols = [(1 << j) if not (union >> j) & 1 else 0 for j in range(n)]
    a_sets, b_sets, both = [], [], []
    for i, block in enumerate(fam.blocks):
        zeros = block & ~z
        ones = block & z
        a_sets.append(zeros)
        b_sets.append(ones)
        if zeros and ones:
            both.append(i + 1)
        if zeros:
            cols[(zeros & -zeros).bit_length() - 1] = zeros
        if ones:
            cols[(ones & -ones).bit_length() - 1] = ones
    lmap = AffineMap(n, tuple(cols), 0)
    g = apply_affine(f, lmap)
    sg = sensitivity(g)
    certificate = {
        "z": z,
        "block_sensitivity": k,
        "blocks": fam.blocks,
        "a_sets": tuple(a_sets),
        "b_sets": tuple(b_sets),
        "split_blocks": both,
        "s_g": sg,
        "ratio_bs_over_s_g_sq": (k / (sg * sg)) if sg else None,
        "factor4_holds": 4 * sg * sg >= k,
    }
    return TransformResult("sherstov", f, lmap, g, certificate)
