"""Exact polynomial and Fourier coefficient tables for packed truth tables.

All transforms run over int64 with no normalization, so every coefficient
is an exact integer: a zero test is a genuine zero test.  Coefficient index
S (a bitmask of variables) addresses the monomial prod_{i in S} x_i for the
multilinear bases, and the character (-1)^<S,x> for the Walsh basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._bitops import pack, popcounts
from .core import TruthTable

__all__ = [
    "MOEBIUS_Z",
    "MOEBIUS_MOD_P",
    "WALSH",
    "SpectrumRep",
    "moebius_coefficients",
    "moebius_coefficients_mod",
    "walsh_coefficients",
    "spectrum",
    "is_prime",
]

MOEBIUS_Z = "moebius-Z"
MOEBIUS_MOD_P = "moebius-mod-p"
WALSH = "walsh-hadamard-unnormalized"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _moebius(arr: np.ndarray, n: int) -> np.ndarray:
    """Finite-difference butterfly: table values -> multilinear coefficients."""
    a = arr.astype(np.int64).copy()
    for i in range(n):
        step = 1 << i
        view = a.reshape(-1, 2, step)
        view[:, 1, :] -= view[:, 0, :]
    return a


def _zeta(arr: np.ndarray, n: int) -> np.ndarray:
    """Inverse of the finite-difference butterfly (subset sums)."""
    a = arr.astype(np.int64).copy()
    for i in range(n):
        step = 1 << i
        view = a.reshape(-1, 2, step)
        view[:, 1, :] += view[:, 0, :]
    return a


def moebius_coefficients(f: TruthTable) -> np.ndarray:
    """Coefficients of the unique multilinear polynomial for f over the integers."""
    return _moebius(f.to_array(), f.n)


def moebius_coefficients_mod(f: TruthTable, p: int) -> np.ndarray:
    """Multilinear coefficients reduced modulo the prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = f.to_array().astype(np.int64)
    for i in range(f.n):
        step = 1 << i
        view = a.reshape(-1, 2, step)
        view[:, 1, :] = (view[:, 1, :] - view[:, 0, :]) % p
    return a


def walsh_coefficients(f: TruthTable) -> np.ndarray:
    """Unnormalized Walsh-Hadamard coefficients of the +-1 view 1 - 2f."""
    a = f.signs()
    for i in range(f.n):
        step = 1 << i
        view = a.reshape(-1, 2, step)
        lo = view[:, 0, :].copy()
        hi = view[:, 1, :].copy()
        view[:, 0, :] = lo + hi
        view[:, 1, :] = lo - hi
    return a


@dataclass(frozen=True)
class SpectrumRep:
    """A full coefficient table in one of the exact bases."""

    basis: str
    n: int
    coeffs: np.ndarray
    p: int | None = field(default=None)

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def support(self) -> tuple[int, ...]:
        """Subset masks with a nonzero coefficient, ascending."""
        return tuple(int(s) for s in np.flatnonzero(self.coeffs))

    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        if nz.size == 0:
            return 0
        return int(popcounts(self.n)[nz].max())

    def inverse_table(self) -> TruthTable:
        """Reconstruct the 0/1 table; exact by construction."""
        if self.basis == MOEBIUS_Z:
            vals = _zeta(self.coeffs, self.n)
        elif self.basis == MOEBIUS_MOD_P:
            assert self.p is not None
            vals = _zeta(self.coeffs, self.n) % self.p
        elif self.basis == WALSH:
            a = self.coeffs.astype(np.int64).copy()
            for i in range(self.n):
                step = 1 << i
                view = a.reshape(-1, 2, step)
                lo = view[:, 0, :].copy()
                hi = view[:, 1, :].copy()
                view[:, 0, :] = lo + hi
                view[:, 1, :] = lo - hi
            chi = a >> self.n  # self-inverse up to the factor 2**n
            vals = (1 - chi) // 2
        else:
            raise ValueError(f"unknown basis {self.basis!r}")
        if not np.isin(vals, (0, 1)).all():
            raise ValueError("coefficient table is not the spectrum of a 0/1 function")
        return TruthTable(self.n, pack(vals))


def spectrum(f: TruthTable, basis: str = MOEBIUS_Z, p: int | None = None) -> SpectrumRep:
    if basis == MOEBIUS_Z:
        return SpectrumRep(basis, f.n, moebius_coefficients(f))
    if basis == MOEBIUS_MOD_P:
        if p is None:
            raise ValueError("basis moebius-mod-p needs a prime p")
        return SpectrumRep(basis, f.n, moebius_coefficients_mod(f, p), p=p)
    if basis == WALSH:
        return SpectrumRep(basis, f.n, walsh_coefficients(f))
    raise ValueError(f"unknown basis {basis!r}")
