import numpy as np
import pytest

from boolfn import (
    MOEBIUS_MOD_P,
    MOEBIUS_Z,
    WALSH,
    TruthTable,
    moebius_coefficients,
    moebius_coefficients_mod,
    spectrum,
    walsh_coefficients,
)
from boolfn.families import and_, maj, parity
from boolfn.spectral import is_prime

from oracles import naive_moebius, naive_wht, random_table


def test_moebius_matches_oracle():
    rng = np.random.default_rng(10)
    cases = [parity(3), maj(3), and_(4)]
    cases += [TruthTable(n, random_table(rng, n)) for n in (1, 2, 3, 4) for _ in range(4)]
    for f in cases:
        assert moebius_coefficients(f).tolist() == naive_moebius(f)


def test_moebius_mod_p_matches_oracle():
    rng = np.random.default_rng(11)
    for p in (2, 3, 5):
        for n in (1, 2, 3, 4):
            f = TruthTable(n, random_table(rng, n))
            expect = [c % p for c in naive_moebius(f)]
            assert moebius_coefficients_mod(f, p).tolist() == expect


def test_modp_rejects_composite():
    with pytest.raises(ValueError):
        moebius_coefficients_mod(parity(2), 4)


def test_walsh_matches_oracle_and_named_values():
    # chi(AND_2) = (1, 1, 1, -1): coefficients 2, 2, 2, -2
    assert walsh_coefficients(and_(2)).tolist() == [2, 2, 2, -2]
    rng = np.random.default_rng(12)
    for n in (0, 1, 2, 3, 4):
        f = TruthTable(n, random_table(rng, n))
        assert walsh_coefficients(f).tolist() == naive_wht(f)


def test_parseval_exact():
    rng = np.random.default_rng(13)
    for n in (0, 2, 5, 8, 10):
        f = TruthTable(n, random_table(rng, n))
        w = walsh_coefficients(f).astype(object)
        assert int((w * w).sum()) == 4**n


def test_inverse_roundtrip_all_bases():
    rng = np.random.default_rng(14)
    for n in (0, 1, 3, 6, 10):
        f = TruthTable(n, random_table(rng, n))
        for basis, p in ((MOEBIUS_Z, None), (MOEBIUS_MOD_P, 2), (MOEBIUS_MOD_P, 5), (WALSH, None)):
            rep = spectrum(f, basis, p=p)
            assert rep.inverse_table() == f, (n, basis, p)


def test_spectrum_support_and_degree():
    rep = spectrum(parity(3), MOEBIUS_MOD_P, p=2)
    assert rep.support() == (0b001, 0b010, 0b100)
    assert rep.degree() == 1
    rep_w = spectrum(parity(3), WALSH)
    assert rep_w.nonzero_count() == 1
    assert rep_w.support() == (0b111,)


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
