import doctest
import os
import random

import pytest

import recipmono.modpoly as modmod
from recipmono.modpoly import (
    ModPoly,
    factor_mod_p,
    factor_pattern,
    irreducibility_certificate,
    reduce_mod,
)
from recipmono.polycore import IntPoly

RNG_SEED = 0x30DD


def rand_mod(rng: random.Random, p: int, deg: int) -> ModPoly:
    coeffs = [rng.randrange(p) for _ in range(deg)]
    coeffs.append(rng.randrange(1, p))
    return ModPoly(p, coeffs)


def is_irreducible_ref(h: ModPoly) -> bool:
    # distinct-degree style check: x^(p^d) == x mod h and no earlier collapse
    p, d = h.p, h.degree
    if d <= 0:
        return False
    x = ModPoly(p, (0, 1))
    fr = x
    for e in range(1, d):
        fr = fr.pow_mod(p, h)
        if (fr - x).gcd(h).degree > 0:
            return False
    fr = fr.pow_mod(p, h)
    return ((fr - x) % h).is_zero()


def test_doctests() -> None:
    assert doctest.testmod(modmod).failed == 0


def test_reduction_is_ring_hom() -> None:
    rng = random.Random(RNG_SEED)
    for p in (2, 3, 5, 13):
        for _ in range(50):
            f = IntPoly([rng.randint(-30, 30) for _ in range(rng.randint(1, 7))])
            g = IntPoly([rng.randint(-30, 30) for _ in range(rng.randint(1, 7))])
            assert reduce_mod(f + g, p) == reduce_mod(f, p) + reduce_mod(g, p)
            assert reduce_mod(f * g, p) == reduce_mod(f, p) * reduce_mod(g, p)


def test_reduce_mod_rejects_composite() -> None:
    with pytest.raises(ValueError):
        reduce_mod(IntPoly([1, 1]), 6)


def test_mixed_moduli_rejected() -> None:
    with pytest.raises(ValueError):
        ModPoly(5, [1, 2]) + ModPoly(7, [1, 1])


def test_divmod_property() -> None:
    rng = random.Random(RNG_SEED + 1)
    for p in (2, 3, 7, 31):
        for _ in range(50):
            f = rand_mod(rng, p, rng.randint(0, 8))
            g = rand_mod(rng, p, rng.randint(0, 5))
            q, r = f.divmod(g)
            assert q * g + r == f
            assert r.degree < g.degree
    with pytest.raises(ZeroDivisionError):
        ModPoly(5, [1, 2]).divmod(ModPoly(5, []))


def test_gcd_properties() -> None:
    rng = random.Random(RNG_SEED + 2)
    for p in (2, 5, 11):
        for _ in range(40):
            f = rand_mod(rng, p, rng.randint(1, 5))
            g = rand_mod(rng, p, rng.randint(1, 5))
            h = rand_mod(rng, p, rng.randint(1, 3))
            d = f.gcd(g)
            assert (f % d).is_zero() and (g % d).is_zero()
            assert d.lc == 1
            # gcd scales: gcd(f h, g h) = monic(h) * gcd(f, g)
            assert (f * h).gcd(g * h) == (h.monic() * d)


def test_pow_mod_matches_naive() -> None:
    rng = random.Random(RNG_SEED + 3)
    for p in (3, 7):
        for _ in range(20):
            f = rand_mod(rng, p, rng.randint(1, 4))
            m = rand_mod(rng, p, rng.randint(2, 5))
            e = rng.randint(0, 40)
            naive = ModPoly(p, (1,))
            for _ in range(e):
                naive = (naive * f) % m
            assert f.pow_mod(e, m) == naive


def test_pth_root_inverts_frobenius() -> None:
    rng = random.Random(RNG_SEED + 4)
    for p in (2, 3, 5):
        for _ in range(20):
            f = rand_mod(rng, p, rng.randint(0, 4))
            assert (f**p).pth_root() == f
    with pytest.raises(ValueError):
        ModPoly(3, (0, 1)).pth_root()


def test_lift_round_trip() -> None:
    rng = random.Random(RNG_SEED + 5)
    for _ in range(30):
        f = rand_mod(rng, 13, rng.randint(0, 6))
        assert reduce_mod(f.lift(), 13) == f


def test_factor_known_shapes() -> None:
    assert str(factor_mod_p(reduce_mod(IntPoly([1, 0, 0, 0, 1]), 2))) == "(x+1)^4"
    assert str(factor_mod_p(reduce_mod(IntPoly([1, 1, 1, 1, 1]), 5))) == "(x+4)^4"
    assert (
        str(factor_mod_p(reduce_mod(IntPoly([1, 1, 1, 1, 1]), 19)))
        == "(x^2+5x+1) * (x^2+15x+1)"
    )
    assert str(factor_mod_p(reduce_mod(IntPoly([21, 13, -3, -4, 1, 1]), 3))) == (
        "(x) * (x+1) * (x^3+2x+1)"
    )


def test_factor_reconstructs_and_is_irreducible() -> None:
    rng = random.Random(RNG_SEED + 6)
    for p in (2, 3, 5, 13):
        for _ in range(25):
            f = rand_mod(rng, p, rng.randint(1, 8))
            fac = factor_mod_p(f)
            assert fac.product() == f
            for h, mult in fac.factors:
                assert mult >= 1
                assert h.lc == 1
                assert is_irreducible_ref(h), (p, h)


def test_factor_output_canonical_and_repeatable() -> None:
    rng = random.Random(RNG_SEED + 7)
    for _ in range(10):
        f = rand_mod(rng, 7, 8)
        a = factor_mod_p(f)
        b = factor_mod_p(f)
        assert a == b
        degs = [h.degree for h, _ in a.factors]
        assert degs == sorted(degs)


def test_factor_seed_override_still_correct(monkeypatch) -> None:
    f = reduce_mod(IntPoly([3, 1, 4, 1, 5, 9, 2, 6, 1]), 11)
    base = factor_mod_p(f)
    monkeypatch.setenv("RECIPMONO_SEED", "alternate-universe")
    alt = factor_mod_p(f)
    assert alt.product() == f
    assert sorted((h.degree, m) for h, m in alt.factors) == sorted(
        (h.degree, m) for h, m in base.factors
    )


def test_factor_pattern_fields() -> None:
    pat = factor_pattern(IntPoly([21, 13, -3, -4, 1, 1]), 3)
    assert pat.p == 3
    assert pat.degrees == (1, 1, 3)
    assert pat.all_simple
    pat = factor_pattern(IntPoly([1, 0, 0, 0, 1]), 2)
    assert pat.degrees == (1, 1, 1, 1)
    assert not pat.all_simple
    assert pat.divides_disc
    with pytest.raises(ValueError):
        factor_pattern(IntPoly([1, 1]), 6)
    with pytest.raises(ValueError):
        factor_pattern(IntPoly([1, 0, 0, 5]), 5)


def test_certificate_irreducible_cases() -> None:
    cert = irreducibility_certificate(IntPoly([-1, -1, 0, 0, 0, 1]))
    assert cert.status == "Irreducible"
    assert cert.witness_prime is not None or cert.evidence
    cert = irreducibility_certificate(IntPoly([1] * 7))
    assert cert.status == "Irreducible"
    cert = irreducibility_certificate(IntPoly([7, 1]))
    assert cert.status == "Irreducible"


def test_certificate_reducible_cases() -> None:
    cert = irreducibility_certificate(IntPoly([-2, 1]) * IntPoly([1, 0, 1]))
    assert cert.status == "Reducible"
    assert "root" in cert.evidence
    cert = irreducibility_certificate(IntPoly([1, 0, 1]) * IntPoly([1, 0, 1]))
    assert cert.status == "Reducible"
    assert "repeated" in cert.evidence


def test_certificate_honest_unknowns() -> None:
    # x^4 + 1 splits mod every prime, so the sieve can never prove it
    cert = irreducibility_certificate(IntPoly([1, 0, 0, 0, 1]))
    assert cert.status == "Unknown"
    assert 2 in cert.surviving_degrees
    # a rootless product of two irreducible quadratics stays undecided
    f = IntPoly([1, 0, 1]) * IntPoly([2, 0, 1])
    cert = irreducibility_certificate(f)
    assert cert.status == "Unknown"


def test_certificate_subset_sum_exclusion() -> None:
    # degree patterns can rule out proper factors without a single
    # irreducible reduction; any Irreducible answer must cite evidence
    cert = irreducibility_certificate(IntPoly([-1, -1, 0, 0, 0, 1]))
    assert cert.evidence in (
        "degree 1",
        "irreducible reduction",
        "factor-degree subset sums exclude proper splits",
    )
