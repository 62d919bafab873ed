import doctest
import random

import pytest

import recipmono.discriminant as discmod
from recipmono.discriminant import (
    conjecture_disc_identity,
    discriminant,
    discriminant_report,
    lemma_disc_identity,
    resultant,
    sylvester_resultant,
)
from recipmono.polycore import IntPoly, cyclotomic_2aqb, half_to_reciprocal

RNG_SEED = 0xD15C


def rand_poly(rng: random.Random, deg: int, lo: int = -9, hi: int = 9) -> IntPoly:
    coeffs = [rng.randint(lo, hi) for _ in range(deg)]
    coeffs.append(rng.choice([c for c in range(lo, hi + 1) if c != 0]))
    return IntPoly(coeffs)


def make_reciprocal(rng: random.Random, n: int) -> IntPoly:
    # palindrome of degree 2n with unit ends
    mid = [rng.randint(-9, 9) for _ in range(n - 1)]
    center = rng.randint(-9, 9)
    return IntPoly([1] + mid + [center] + mid[::-1] + [1])


def test_doctests() -> None:
    assert doctest.testmod(discmod).failed == 0


def test_resultant_matrix_cross_check() -> None:
    rng = random.Random(RNG_SEED)
    for _ in range(300):
        f = rand_poly(rng, rng.randint(1, 7))
        g = rand_poly(rng, rng.randint(1, 7))
        assert resultant(f, g) == sylvester_resultant(f, g)


def test_resultant_multiplicative() -> None:
    rng = random.Random(RNG_SEED + 1)
    for _ in range(100):
        f = rand_poly(rng, rng.randint(1, 4))
        g = rand_poly(rng, rng.randint(1, 4))
        h = rand_poly(rng, rng.randint(1, 4))
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_resultant_swap_sign() -> None:
    rng = random.Random(RNG_SEED + 2)
    for _ in range(100):
        f = rand_poly(rng, rng.randint(1, 5))
        g = rand_poly(rng, rng.randint(1, 5))
        assert resultant(f, g) == (-1) ** (f.degree * g.degree) * resultant(g, f)


def test_resultant_root_product() -> None:
    # Res(f, g) = lc(f)^deg g * prod g(alpha) over roots alpha of f;
    # check with split f = prod (x - a_i)
    rng = random.Random(RNG_SEED + 3)
    for _ in range(50):
        roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 4))]
        f = IntPoly.one()
        for a in roots:
            f = f * IntPoly([-a, 1])
        g = rand_poly(rng, rng.randint(1, 4))
        expected = 1
        for a in roots:
            expected *= g(a)
        assert resultant(f, g) == expected


def test_resultant_constant_and_zero() -> None:
    assert resultant(IntPoly([5]), IntPoly([1, 2, 3])) == 25
    assert resultant(IntPoly([1, 2, 3]), IntPoly([5])) == 25
    with pytest.raises(ValueError):
        resultant(IntPoly.zero(), IntPoly([1, 1]))


def test_discriminant_known_values() -> None:
    assert discriminant(IntPoly([-1, 0, 1])) == 4
    assert discriminant(IntPoly([-1, 0, 0, 1])) == -27
    assert discriminant(IntPoly([-1, 0, 0, 0, 1])) == -256
    assert discriminant(IntPoly([1, 0, 0, 0, 1])) == 256
    assert discriminant(IntPoly([57, 26, -3, 1, 1])) == -5266463
    assert discriminant(IntPoly([2, 3, 5])) == -31
    assert discriminant(IntPoly([7, 1])) == 1
    assert discriminant(IntPoly([-2, 5, -4, 1])) == 0


def test_discriminant_quadratic_cubic_formulas() -> None:
    rng = random.Random(RNG_SEED + 4)
    for _ in range(100):
        b, c = rng.randint(-20, 20), rng.randint(-20, 20)
        assert discriminant(IntPoly([c, b, 1])) == b * b - 4 * c
        p, q = rng.randint(-15, 15), rng.randint(-15, 15)
        assert discriminant(IntPoly([q, p, 0, 1])) == -4 * p**3 - 27 * q**2
    with pytest.raises(ValueError):
        discriminant(IntPoly([3]))


def test_discriminant_prime_cyclotomic() -> None:
    for p in (3, 5, 7, 11, 13):
        f = IntPoly([1] * p)
        assert discriminant(f) == (-1) ** ((p - 1) // 2) * p ** (p - 2)


def test_discriminant_translation_invariant() -> None:
    rng = random.Random(RNG_SEED + 5)
    shift = IntPoly([1, 1])  # x + 1
    for _ in range(30):
        f = rand_poly(rng, rng.randint(2, 5))
        coeffs = f.coeffs
        g = IntPoly.zero()
        for i, c in enumerate(coeffs):
            g = g + IntPoly([c]) * shift**i
        assert discriminant(g) == discriminant(f)


def test_report_square_divisor_primes() -> None:
    rep = discriminant_report(IntPoly([-12, 0, 1]))  # disc 48 = 2^4 * 3
    assert rep.disc == 48
    assert rep.square_divisor_primes == frozenset({2})
    rep = discriminant_report(IntPoly([1, 0, 7, 0, 16, 2, 16, 0, 7, 0, 1]))
    assert 5 in rep.square_divisor_primes


def test_lemma_identity_on_seeded_palindromes() -> None:
    rng = random.Random(RNG_SEED + 6)
    checked = 0
    while checked < 120:
        n = rng.randint(2, 8)
        f = make_reciprocal(rng, n)
        if discriminant(f) == 0:
            continue
        chk = lemma_disc_identity(f)
        assert chk.holds, f
        assert chk.lhs == chk.rhs
        checked += 1


def test_lemma_identity_on_cyclotomics() -> None:
    for (q, a, b) in ((3, 0, 1), (3, 1, 1), (3, 0, 2), (5, 0, 1), (5, 2, 1), (7, 1, 1)):
        f = cyclotomic_2aqb(q, a, b)
        chk = lemma_disc_identity(f)
        assert chk.holds, (q, a, b)


def test_lemma_identity_structure() -> None:
    # lhs is the full discriminant, rhs the boundary-weighted square
    f = half_to_reciprocal(IntPoly([-1, 1, 1]), 2)
    chk = lemma_disc_identity(f)
    assert chk.lhs == discriminant(f) == 125
    assert chk.holds


def test_lemma_rejects_bad_input() -> None:
    with pytest.raises(ValueError):
        lemma_disc_identity(IntPoly([1, 2, 3]))  # not reciprocal
    with pytest.raises(ValueError):
        lemma_disc_identity(IntPoly([2, 3, 3, 2]))  # not monic


def test_conjecture_identity_spot_checks() -> None:
    for (q, a, r, t) in (
        (5, 0, 2, 1),
        (5, 1, 1, -3),
        (3, 0, 1, 4),
        (7, 1, 3, 2),
        (11, 0, 1, 1),
        (13, 1, 2, -5),
    ):
        chk = conjecture_disc_identity(q, a, r, t)
        assert chk.holds, (q, a, r, t)
        assert chk.lhs == chk.rhs


def test_conjecture_rejects_bad_q() -> None:
    with pytest.raises(ValueError):
        conjecture_disc_identity(4, 0, 1, 1)
    with pytest.raises(ValueError):
        conjecture_disc_identity(5, 2, 1, 1)
