"""End-to-end acceptance checks, one test per criterion.

Run with -v for one pass/fail line per criterion.  Each test is
self-contained and uses only public package entry points.
"""

import json
import math
import random
import subprocess
import sys

from recipmono.arithfactor import factor_int, is_squarefree_int
from recipmono.discriminant import (
    conjecture_disc_identity,
    discriminant,
    lemma_disc_identity,
)
from recipmono.families import (
    H_DEG10,
    count_LF,
    local_obstruction_scan,
    sextic_family,
    thm13_family,
)
from recipmono.galois import quintic_galois
from recipmono.modpoly import ModPoly, factor_mod_p, reduce_mod
from recipmono.monogenic import (
    DIVIDES,
    dedekind_index_test,
    ideal_square_membership,
    is_monogenic,
    search_ideal_square,
)
from recipmono.polycore import (
    IntPoly,
    cyclotomic_2aqb,
    half_to_reciprocal,
    reverse,
)

QUINTIC_DRIVER = IntPoly([14641, -15972, -139876, 156112, 125008, 8192])

EXPECTED_PRIMES = [3, 5, 7, 13, 19, 37, 41, 43, 53, 61, 67, 71, 73, 79, 89, 97]


def test_criterion_01_prime_list_reproduction() -> None:
    res = subprocess.run(
        [sys.executable, "-m", "recipmono.cli", "family", "thm13", "--pmax", "100"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    rows = [
        line.split(",")
        for line in res.stdout.strip().splitlines()
        if line and not line.startswith("#") and not line.startswith("p,")
    ]
    assert [int(r[0]) for r in rows] == EXPECTED_PRIMES
    for r in rows:
        assert r[3] == "Monogenic" and r[4] == "Monogenic", r


def test_criterion_02_closed_form_discriminants() -> None:
    for A in range(-50, 51):
        f, g, _ = thm13_family(A)
        q5 = QUINTIC_DRIVER(A)
        assert abs(discriminant(g)) == abs(q5), A
        assert abs(discriminant(f)) == abs((8 * A + 11)) * q5 * q5, A


def test_criterion_03_half_transform_disc_identity() -> None:
    rng = random.Random(0xACC3)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 8)  # full degree 4..16
        mid = [rng.randint(-9, 9) for _ in range(n - 1)]
        f = IntPoly([1] + mid + [rng.randint(-9, 9)] + mid[::-1] + [1])
        if discriminant(f) == 0:
            continue
        assert lemma_disc_identity(f).holds, f
        checked += 1
    for q in (3, 5, 7):
        b = 1
        while q**b <= 100:
            a = 0
            while 2**a * q**b <= 100:
                phi = cyclotomic_2aqb(q, a, b)
                assert lemma_disc_identity(phi).holds, (q, a, b)
                a += 1
            b += 1


def test_criterion_04_perturbed_cyclotomic_disc_identity() -> None:
    checked = 0
    for q in (3, 5, 7, 11, 13):
        for a in (0, 1):
            for r in (1, 2, 3):
                for t in range(-5, 6):
                    chk = conjecture_disc_identity(q, a, r, t)
                    assert chk.holds, (q, a, r, t)
                    assert chk.lhs == chk.rhs
                    checked += 1
    assert checked == 330  # the full grid


def test_criterion_05_index_examples_both_routes() -> None:
    f8 = half_to_reciprocal(IntPoly([57, 26, -3, 1, 1]), 4)
    assert dedekind_index_test(f8, 11) == DIVIDES
    assert search_ideal_square(f8, 11) is not None

    f10a = IntPoly([1, 0, 7, 0, 16, 2, 16, 0, 7, 0, 1])
    assert dedekind_index_test(f10a, 5) == DIVIDES
    assert ideal_square_membership(f10a, 5, IntPoly([-1, 1])).member

    f10b = IntPoly([1, 0, 26, 0, 73, 21, 73, 0, 26, 0, 1])
    assert dedekind_index_test(f10b, 29) == DIVIDES
    assert ideal_square_membership(f10b, 29, IntPoly([-2, 1])).member


def test_criterion_06_gcd_test_equals_membership_search() -> None:
    rng = random.Random(0xACC6)
    disagreements = []
    for _ in range(300):
        deg = rng.randint(1, 6)
        f = IntPoly([rng.randint(-5, 5) for _ in range(deg)] + [1])
        d = discriminant(f) if deg >= 1 else 0
        if d == 0:
            continue
        for p in (2, 3, 5, 7):
            if d % (p * p):
                continue
            gcd_route = dedekind_index_test(f, p) == DIVIDES
            search_route = search_ideal_square(f, p) is not None
            if gcd_route != search_route:
                disagreements.append((f, p))
    assert disagreements == []


def test_criterion_07_index_prime_transfer() -> None:
    rng = random.Random(0xACC7)
    pairs = []
    while len(pairs) < 50:
        deg = rng.randint(2, 5)
        g = IntPoly([rng.randint(-9, 9) for _ in range(deg)] + [1])
        d = discriminant(g)
        if d == 0:
            continue
        for p in (2, 3, 5, 7):
            if d % (p * p) == 0 and dedekind_index_test(g, p) == DIVIDES:
                pairs.append((g, p))
                break
    for g, p in pairs:
        f = half_to_reciprocal(g, g.degree)
        assert dedekind_index_test(f, p) == DIVIDES, (g, p)

    def proven_set(f: IntPoly) -> frozenset:
        primes = set()
        for p, e in factor_int(abs(discriminant(f))).factors:
            if e >= 2 and dedekind_index_test(f, p) == DIVIDES:
                primes.add(p)
        return frozenset(primes)

    checked = 0
    while checked < 100:
        deg = rng.randint(2, 6)
        f = IntPoly([1] + [rng.randint(-5, 5) for _ in range(deg - 1)] + [1])
        if discriminant(f) == 0:
            continue
        assert proven_set(f) == proven_set(reverse(f)), f
        checked += 1


def test_criterion_08_galois_group_of_companions() -> None:
    expected_mod3 = (
        ModPoly(3, (0, 1)),
        ModPoly(3, (1, 1)),
        ModPoly(3, (1, 2, 0, 1)),
    )
    for p in (x for x in EXPECTED_PRIMES if x % 3 == 2):
        _, g, _ = thm13_family(p)
        ev = quintic_galois(g)
        assert ev.conclusion == "ProvenGroup" and ev.group == "S5", p
        fac = factor_mod_p(reduce_mod(g, 3))
        assert tuple(h for h, _ in fac.factors) == expected_mod3, p
        assert all(m == 1 for _, m in fac.factors), p


def test_criterion_09_sextic_family_counting() -> None:
    for a in range(-200, 201):
        f, _, h = sextic_family(a)
        if not is_squarefree_int(h).is_squarefree:
            continue
        verdict = is_monogenic(f).verdict
        assert verdict == "Monogenic", (a, h, verdict)
    rep = count_LF(10**4, "lemma-filter", keep_witnesses=False)
    assert rep.count >= 0.5 * 10**4 / math.log(10**4)


def test_criterion_10_local_density_scan() -> None:
    scan = local_obstruction_scan(H_DEG10, 100)
    assert scan.obstruction_primes == ()
    assert scan.no_obstruction_witnesses[19] == 2
    assert H_DEG10(2) == 27 * 2934361
    assert H_DEG10(2) % (19 * 19) != 0
    assert scan.partial_product > 0
    assert scan.partial_product.denominator >= 1  # exact rational, no floats
