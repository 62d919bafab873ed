"""Galois-group evidence from factor patterns at good primes.

A squarefree factorization of f mod p (which forces p not to divide
disc f) exhibits an element of the Galois group whose cycle type is the
multiset of factor degrees.  Collecting types across primes constrains the
group; for quintics the classical 3-cycle + 5-cycle + discriminant-square
argument resolves it completely to S5 or A5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arithfactor import primes
from .discriminant import discriminant
from .modpoly import factor_pattern, irreducibility_certificate
from .polycore import IntPoly

__all__ = [
    "GaloisEvidence",
    "cycle_type_scan",
    "disc_is_square",
    "quintic_galois",
]

DEFAULT_PRIME_BUDGET = 50


def disc_is_square(n: int) -> str:
    """Exact perfect-square test: "Square" or "NotSquare".

    >>> disc_is_square(49), disc_is_square(-135), disc_is_square(14641)
    ('Square', 'NotSquare', 'Square')
    """
    if n < 0:
        return "NotSquare"
    r = math.isqrt(n)
    return "Square" if r * r == n else "NotSquare"


@dataclass(frozen=True)
class GaloisEvidence:
    """Cycle types observed at good primes, plus the discriminant square
    test and whatever conclusion they support.

    conclusion is "ProvenGroup" (with group set), "Constraint" (facts list
    populated), or "Inconclusive".  skipped_primes divide the discriminant
    and contributed nothing.
    """

    poly: IntPoly
    samples: tuple[tuple[int, tuple[int, ...], bool], ...]
    disc_square: str
    conclusion: str
    group: str | None = None
    constraints: tuple[str, ...] = ()
    skipped_primes: tuple[int, ...] = ()


def cycle_type_scan(
    f: IntPoly, prime_budget: int = DEFAULT_PRIME_BUDGET
) -> GaloisEvidence:
    """Record factor-degree patterns of f at the first prime_budget primes
    not dividing disc(f).  Each simple pattern is a cycle type present in
    the Galois group; the conclusion lists the implied order facts.

    >>> ev = cycle_type_scan(IntPoly([1, 1, 1]), 5)
    >>> sorted(set(s[1] for s in ev.samples))
    [(1, 1), (2,)]
    """
    if not f.is_monic:
        raise ValueError("scan requires a monic polynomial")
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("zero discriminant: no cycle types available")
    samples: list[tuple[int, tuple[int, ...], bool]] = []
    skipped: list[int] = []
    for p in primes():
        if len(samples) >= prime_budget:
            break
        if disc % p == 0:
            skipped.append(p)
            continue
        pat = factor_pattern(f, p)
        samples.append((p, pat.degrees, pat.all_simple))
    types = sorted(set(s[1] for s in samples))
    facts = []
    for tau in types:
        facts.append(f"cycle type {tau} present")
        order = math.lcm(*tau) if tau else 1
        if order > 1:
            facts.append(f"group order divisible by {order}")
    return GaloisEvidence(
        f,
        tuple(samples),
        disc_is_square(disc),
        "Constraint" if facts else "Inconclusive",
        None,
        tuple(dict.fromkeys(facts)),
        tuple(skipped),
    )


def quintic_galois(
    g: IntPoly, prime_budget: int = DEFAULT_PRIME_BUDGET
) -> GaloisEvidence:
    """Resolve the Galois group of an irreducible quintic.

    A {1,1,3} pattern exhibits a 3-cycle and a {5} pattern a 5-cycle;
    together with transitivity the group contains A5, and the discriminant
    square test separates A5 from S5.  Without both patterns, or without a
    proven irreducibility certificate, the raw constraints are returned.

    >>> quintic_galois(IntPoly([-1, -1, 0, 0, 0, 1])).group
    'S5'
    """
    if g.degree != 5:
        raise ValueError("resolver is specific to degree 5")
    scan = cycle_type_scan(g, prime_budget)
    cert = irreducibility_certificate(g)
    types = set(s[1] for s in scan.samples)
    has3 = (1, 1, 3) in types
    has5 = (5,) in types
    if cert.status == "Irreducible" and has3 and has5:
        group = "A5" if scan.disc_square == "Square" else "S5"
        return GaloisEvidence(
            g, scan.samples, scan.disc_square, "ProvenGroup", group,
            scan.constraints, scan.skipped_primes,
        )
    extra = []
    if cert.status != "Irreducible":
        extra.append(f"irreducibility not proven ({cert.status})")
    return GaloisEvidence(
        g, scan.samples, scan.disc_square,
        "Constraint" if scan.constraints or extra else "Inconclusive",
        None, scan.constraints + tuple(extra), scan.skipped_primes,
    )
