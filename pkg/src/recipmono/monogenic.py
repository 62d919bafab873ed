"""Monogenicity decisions at the polynomial level.

A monic irreducible f generates a number field; its index measures how far
Z[theta] falls short of the full ring of integers.  Only the prime support
of the index matters here, and a prime can divide it only when its square
divides disc(f).  Each candidate prime is settled by the classical
reduction criterion in two independent forms: the gcd form, and explicit
membership of f in the square of the ideal generated by p and a lifted
irreducible factor.  On top sit the sufficient test for reciprocal
polynomials through the half-degree companion, and its power-compositional
extension.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arithfactor import (
    IntFactorization,
    SquarefreeResult,
    factor_int,
    is_prime,
    is_squarefree_int,
)
from .discriminant import discriminant
from .modpoly import (
    IrreducibilityCertificate,
    ModPoly,
    factor_mod_p,
    irreducibility_certificate,
    reduce_mod,
)
from .polycore import IntPoly, compose_power, is_reciprocal, reciprocal_to_half

__all__ = [
    "DIVIDES",
    "DOES_NOT_DIVIDE",
    "IdealSquareWitness",
    "MembershipResult",
    "MonogenicityReport",
    "PowerCompositionalReport",
    "SufficientReport",
    "dedekind_index_test",
    "ideal_square_membership",
    "is_monogenic",
    "power_compositional_check",
    "search_ideal_square",
    "sufficient_reciprocal_monogenic",
]

DIVIDES = "DividesIndex"
DOES_NOT_DIVIDE = "DoesNotDivideIndex"


def dedekind_index_test(f: IntPoly, p: int) -> str:
    """Does p divide the index of monic f?  Classical gcd criterion.

    Factor f mod p, lift the radical g* and the complement h* = (f mod p)/g*,
    form F = (g*.h* - f)/p, and report DividesIndex exactly when
    gcd(F, g*, h*) mod p is nonconstant.

    >>> dedekind_index_test(IntPoly([1, 0, 1]), 2)
    'DoesNotDivideIndex'
    >>> dedekind_index_test(IntPoly([-5, 0, 1]), 2)
    'DividesIndex'
    """
    if not f.is_monic:
        raise ValueError("index test requires a monic polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fbar = reduce_mod(f, p)
    fac = factor_mod_p(fbar)
    radical = ModPoly(p, (1,))
    for g, _ in fac.factors:
        radical = radical * g
    complement = fbar // radical
    gstar = radical.lift()
    hstar = complement.lift()
    diff = gstar * hstar - f
    fdiv = diff.exact_div_scalar(p)
    fdiv_bar = reduce_mod(fdiv, p)
    blocking = fdiv_bar.gcd(radical.gcd(complement))
    return DIVIDES if blocking.degree >= 1 else DOES_NOT_DIVIDE


@dataclass(frozen=True)
class IdealSquareWitness:
    """Certificate that f lies in (p, h)^2 = (p^2, p.h, h^2):

        f = cof_hh * h^2 + p * cof_ph * h + p^2 * cof_pp

    recompose() rebuilds the left side exactly.
    """

    p: int
    h: IntPoly
    cof_hh: IntPoly
    cof_ph: IntPoly
    cof_pp: IntPoly

    def recompose(self) -> IntPoly:
        h2 = self.h * self.h
        return (
            self.cof_hh * h2
            + self.p * self.cof_ph * self.h
            + self.p * self.p * self.cof_pp
        )


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    witness: IdealSquareWitness | None = None


def _check_h(h: IntPoly, p: int) -> ModPoly:
    if not h.is_monic:
        raise ValueError("h must be monic")
    hbar = reduce_mod(h, p)
    if hbar.degree != h.degree:
        raise ValueError("h degenerates mod p")
    fac = factor_mod_p(hbar)
    if len(fac.factors) != 1 or fac.factors[0][1] != 1:
        raise ValueError("h must be irreducible mod p")
    return hbar


def ideal_square_membership(f: IntPoly, p: int, h: IntPoly) -> MembershipResult:
    """Decide f in (p, h)^2 for monic h irreducible mod p.

    Reduce f mod h^2 over the integers; the remainder r belongs to the
    ideal exactly when p divides r coefficientwise and h divides r/p mod p.
    On success the three cofactors of the decomposition are returned as a
    reusable witness.

    >>> ideal_square_membership(IntPoly([1, 0, 1]), 2, IntPoly([1, 1])).member
    False
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    hbar = _check_h(h, p)
    quo, rem = f.divrem(h * h)
    if any(c % p for c in rem.coeffs):
        return MembershipResult(False)
    s = rem.exact_div_scalar(p)
    sbar = reduce_mod(s, p)
    bq, br = sbar.divmod(hbar)
    if not br.is_zero():
        return MembershipResult(False)
    cof_ph = bq.lift()
    cof_pp = (s - cof_ph * h).exact_div_scalar(p)
    witness = IdealSquareWitness(p, h, quo, cof_ph, cof_pp)
    if witness.recompose() != f:
        raise AssertionError("witness failed to recompose the input")
    return MembershipResult(True, witness)


def search_ideal_square(
    f: IntPoly, p: int, max_degree: int | None = None
) -> IdealSquareWitness | None:
    """Exhaust monic h irreducible mod p, deg h <= deg(f)/2, for a witness
    that f lies in (p, h)^2.  Returns the first witness found (h ordered by
    degree then coefficients) or None."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    top = f.degree // 2 if max_degree is None else max_degree
    for d in range(1, top + 1):
        for mask in range(p ** d):
            cs, m = [], mask
            for _ in range(d):
                cs.append(m % p)
                m //= p
            hbar = ModPoly(p, cs + [1])
            fac = factor_mod_p(hbar)
            if len(fac.factors) != 1 or fac.factors[0][1] != 1:
                continue
            res = ideal_square_membership(f, p, hbar.lift())
            if res.member:
                return res.witness
    return None


@dataclass(frozen=True)
class MonogenicityReport:
    """Decision record for one monic polynomial.

    candidate_primes are those whose square divides the discriminant (the
    only primes that can divide the index); index_primes are the candidates
    proven to divide it.  verdict is Monogenic only when irreducibility is
    proven, the candidate set is fully known, and every candidate passed.
    """

    poly: IntPoly
    certificate: IrreducibilityCertificate
    disc: int
    disc_factorization: IntFactorization | None
    candidate_primes: tuple[int, ...]
    index_primes: tuple[int, ...]
    per_prime: dict[int, str] = field(default_factory=dict)
    verdict: str = "Unknown"
    reason: str = ""


def is_monogenic(
    f: IntPoly, effort: int | None = None, prime_budget: int = 25
) -> MonogenicityReport:
    """Full decision pipeline: irreducibility probe, discriminant, candidate
    primes from its factorization, index test per candidate.

    >>> is_monogenic(IntPoly([1, 3, 5, 3, 1])).verdict
    'Monogenic'
    >>> is_monogenic(IntPoly([-5, 0, 1])).index_primes
    (2,)
    """
    if not f.is_monic:
        raise ValueError("monogenicity is decided for monic polynomials")
    cert = irreducibility_certificate(f, prime_budget)
    disc = discriminant(f)
    if disc == 0:
        return MonogenicityReport(
            f, cert, 0, None, (), (), {}, "Unknown",
            "zero discriminant: repeated factor, no field generated",
        )
    fac = factor_int(disc, effort)
    candidates = tuple(p for p, e in fac.factors if e >= 2)
    per: dict[int, str] = {}
    index_primes: list[int] = []
    for p in candidates:
        res = dedekind_index_test(f, p)
        per[p] = res
        if res == DIVIDES:
            index_primes.append(p)
    if index_primes:
        return MonogenicityReport(
            f, cert, disc, fac, candidates, tuple(index_primes), per,
            "NotMonogenic", f"index divisible by {index_primes[0]}",
        )
    if cert.status == "Reducible":
        return MonogenicityReport(
            f, cert, disc, fac, candidates, (), per, "Unknown",
            f"not irreducible: {cert.evidence}",
        )
    if cert.status == "Unknown":
        return MonogenicityReport(
            f, cert, disc, fac, candidates, (), per, "Unknown",
            "irreducibility unresolved",
        )
    if not fac.complete:
        return MonogenicityReport(
            f, cert, disc, fac, candidates, (), per, "Unknown",
            "discriminant factorization incomplete",
        )
    return MonogenicityReport(
        f, cert, disc, fac, candidates, (), per, "Monogenic", ""
    )


@dataclass(frozen=True)
class SufficientReport:
    """Outcome of the sufficient test for reciprocal f: both conditions
    (boundary product f(1)f(-1) squarefree, companion g monogenic) verified
    implies monogenic.  Never claims the negative; failures are
    Inconclusive with the blocking condition named."""

    verdict: str
    poly: IntPoly
    certificate: IrreducibilityCertificate
    boundary_product: int
    boundary_squarefree: SquarefreeResult
    companion: IntPoly
    companion_report: MonogenicityReport
    reason: str = ""


def sufficient_reciprocal_monogenic(
    f: IntPoly, effort: int | None = None, prime_budget: int = 25
) -> SufficientReport:
    """Sufficient (one-directional) monogenicity test for monic reciprocal f
    of even degree: f irreducible, f(1)f(-1) squarefree, and the half-degree
    companion monogenic together prove f monogenic.

    >>> sufficient_reciprocal_monogenic(IntPoly([1, 0, 0, 3, 0, 0, 1])).verdict
    'MonogenicProven'
    """
    if not f.is_monic or not is_reciprocal(f) or f.degree % 2:
        raise ValueError("need a monic reciprocal polynomial of even degree")
    cert = irreducibility_certificate(f, prime_budget)
    bp = f(1) * f(-1)
    sq = is_squarefree_int(bp, effort)
    g = reciprocal_to_half(f)
    grep = is_monogenic(g, effort, prime_budget)
    if cert.status != "Irreducible":
        reason = f"irreducibility not proven ({cert.status})"
    elif not sq.is_squarefree:
        reason = f"boundary product {bp} not squarefree ({sq.status})"
    elif grep.verdict != "Monogenic":
        reason = f"companion verdict {grep.verdict}"
    else:
        return SufficientReport(
            "MonogenicProven", f, cert, bp, sq, g, grep
        )
    return SufficientReport(
        "Inconclusive", f, cert, bp, sq, g, grep, reason
    )


@dataclass(frozen=True)
class PowerCompositionalReport:
    """Outcome for f(x^k): companion of f monogenic, boundary product of f
    squarefree, and no prime of k divides the index of f(x^k)."""

    verdict: str
    base: IntPoly
    k: int
    composed: IntPoly
    composed_certificate: IrreducibilityCertificate
    boundary_product: int
    boundary_squarefree: SquarefreeResult
    companion_report: MonogenicityReport
    k_prime_results: dict[int, str]
    reason: str = ""


def power_compositional_check(
    f: IntPoly, k: int, effort: int | None = None, prime_budget: int = 25
) -> PowerCompositionalReport:
    """Prove monogenicity of f(x^k) for monic reciprocal f and k >= 2.

    Conditions: f(x^k) irreducible (certificate), the half-degree companion
    of f monogenic, f(1)f(-1) squarefree, and for every prime p dividing k
    the index test on f(x^k) at p comes back clean.

    >>> power_compositional_check(IntPoly([1, 3, 5, 3, 1]), 3).verdict
    'MonogenicProven'
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not f.is_monic or not is_reciprocal(f) or f.degree % 2:
        raise ValueError("need a monic reciprocal polynomial of even degree")
    fk = compose_power(f, k)
    cert = irreducibility_certificate(fk, prime_budget)
    bp = f(1) * f(-1)
    sq = is_squarefree_int(bp, effort)
    g = reciprocal_to_half(f)
    grep = is_monogenic(g, effort, prime_budget)
    kp: dict[int, str] = {}
    for p, _ in factor_int(k).factors:
        kp[p] = dedekind_index_test(fk, p)
    if cert.status != "Irreducible":
        reason = f"irreducibility of composition not proven ({cert.status})"
    elif grep.verdict != "Monogenic":
        reason = f"companion verdict {grep.verdict}"
    elif not sq.is_squarefree:
        reason = f"boundary product {bp} not squarefree ({sq.status})"
    else:
        failing = [p for p, r in kp.items() if r != DOES_NOT_DIVIDE]
        if failing:
            reason = f"index of composition divisible by {failing[0]}"
        else:
            return PowerCompositionalReport(
                "MonogenicProven", f, k, fk, cert, bp, sq, grep, kp
            )
    return PowerCompositionalReport(
        "Inconclusive", f, k, fk, cert, bp, sq, grep, kp, reason
    )
