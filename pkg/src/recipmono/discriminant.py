"""Exact resultants and discriminants over the integers.

The production path is the subresultant polynomial-remainder sequence with
scalar bookkeeping in exact rationals; a fraction-free determinant of the
Sylvester matrix serves as an independent cross-check.  On top sit two
checkable identities tying the discriminant of an even-degree reciprocal
polynomial to the discriminant of its half-degree companion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arithfactor import IntFactorization, factor_int
from .polycore import IntPoly, half_to_reciprocal, reciprocal_to_half

__all__ = [
    "DiscriminantReport",
    "IdentityCheck",
    "conjecture_disc_identity",
    "discriminant",
    "discriminant_report",
    "lemma_disc_identity",
    "resultant",
    "sylvester_resultant",
]


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Res(p, q), exact, by the subresultant remainder sequence.

    Scalar corrections from pseudo-division and subresultant rescaling are
    carried in a Fraction multiplier, so the returned integer is the true
    resultant regardless of how coefficient growth was tamed along the way.

    >>> resultant(IntPoly([-2, 1]), IntPoly([-3, 1]))
    -1
    >>> resultant(IntPoly([1, 0, 1]), IntPoly([0, 1]))
    1
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    a, b = p, q
    mult = Fraction(1)
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2:
            mult = -mult
        a, b = b, a
    if b.degree == 0:
        return b.lc ** a.degree
    g = h = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        c = b.lc
        # pseudo-remainder: c^(delta+1) * a = Q * b + r
        r = list((a * c ** (delta + 1)).coeffs)
        for i in range(da, db - 1, -1):
            lead = r[i]
            if lead:
                s, t = divmod(lead, c)
                if t:
                    raise AssertionError("pseudo-division not exact")
                for j, bc in enumerate(b.coeffs):
                    r[i - db + j] -= s * bc
        rem = IntPoly(r)
        if rem.is_zero():
            return 0
        divisor = g * h ** delta
        rem_scaled = rem.exact_div_scalar(divisor)
        dr = rem_scaled.degree
        if (da * db) % 2:
            mult = -mult
        mult *= Fraction(c) ** (da - dr) / Fraction(c) ** ((delta + 1) * db)
        mult *= Fraction(divisor) ** db
        a, b = b, rem_scaled
        if dr == 0:
            val = mult * Fraction(b.lc) ** a.degree
            if val.denominator != 1:
                raise AssertionError("resultant bookkeeping left a fraction")
            return int(val)
        g = a.lc
        hd = Fraction(g) ** delta / Fraction(h) ** (delta - 1)
        if hd.denominator != 1:
            raise AssertionError("subresultant scale not integral")
        h = int(hd)


def sylvester_resultant(p: IntPoly, q: IntPoly) -> int:
    """Res(p, q) as the determinant of the Sylvester matrix, computed by
    fraction-free (Bareiss) elimination.  Slower than the remainder-sequence
    route; kept as an independent oracle."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    dp, dq = p.degree, q.degree
    n = dp + dq
    if n == 0:
        return 1
    rows: list[list[int]] = []
    prow = [p[dp - j] for j in range(dp + 1)]
    qrow = [q[dq - j] for j in range(dq + 1)]
    for i in range(dq):
        rows.append([0] * i + prow + [0] * (n - dp - 1 - i))
    for i in range(dp):
        rows.append([0] * i + qrow + [0] * (n - dq - 1 - i))
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (piv * ri[j] - rik * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return sign * rows[n - 1][n - 1]


def discriminant(f: IntPoly) -> int:
    """(-1)^(n(n-1)/2) * Res(f, f') / lc(f) for n = deg f >= 1.

    Degree 1 gives 1 (the empty root-difference product).

    >>> discriminant(IntPoly([3, 3, 1]))
    -3
    >>> discriminant(IntPoly([1, 1, 1, 1, 1]))
    125
    """
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val = Fraction(sign * r, f.lc)
    if val.denominator != 1:
        raise AssertionError("leading coefficient must divide the resultant")
    return int(val)


@dataclass(frozen=True)
class DiscriminantReport:
    """Discriminant bundled with its factorization and the primes whose
    squares divide it (the only candidate index divisors downstream)."""

    poly: IntPoly
    disc: int
    factorization: IntFactorization
    square_divisor_primes: frozenset[int]


def discriminant_report(f: IntPoly, effort: int | None = None) -> DiscriminantReport:
    d = discriminant(f)
    fac = factor_int(d, effort)
    squares = frozenset(p for p, e in fac.factors if e >= 2)
    return DiscriminantReport(f, d, fac, squares)


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of a discriminant identity, compared exactly."""

    holds: bool
    lhs: int
    rhs: int


def lemma_disc_identity(f: IntPoly) -> IdentityCheck:
    """For monic reciprocal f of degree 2n with half-degree companion g:

        disc(f) = (-1)^n * f(1) * f(-1) * disc(g)^2

    (the printed sign (-1)^(n(2n-1)) collapses to (-1)^n since 2n-1 is odd).
    Returns both sides; degree-1 companions use disc = 1.

    >>> lemma_disc_identity(IntPoly([1, 3, 5, 3, 1]))
    IdentityCheck(holds=True, lhs=117, rhs=117)
    """
    if not f.is_monic:
        raise ValueError("identity stated for monic polynomials")
    g = reciprocal_to_half(f)
    n = f.degree // 2
    lhs = discriminant(f)
    dg = discriminant(g)
    rhs = (-1) ** n * f(1) * f(-1) * dg * dg
    return IdentityCheck(lhs == rhs, lhs, rhs)


def conjecture_disc_identity(q: int, a: int, r: int, t: int) -> IdentityCheck:
    """Exact check of the closed form for the discriminant of the perturbed
    cyclotomic family member with index 2^a * q against the discriminant of
    its half-degree companion:

        a = 0:  disc(F) = q * (4qrt + 1) * (4q^2 rt + e) * disc(g)^2
        a = 1:  disc(F) = q * (4qrt + e) * (4q^2 rt + 1) * disc(g)^2

    where e = (-1)^((q-1)/2).  Returns both sides.
    """
    from .families import FamilyParams, build_F, build_ga

    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    if r == 0:
        raise ValueError("r must be nonzero")
    F = build_F(FamilyParams(q, a, 1, r, t))
    g = build_ga(q, a, r, t)
    lhs = discriminant(F)
    eps = (-1) ** ((q - 1) // 2)
    dg = discriminant(g)
    if a == 0:
        rhs = q * (4 * q * r * t + 1) * (4 * q * q * r * t + eps) * dg * dg
    else:
        rhs = q * (4 * q * r * t + eps) * (4 * q * q * r * t + 1) * dg * dg
    return IdentityCheck(lhs == rhs, lhs, rhs)
