"""Polynomial algebra over prime fields F_p.

Reduction from the integers, field arithmetic, full factorization into
monic irreducibles (squarefree decomposition, distinct-degree splitting,
equal-degree splitting), factor-degree patterns, and a mod-p certificate
of irreducibility over the rationals.

The equal-degree splitter is randomized but seeded from the input, so
factor orderings are identical across runs; set RECIPMONO_SEED to shift
the whole schedule.
"""

from __future__ import annotations

import hashlib
import os
import random
from dataclasses import dataclass

from .arithfactor import is_prime, primes
from .discriminant import discriminant
from .polycore import IntPoly, poly_to_text

__all__ = [
    "FactorPattern",
    "IrreducibilityCertificate",
    "ModPoly",
    "ModPolyFactorization",
    "factor_mod_p",
    "factor_pattern",
    "irreducibility_certificate",
    "reduce_mod",
]

_SEED_TAG = b"recipmono-v1"


def _splitter_seed(p: int, coeffs: tuple[int, ...]) -> int:
    base = os.environ.get("RECIPMONO_SEED", "").encode()
    h = hashlib.blake2b(digest_size=16)
    h.update(base or _SEED_TAG)
    h.update(repr((p, coeffs)).encode())
    return int.from_bytes(h.digest(), "big")


class ModPoly:
    """Dense polynomial over F_p, residues in [0, p), ascending degree.

    Canonical form (reduced residues, no trailing zeros) so equality and
    hashing are structural.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()) -> None:
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def xpoly(cls, p: int) -> "ModPoly":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"ModPoly({self.p}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        return poly_to_text(IntPoly(self.coeffs)) if self.coeffs else "0"

    def _check(self, other: "ModPoly") -> None:
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return ModPoly(self.p, out)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ModPoly(
            self.p, ((self[i] - other[i]) % self.p for i in range(n))
        )

    def __neg__(self) -> "ModPoly":
        return ModPoly(self.p, (-c % self.p for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return ModPoly(self.p, (c * other % self.p for c in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ModPoly(self.p, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] = (out[i + j] + ci * cj) % self.p
        return ModPoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ModPoly":
        if e < 0:
            raise ValueError("negative exponent")
        out = ModPoly(self.p, (1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        p = self.p
        d = other.degree
        inv = pow(other.lc, -1, p)
        rem = list(self.coeffs)
        if len(rem) - 1 < d:
            return ModPoly(p, ()), self
        quo = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                q = c * inv % p
                quo[i - d] = q
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] = (rem[i - d + j] - q * oc) % p
        return ModPoly(p, quo), ModPoly(p, rem)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return self.divmod(other)[1]

    def monic(self) -> "ModPoly":
        if self.is_zero() or self.lc == 1:
            return self
        return self * pow(self.lc, -1, self.p)

    def gcd(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "ModPoly":
        return ModPoly(
            self.p, (i * c % self.p for i, c in enumerate(self.coeffs) if i)
        )

    def pow_mod(self, e: int, modulus: "ModPoly") -> "ModPoly":
        """self**e reduced mod modulus, by repeated squaring."""
        self._check(modulus)
        out = ModPoly(self.p, (1,))
        base = self % modulus
        while e:
            if e & 1:
                out = out * base % modulus
            base = base * base % modulus
            e >>= 1
        return out

    def pth_root(self) -> "ModPoly":
        """Inverse of Frobenius: for f = g(x^p), recover g.  Residues are
        their own p-th roots in F_p."""
        if any(c and i % self.p for i, c in enumerate(self.coeffs)):
            raise ValueError("not a p-th power")
        return ModPoly(self.p, self.coeffs[:: self.p])

    def lift(self) -> IntPoly:
        """The integer polynomial with these residues as coefficients."""
        return IntPoly(self.coeffs)


@dataclass(frozen=True)
class ModPolyFactorization:
    """unit * prod(factor^multiplicity) over F_p; factors monic irreducible,
    sorted by (degree, coefficients) so output is reproducible."""

    p: int
    unit: int
    factors: tuple[tuple[ModPoly, int], ...]

    def product(self) -> ModPoly:
        out = ModPoly(self.p, (self.unit,))
        for g, m in self.factors:
            for _ in range(m):
                out = out * g
        return out

    def __str__(self) -> str:
        parts = [str(self.unit)] if self.unit != 1 or not self.factors else []
        for g, m in self.factors:
            parts.append(f"({g})^{m}" if m > 1 else f"({g})")
        return " * ".join(parts)


def reduce_mod(f: IntPoly, p: int) -> ModPoly:
    """Coefficientwise reduction of an integer polynomial.

    >>> str(reduce_mod(IntPoly([6, 5, 1]), 5))
    'x^2+1'
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return ModPoly(p, f.coeffs)


def _squarefree_parts(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """(squarefree monic piece, multiplicity) pairs whose product with
    multiplicities reproduces monic f."""
    p = f.p
    out: list[tuple[ModPoly, int]] = []
    e = 1
    while f.degree > 0:
        der = f.derivative()
        if der.is_zero():
            f = f.pth_root()
            e *= p
            continue
        c = f.gcd(der)
        w = f // c
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = w // y
            if z.degree > 0:
                out.append((z, i * e))
            w = y
            c = c // y
            i += 1
        if c.degree == 0:
            break
        f = c.pth_root()
        e *= p
    return out


def _distinct_degree(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """(product of irreducible factors of degree d, d) for squarefree monic f."""
    p = f.p
    out: list[tuple[ModPoly, int]] = []
    x = ModPoly.xpoly(p)
    h = x % f
    d = 0
    while f.degree > 2 * (d + 1) - 2:
        d += 1
        h = h.pow_mod(p, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree(f: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    """Split squarefree monic f, all of whose irreducible factors have
    degree d, into those factors."""
    p = f.p
    if f.degree == d:
        return [f.monic()]
    one = ModPoly(p, (1,))
    while True:
        h = ModPoly(p, [rng.randrange(p) for _ in range(f.degree)])
        if h.degree < 1:
            continue
        g = f.gcd(h)
        if 0 < g.degree < f.degree:
            break
        if p == 2:
            # trace map sum_{i<d} h^(2^i) takes each root into F_2
            t = h % f
            acc = h % f
            for _ in range(d - 1):
                acc = acc * acc % f
                t = t + acc
            g = f.gcd(t)
        else:
            g = f.gcd(h.pow_mod((p ** d - 1) // 2, f) - one)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor_mod_p(f: ModPoly) -> ModPolyFactorization:
    """Complete factorization over F_p into monic irreducibles.

    >>> str(factor_mod_p(ModPoly(2, [1, 0, 0, 0, 1])))
    '(x+1)^4'
    >>> str(factor_mod_p(ModPoly(5, [1, 0, 1])))
    '(x+2) * (x+3)'
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.lc
    rng = random.Random(_splitter_seed(f.p, f.coeffs))
    found: list[tuple[ModPoly, int]] = []
    for piece, mult in _squarefree_parts(f.monic()):
        for prod, d in _distinct_degree(piece):
            for irr in _equal_degree(prod, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda gm: (gm[0].degree, gm[0].coeffs))
    return ModPolyFactorization(f.p, unit, tuple(found))


@dataclass(frozen=True)
class FactorPattern:
    """Factor-degree data of f mod p: one (degree, multiplicity) entry per
    distinct irreducible factor, sorted."""

    p: int
    entries: tuple[tuple[int, int], ...]
    all_simple: bool
    divides_disc: bool

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degrees with multiplicity expanded, e.g. (1, 1, 3)."""
        out: list[int] = []
        for d, m in self.entries:
            out.extend([d] * m)
        return tuple(sorted(out))


def factor_pattern(f: IntPoly, p: int) -> FactorPattern:
    """Degrees and multiplicities of the irreducible factors of f mod p.

    >>> factor_pattern(IntPoly([-1, 0, 1]), 2).entries
    ((1, 2),)
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.lc % p == 0:
        raise ValueError("leading coefficient vanishes mod p")
    fac = factor_mod_p(reduce_mod(f, p))
    entries = tuple(sorted((g.degree, m) for g, m in fac.factors))
    simple = all(m == 1 for _, m in entries)
    return FactorPattern(
        p, entries, simple, f.degree >= 1 and discriminant(f) % p == 0
    )


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Outcome of the rational-irreducibility probe.

    status "Irreducible" carries either a witness prime whose reduction is
    irreducible, or (witness None) the list of primes whose factor-degree
    subset sums jointly exclude every proper split.  status "Reducible"
    carries the found factor evidence.  "Unknown" reports the degree sums
    that survived every sampled prime.
    """

    status: str
    witness_prime: int | None = None
    evidence: str = ""
    primes_used: tuple[int, ...] = ()
    surviving_degrees: tuple[int, ...] = ()


def _rational_root(f: IntPoly) -> int | None:
    """An integer root of monic f, or None.  Candidates are divisors of the
    constant term, enumerated from its factorization when small enough."""
    from .arithfactor import factor_int

    c0 = f[0]
    if c0 == 0:
        return 0
    fac = factor_int(c0)
    divisors = [1]
    for q, e in fac.factors:
        divisors = [d * q ** k for d in divisors for k in range(e + 1)]
        if len(divisors) > 4096:
            break
    if fac.cofactor > 1 or len(divisors) > 4096:
        divisors = list(range(1, 1001))
    for d in sorted(set(divisors)):
        if c0 % d == 0:
            if f(d) == 0:
                return d
            if f(-d) == 0:
                return -d
    return None


def irreducibility_certificate(
    f: IntPoly, prime_budget: int = 25
) -> IrreducibilityCertificate:
    """Decide irreducibility of monic f over the rationals when mod-p data
    suffices; otherwise report Unknown honestly.

    Search order: degree and constant-term trivia, integer roots, zero
    discriminant, then reductions mod the first prime_budget primes not
    dividing disc(f).  A single irreducible reduction certifies; otherwise
    the subset sums of factor degrees are intersected across primes and
    certify when only the trivial splits 0 and deg f survive.

    >>> irreducibility_certificate(IntPoly([1, 1, 1])).witness_prime
    2
    >>> irreducibility_certificate(IntPoly([-1, 0, 1])).status
    'Reducible'
    """
    if not f.is_monic:
        raise ValueError("certificate requires a monic polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    if n == 1:
        return IrreducibilityCertificate("Irreducible", None, "degree 1")
    if f[0] == 0:
        return IrreducibilityCertificate("Reducible", None, "root at 0")
    root = _rational_root(f)
    if root is not None:
        return IrreducibilityCertificate("Reducible", None, f"root at {root}")
    disc = discriminant(f)
    if disc == 0:
        return IrreducibilityCertificate(
            "Reducible", None, "repeated factor (zero discriminant)"
        )
    possible = (1 << (n + 1)) - 1
    target = 1 | (1 << n)
    used: list[int] = []
    for p in primes():
        if len(used) >= prime_budget:
            break
        if disc % p == 0:
            continue
        used.append(p)
        pat = factor_pattern(f, p)
        if pat.entries == ((n, 1),):
            return IrreducibilityCertificate(
                "Irreducible", p, "irreducible reduction", tuple(used)
            )
        mask = 1
        for d in pat.degrees:
            mask |= mask << d
        possible &= mask
        if possible == target:
            return IrreducibilityCertificate(
                "Irreducible",
                None,
                "factor-degree subset sums exclude proper splits",
                tuple(used),
            )
    surviving = tuple(
        d for d in range(n + 1) if possible >> d & 1 and d not in (0, n)
    )
    return IrreducibilityCertificate(
        "Unknown", None, "degree sieve inconclusive", tuple(used), surviving
    )
