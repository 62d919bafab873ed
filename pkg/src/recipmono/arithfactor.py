"""Exact integer primality, factorization, and squarefreeness.

Primality is deterministic Miller-Rabin on a fixed witness set, proved
sufficient below 3.3 * 10^24 and overwhelmingly reliable beyond.  Factoring
is trial division, perfect-power peeling, and Brent's cycle method with a
deterministic parameter schedule, so results never depend on run order.
Work is bounded by an explicit effort budget; running out is encoded in the
result (a cofactor > 1, or an Unknown squarefree verdict), never raised.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

__all__ = [
    "IntFactorization",
    "SquarefreeResult",
    "factor_int",
    "is_prime",
    "is_squarefree_int",
    "next_prime",
    "primes",
    "valuation",
]

_TRIAL_BOUND = 10_000

# Brent-rho iteration allowance; ample for 30-digit inputs whose smallest
# prime factor stays below ~10^15.
DEFAULT_EFFORT = 100_000_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]

_SMALL_PRIMES = _sieve(_TRIAL_BOUND)
_SMALL_SET = set(_SMALL_PRIMES)

# Strong-pseudoprime witnesses covering all n < 3.317e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    >>> is_prime(2934361)
    True
    >>> is_prime(1559)
    True
    >>> is_prime(1), is_prime(0), is_prime(-7)
    (False, False, False)
    """
    if n < 2:
        return False
    if n <= _TRIAL_BOUND:
        return n in _SMALL_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class IntFactorization:
    """sign * prod(p^e) * cofactor reconstructs the input exactly.

    cofactor is 1 when the split is complete; a surviving cofactor > 1 means
    the effort budget ran out, with cofactor_composite recording whether it
    is at least known to be composite.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1
    cofactor_composite: bool = False

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p ** e
        return v * self.cofactor

    def max_exponent(self) -> int:
        return max((e for _, e in self.factors), default=0)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        parts = [] if self.sign > 0 else ["-1"]
        for p, e in self.factors:
            parts.append(f"{p}^{e}" if e > 1 else str(p))
        if self.cofactor > 1:
            parts.append(f"[{self.cofactor}]")
        return " * ".join(parts) if parts else "1"


@dataclass(frozen=True)
class SquarefreeResult:
    """Tri-state squarefree verdict on |n|.

    status is "Squarefree", "NotSquarefree", or "Unknown"; witness is a
    prime whose square divides n when one was identified (n = 0 and
    unsplittable square cofactors yield NotSquarefree with witness None).
    """

    status: str
    witness: int | None = None

    @property
    def is_squarefree(self) -> bool:
        return self.status == "Squarefree"

    def __bool__(self) -> bool:
        return self.is_squarefree


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int) -> None:
        self.left = n

    def spend(self, k: int) -> bool:
        self.left -= k
        return self.left > 0


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root, exact integer Newton iteration."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int] | None:
    """(base, k) with base**k == n and k >= 2 prime, else None."""
    for k in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if (1 << k) > n:
            break
        r = _iroot(n, k)
        if r ** k == n:
            return r, k
    return None


def _brent_rho(n: int, budget: _Budget) -> int | None:
    """A nontrivial factor of odd composite n, or None when the budget runs
    out.  Brent's variant with gcd batching; the polynomial offset c steps
    through 1, 2, 3, ... so repeated runs walk identical sequences.
    """
    for c in itertools.count(1):
        y, m = 2, 128
        g = q = r = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            if not budget.spend(r):
                return None
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            if not budget.spend(r):
                return None
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle degenerated for this offset; retry with the next c


def _split(n: int, counts: dict[int, int], mult: int, budget: _Budget) -> int:
    """Accumulate prime factors of n (with multiplicity mult) into counts.
    Returns the unsplit remainder (1 on success)."""
    if n == 1:
        return 1
    if is_prime(n):
        counts[n] = counts.get(n, 0) + mult
        return 1
    pw = _perfect_power(n)
    if pw is not None:
        base, k = pw
        return _split(base, counts, mult * k, budget) ** k
    d = _brent_rho(n, budget)
    if d is None:
        return n
    r1 = _split(d, counts, mult, budget)
    r2 = _split(n // d, counts, mult, budget)
    return r1 * r2


def factor_int(n: int, effort: int | None = None) -> IntFactorization:
    """Factor n into sign, ascending (prime, exponent) pairs, and a cofactor.

    >>> str(factor_int(2813995))
    '5 * 19^2 * 1559'
    >>> factor_int(-12).factors
    ((2, 2), (3, 1))
    >>> factor_int(1).sign, factor_int(0).sign
    (1, 0)
    """
    if n == 0:
        return IntFactorization(0, ())
    sign = 1 if n > 0 else -1
    n = abs(n)
    budget = _Budget(DEFAULT_EFFORT if effort is None else effort)
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    cof = _split(n, counts, 1, budget) if n > 1 else 1
    return IntFactorization(
        sign, tuple(sorted(counts.items())), cof, cofactor_composite=cof > 1
    )


def is_squarefree_int(n: int, effort: int | None = None) -> SquarefreeResult:
    """Decide whether any prime squared divides |n|.

    Exits during trial division at the first repeated prime; the surviving
    cofactor is resolved by primality and perfect-power checks before any
    heavy splitting, so typical sweep values never spend rho iterations.

    >>> is_squarefree_int(121).witness
    11
    >>> is_squarefree_int(-13 * 17 * 179).status
    'Squarefree'
    >>> is_squarefree_int(0).status
    'NotSquarefree'
    """
    if n == 0:
        return SquarefreeResult("NotSquarefree")
    n = abs(n)
    if n == 1:
        return SquarefreeResult("Squarefree")
    for p in _SMALL_PRIMES:
        if p * p > n:
            return SquarefreeResult("Squarefree")
        if n % p == 0:
            n //= p
            if n % p == 0:
                return SquarefreeResult("NotSquarefree", p)
    if n == 1 or is_prime(n):
        return SquarefreeResult("Squarefree")
    pw = _perfect_power(n)
    if pw is not None:
        base, _ = pw
        counts: dict[int, int] = {}
        rem = _split(base, counts, 1, _Budget(DEFAULT_EFFORT if effort is None else effort))
        witness = min(counts) if rem == 1 and counts else None
        return SquarefreeResult("NotSquarefree", witness)
    # every remaining prime factor exceeds the trial bound; split fully
    counts = {}
    rem = _split(n, counts, 1, _Budget(DEFAULT_EFFORT if effort is None else effort))
    if rem != 1:
        return SquarefreeResult("Unknown")
    for p, e in sorted(counts.items()):
        if e > 1:
            return SquarefreeResult("NotSquarefree", p)
    return SquarefreeResult("Squarefree")


def valuation(n: int, p: int) -> int:
    """Largest e with p^e | n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def primes():
    """Unbounded ascending prime generator."""
    yield from _SMALL_PRIMES
    n = _TRIAL_BOUND + 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(2, n + 1)
    if k > 2 and k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 1 if k == 2 else 2
    return k
