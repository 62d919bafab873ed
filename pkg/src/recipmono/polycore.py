"""Dense univariate polynomials over the integers.

Everything downstream (discriminants, index tests, family sweeps) runs on
these: immutable ascending-degree coefficient tuples, exact integer
arithmetic, and the degree-halving transform for reciprocal polynomials.
"""

from __future__ import annotations

import json
import re
from typing import Iterable

__all__ = [
    "IntPoly",
    "ChebCoeffTable",
    "chebyshev_c",
    "compose_power",
    "cyclotomic_2aqb",
    "half_to_reciprocal",
    "is_reciprocal",
    "parse_poly",
    "poly_from_json",
    "poly_from_text",
    "poly_to_json",
    "poly_to_text",
    "reciprocal_to_half",
    "reverse",
]


class IntPoly:
    """Polynomial with integer coefficients, stored densely, ascending degree.

    Instances are immutable and hashable.  The zero polynomial is the empty
    coefficient tuple; its degree is reported as -1, standing in for the
    usual degree minus-infinity convention.

    >>> p = IntPoly([1, 3, 5, 3, 1])
    >>> p.degree
    4
    >>> str(p)
    'x^4+3x^3+5x^2+3x+1'
    >>> p(1), p(-1)
    (13, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        """c * x^k"""
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (int(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return poly_to_text(self)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-other if isinstance(other, IntPoly) else -int(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return (-self) + int(other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    out[i + j] += ci * cj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        out = IntPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, v):
        """Evaluate by Horner's rule.  Works for int, Fraction, or any ring
        element supporting + and *."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by x^k, k >= 0."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return IntPoly()
        return IntPoly((0,) * k + self.coeffs)

    def content(self) -> int:
        """gcd of the coefficients; 0 for the zero polynomial."""
        import math

        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def divrem(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder for a monic divisor; stays in Z[x]."""
        if divisor.is_zero():
            raise ValueError("division by zero polynomial")
        if not divisor.is_monic:
            raise ValueError("divrem requires a monic divisor")
        d = divisor.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < d:
            return IntPoly(), self
        quo = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                quo[i - d] = c
                for j, dc in enumerate(divisor.coeffs):
                    rem[i - d + j] -= c * dc
        return IntPoly(quo), IntPoly(rem)

    def exact_div_scalar(self, k: int) -> "IntPoly":
        """Divide every coefficient by k, which must divide exactly."""
        if k == 0:
            raise ValueError("division by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise ValueError(f"coefficient {c} not divisible by {k}")
            out.append(q)
        return IntPoly(out)


def divexact(f: IntPoly, g: IntPoly) -> IntPoly:
    """Exact polynomial division f / g, assuming g | f in Z[x]."""
    if g.is_zero():
        raise ValueError("division by zero polynomial")
    if f.is_zero():
        return IntPoly()
    rem = list(f.coeffs)
    d, glc = g.degree, g.lc
    if f.degree < d:
        raise ValueError("inexact polynomial division")
    quo = [0] * (f.degree - d + 1)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if c:
            q, r = divmod(c, glc)
            if r:
                raise ValueError("inexact polynomial division")
            quo[i - d] = q
            for j, gc in enumerate(g.coeffs):
                rem[i - d + j] -= q * gc
    if any(rem):
        raise ValueError("inexact polynomial division")
    return IntPoly(quo)


def is_reciprocal(f: IntPoly) -> bool:
    """True when the coefficient sequence is a palindrome, i.e.
    f(x) = x^deg(f) * f(1/x)."""
    return f.coeffs == tuple(reversed(f.coeffs))


def reverse(f: IntPoly) -> IntPoly:
    """x^deg(f) * f(1/x): the coefficient sequence reversed.

    Refuses a zero constant term since reversal would silently drop degree.
    """
    if f[0] == 0:
        raise ValueError("reverse requires a nonzero constant term")
    return IntPoly(reversed(f.coeffs))


class ChebCoeffTable:
    """Grow-on-demand table of the rescaled Chebyshev basis C_j.

    C_0 = 2, C_1 = u, C_j = u*C_{j-1} - C_{j-2}.  These integer polynomials
    satisfy C_j(z + 1/z) = z^j + z^-j, which is what makes the degree-halving
    transform exact.  Extension is idempotent, so the shared table is safe
    under concurrent readers.
    """

    def __init__(self) -> None:
        self.entries: list[IntPoly] = [IntPoly((2,)), IntPoly((0, 1))]

    def get(self, j: int) -> IntPoly:
        if j < 0:
            raise ValueError("negative index")
        u = IntPoly((0, 1))
        while len(self.entries) <= j:
            self.entries.append(u * self.entries[-1] - self.entries[-2])
        return self.entries[j]


_CHEB = ChebCoeffTable()


def chebyshev_c(j: int) -> IntPoly:
    """C_j = 2*T_j(u/2) via the integer recurrence C_j = u*C_{j-1} - C_{j-2}.

    >>> str(chebyshev_c(3))
    'x^3-3x'
    """
    return _CHEB.get(j)


def reciprocal_to_half(f: IntPoly) -> IntPoly:
    """Half-degree companion g of a reciprocal f of even degree 2n:
    g = a_n + sum_{j=1..n} a_{n-j} * C_j, so that f(x) = x^n * g(x + 1/x).

    The defining identity is re-expanded and checked before returning.

    >>> str(reciprocal_to_half(IntPoly([1, 3, 5, 3, 1])))
    'x^2+3x+3'
    """
    d = f.degree
    if d < 2 or d % 2:
        raise ValueError("need even degree >= 2")
    if not is_reciprocal(f):
        raise ValueError("not a reciprocal polynomial")
    n = d // 2
    g = IntPoly((f[n],))
    for j in range(1, n + 1):
        g = g + f[n - j] * chebyshev_c(j)
    if half_to_reciprocal(g, n) != f:
        raise AssertionError("transform identity failed to verify")
    return g


def half_to_reciprocal(g: IntPoly, n: int) -> IntPoly:
    """Rebuild the degree-2n reciprocal f = x^n * g(x + 1/x).

    Expands through x^n * (x + 1/x)^k = x^(n-k) * (x^2+1)^k, so no rational
    arithmetic appears.
    """
    if n < 1 or g.degree != n:
        raise ValueError("degree of g must equal n >= 1")
    x2p1 = IntPoly((1, 0, 1))
    f = IntPoly()
    pw = IntPoly.one()
    for k in range(n + 1):
        b = g[k]
        if b:
            f = f + (b * pw).shifted(n - k)
        if k < n:
            pw = pw * x2p1
    return f


def compose_power(f: IntPoly, k: int) -> IntPoly:
    """f(x^k): coefficient a_j moves to index j*k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1 or f.is_zero():
        return f
    out = [0] * (f.degree * k + 1)
    for j, c in enumerate(f.coeffs):
        out[j * k] = c
    return IntPoly(out)


def cyclotomic_2aqb(q: int, a: int, b: int) -> IntPoly:
    """Cyclotomic polynomial of index N = 2^a * q^b for an odd prime q.

    Built from the two base cases and exponent substitution:
    index q -> 1 + x + ... + x^(q-1), index 2q -> the same with alternating
    signs, higher indices by x -> x^m.
    """
    from .arithfactor import is_prime

    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise ValueError("q must be an odd prime")
    if a < 0 or b < 1:
        raise ValueError("need a >= 0 and b >= 1")
    if a == 0:
        base = IntPoly([1] * q)
        m = q ** (b - 1)
    else:
        base = IntPoly([(-1) ** k for k in range(q)])
        m = 2 ** (a - 1) * q ** (b - 1)
    return compose_power(base, m)


_TERM_RE = re.compile(r"^([+-]?)(\d+)?(?:([A-Za-z])(?:\^(\d+))?)?$")


def poly_from_text(text: str) -> IntPoly:
    """Parse human syntax like "x^4+3x^3+5x^2+3x+1".

    Signed integer coefficients, caret powers, one variable symbol (any
    single letter, used consistently).
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse polynomial text: {text!r}")
    var: str | None = None
    coeffs: dict[int, int] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse term {term!r}")
        sign, digits, sym, exp = m.groups()
        if sym is None and exp is not None:
            raise ValueError(f"cannot parse term {term!r}")
        if sym is not None:
            if var is None:
                var = sym
            elif sym != var:
                raise ValueError(f"mixed variable symbols {var!r} and {sym!r}")
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        k = 0 if sym is None else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, 0) + c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return IntPoly(out)


def poly_from_json(text: str) -> IntPoly:
    """Parse the array format: ascending decimal strings, e.g.
    ["1","3","5","3","1"]."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("polynomial JSON must be an array")
    return IntPoly(int(c) for c in data)


def parse_poly(text: str) -> IntPoly:
    """Accept either format, sniffing on the leading character."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        return poly_from_json(stripped)
    return poly_from_text(text)


def poly_to_text(f: IntPoly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(f.degree, -1, -1):
        c = f[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xs = var if k == 1 else f"{var}^{k}"
            body = xs if mag == 1 else f"{mag}{xs}"
        parts.append(sign + body)
    return "".join(parts)


def poly_to_json(f: IntPoly) -> str:
    return json.dumps([str(c) for c in f.coeffs])
