"""Explicit polynomial families, counting sweeps, and local density scans.

Three families live here: perturbed cyclotomics (a cyclotomic of index
2^a * q^b with a bump added to the middle coefficient), a degree-10
reciprocal family indexed by an integer parameter, and a sextic reciprocal
family.  Each comes with its half-degree companion and the integer-valued
polynomial whose squarefreeness drives the monogenicity counts.

Long sweeps checkpoint to a JSON state file every 1000 candidates and can
run data-parallel; chunk results merge in candidate order, so output is
identical whatever the job count.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arithfactor import SquarefreeResult, is_prime, is_squarefree_int, primes
from .monogenic import MonogenicityReport, is_monogenic
from .polycore import IntPoly, chebyshev_c, cyclotomic_2aqb

__all__ = [
    "CountReport",
    "DensityReport",
    "FamilyParams",
    "H_SEXTIC",
    "H_DEG10",
    "Thm13Entry",
    "build_F",
    "build_ga",
    "count_LF",
    "count_MH",
    "count_NH",
    "local_obstruction_scan",
    "rho_f_r2",
    "sextic_family",
    "thm13_family",
    "thm13_prime_scan",
]

CHECKPOINT_EVERY = 1000

FINITE_NOTE = "finite-range verification only; no asymptotic claim checked"

# (4x^2+20x-7)(8x+7), the squarefree driver of the sextic family
H_SEXTIC = IntPoly([-49, 84, 188, 32])

# (8y+11)(8192y^5+125008y^4+156112y^3-139876y^2-15972y+14641), the driver
# of the degree-10 family
H_DEG10 = IntPoly([11, 8]) * IntPoly(
    [14641, -15972, -139876, 156112, 125008, 8192]
)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of the perturbed cyclotomic of index N = 2^a * q^b."""

    q: int
    a: int
    b: int
    r: int = 1
    t: int = 0

    def __post_init__(self) -> None:
        if self.q < 3 or self.q % 2 == 0 or not is_prime(self.q):
            raise ValueError("q must be an odd prime")
        if self.a < 0 or self.b < 1:
            raise ValueError("need a >= 0 and b >= 1")
        if self.r == 0:
            raise ValueError("r must be nonzero")

    @property
    def N(self) -> int:
        return 2 ** self.a * self.q ** self.b

    @property
    def phi(self) -> int:
        """Euler phi of N; always even here."""
        two_part = 2 ** (self.a - 1) if self.a >= 1 else 1
        return two_part * self.q ** (self.b - 1) * (self.q - 1)


def build_F(params: FamilyParams) -> IntPoly:
    """Cyclotomic of index N with 4*r*q^2*t added to the coefficient of
    x^(phi(N)/2).  Reciprocal by construction.

    >>> str(build_F(FamilyParams(5, 0, 1, 2, 1)))
    'x^4+x^3+201x^2+x+1'
    """
    base = cyclotomic_2aqb(params.q, params.a, params.b)
    bump = 4 * params.r * params.q ** 2 * params.t
    mid = params.phi // 2
    return base + IntPoly.monomial(bump, mid)


def build_ga(q: int, a: int, r: int, t: int) -> IntPoly:
    """Closed-form half-degree companion of build_F at b = 1.

    a = 0:  4rq^2 t + 1 + sum_{j<=  (q-1)/2} C_j
    a = 1:  4rq^2 t + e * (1 + sum (-1)^j C_j),  e = (-1)^((q-1)/2)

    Must agree with reciprocal_to_half(build_F(...)); the round trip is a
    standing regression elsewhere.

    >>> str(build_ga(3, 0, 1, 0)), str(build_ga(5, 0, 1, 0))
    ('x+1', 'x^2+x-1')
    >>> str(build_ga(3, 1, 1, 1))
    'x+35'
    """
    if a not in (0, 1):
        raise ValueError("closed form available for a in {0, 1} only")
    if not is_prime(q) or q % 2 == 0:
        raise ValueError("q must be an odd prime")
    if r == 0:
        raise ValueError("r must be nonzero")
    bump = 4 * r * q * q * t
    half = (q - 1) // 2
    if a == 0:
        g = IntPoly([bump + 1])
        for j in range(1, half + 1):
            g = g + chebyshev_c(j)
        return g
    eps = (-1) ** half
    g = IntPoly([bump + eps])
    for j in range(1, half + 1):
        g = g + eps * (-1) ** j * chebyshev_c(j)
    return g


def thm13_family(p: int) -> tuple[IntPoly, IntPoly, int]:
    """Degree-10 reciprocal member at parameter p, its quintic companion,
    and the driver value h(p).

    f_p has the palindromic coefficients 1,1,1,1, 2p+1, 4p+1, 2p+1, 1,1,1,1;
    the companion is u^5+u^4-4u^3-3u^2+(2p+3)u+(4p+1).
    """
    f = IntPoly(
        [1, 1, 1, 1, 2 * p + 1, 4 * p + 1, 2 * p + 1, 1, 1, 1, 1]
    )
    g = IntPoly([4 * p + 1, 2 * p + 3, -3, -4, 1, 1])
    return f, g, H_DEG10(p)


@dataclass(frozen=True)
class Thm13Entry:
    p: int
    h_value: int
    h_squarefree: SquarefreeResult
    f_report: MonogenicityReport
    g_report: MonogenicityReport


def thm13_prime_scan(pmax: int, effort: int | None = None) -> tuple[Thm13Entry, ...]:
    """Primes p <= pmax with h(p) squarefree, each annotated with the full
    monogenicity reports of f_p and its companion."""
    if pmax < 2:
        raise ValueError("pmax must be at least 2")
    out: list[Thm13Entry] = []
    for p in primes():
        if p > pmax:
            break
        f, g, h = thm13_family(p)
        sq = is_squarefree_int(h, effort)
        if not sq.is_squarefree:
            continue
        out.append(
            Thm13Entry(p, h, sq, is_monogenic(f, effort), is_monogenic(g, effort))
        )
    return tuple(out)


def sextic_family(a: int) -> tuple[IntPoly, IntPoly, int]:
    """Sextic reciprocal member at parameter a, its cubic companion, and
    the driver value H(a).

    >>> f1, g1, H1 = sextic_family(1)
    >>> str(g1), H1
    ('x^3+x^2+3', 255)
    """
    f = IntPoly([1, 1, 2 * a + 1, 4 * a + 1, 2 * a + 1, 1, 1])
    g = IntPoly([4 * a - 1, 2 * a - 2, 1, 1])
    return f, g, H_SEXTIC(a)


@dataclass(frozen=True)
class CountReport:
    """A counting-function value over a finite range.

    definition is "L_f", "M_H", or "N_H"; witnesses lists the qualifying
    parameters when retained (count always equals their number).
    """

    definition: str
    bound: int
    count: int
    witnesses: tuple[int, ...] | None = None
    mode: str = ""
    note: str = FINITE_NOTE


def _lf_worker(args: tuple[str, list[int]]) -> list[tuple[int, bool]]:
    mode, chunk = args
    out = []
    for a in chunk:
        if mode == "lemma-filter":
            ok = is_squarefree_int(H_SEXTIC(a)).is_squarefree
        else:
            ok = is_monogenic(sextic_family(a)[0]).verdict == "Monogenic"
        out.append((a, ok))
    return out


def _sqfree_worker(args: tuple[tuple[int, ...], list[int]]) -> list[tuple[int, bool]]:
    coeffs, chunk = args
    F = IntPoly(coeffs)
    return [(a, is_squarefree_int(F(a)).is_squarefree) for a in chunk]


def _load_checkpoint(path: str | None, header: dict) -> tuple[int | None, list[int]]:
    """(completed-through, partial witnesses) when the file matches this
    sweep's identity, else (None, [])."""
    if not path or not os.path.exists(path):
        return None, []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            state = json.load(fh)
    except (OSError, ValueError):
        return None, []
    if {k: state.get(k) for k in header} != header:
        return None, []
    done = state.get("completed-through")
    wit = state.get("partial-counts", {}).get("witnesses", [])
    if not isinstance(done, int) or not isinstance(wit, list):
        return None, []
    return done, [int(w) for w in wit]


def _save_checkpoint(path: str | None, header: dict, done: int, wit: list[int]) -> None:
    if not path:
        return
    state = dict(header)
    state["completed-through"] = done
    state["partial-counts"] = {"count": len(wit), "witnesses": wit}
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def _run_sweep(
    candidates: list[int],
    worker,
    payload,
    header: dict,
    checkpoint_path: str | None,
    jobs: int,
) -> list[int]:
    """Evaluate the per-candidate predicate over candidates (ascending),
    honoring an existing checkpoint and writing one per completed chunk.
    Results merge in candidate order regardless of jobs."""
    done, witnesses = _load_checkpoint(checkpoint_path, header)
    if done is not None:
        candidates = [c for c in candidates if c > done]
        if not candidates:
            return witnesses
    chunks = [
        candidates[i : i + CHECKPOINT_EVERY]
        for i in range(0, len(candidates), CHECKPOINT_EVERY)
    ]
    args = [(payload, chunk) for chunk in chunks]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            result_iter = pool.map(worker, args)
            for chunk, results in zip(chunks, result_iter):
                witnesses.extend(a for a, ok in results if ok)
                _save_checkpoint(checkpoint_path, header, chunk[-1], witnesses)
    else:
        for chunk, arg in zip(chunks, args):
            witnesses.extend(a for a, ok in worker(arg) if ok)
            _save_checkpoint(checkpoint_path, header, chunk[-1], witnesses)
    return witnesses


def count_LF(
    N: int,
    mode: str = "lemma-filter",
    symmetric: bool = True,
    checkpoint_path: str | None = None,
    jobs: int = 1,
    keep_witnesses: bool = True,
) -> CountReport:
    """Count monogenic members of the sextic family with parameter bound N.

    lemma-filter counts a with H(a) squarefree (a proven-sufficient
    condition); full-decision runs the whole monogenicity pipeline on f_a.
    The range is |a| <= N by default, 1 <= a <= N with symmetric=False.

    >>> count_LF(1).count, count_LF(1).witnesses
    (2, (-1, 1))
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if mode not in ("lemma-filter", "full-decision"):
        raise ValueError(f"unrecognized mode {mode!r}")
    cands = list(range(-N, N + 1)) if symmetric else list(range(1, N + 1))
    header = {
        "definition": "L_f",
        "mode": mode,
        "range": [cands[0], cands[-1]],
    }
    wit = _run_sweep(cands, _lf_worker, mode, header, checkpoint_path, jobs)
    return CountReport(
        "L_f", N, len(wit), tuple(wit) if keep_witnesses else None, mode
    )


def count_MH(
    X: int,
    F: IntPoly | None = None,
    checkpoint_path: str | None = None,
    jobs: int = 1,
    keep_witnesses: bool = True,
) -> CountReport:
    """Count 1 <= a <= X with F(a) squarefree (F defaults to the sextic
    driver H)."""
    if X < 1:
        raise ValueError("X must be >= 1")
    F = H_SEXTIC if F is None else F
    cands = list(range(1, X + 1))
    header = {
        "definition": "M_H",
        "mode": "squarefree",
        "range": [1, X],
        "poly": [str(c) for c in F.coeffs],
    }
    wit = _run_sweep(
        cands, _sqfree_worker, F.coeffs, header, checkpoint_path, jobs
    )
    return CountReport(
        "M_H", X, len(wit), tuple(wit) if keep_witnesses else None, "squarefree"
    )


def count_NH(
    X: int,
    F: IntPoly | None = None,
    checkpoint_path: str | None = None,
    jobs: int = 1,
    keep_witnesses: bool = True,
) -> CountReport:
    """Count primes p <= X with F(p) squarefree (F defaults to H).

    >>> count_NH(1).count
    0
    """
    if X < 1:
        raise ValueError("X must be >= 1")
    F = H_SEXTIC if F is None else F
    cands: list[int] = []
    for p in primes():
        if p > X:
            break
        cands.append(p)
    header = {
        "definition": "N_H",
        "mode": "squarefree-primes",
        "range": [1, X],
        "poly": [str(c) for c in F.coeffs],
    }
    if not cands:
        return CountReport(
            "N_H", X, 0, () if keep_witnesses else None, "squarefree-primes"
        )
    wit = _run_sweep(
        cands, _sqfree_worker, F.coeffs, header, checkpoint_path, jobs
    )
    return CountReport(
        "N_H", X, len(wit), tuple(wit) if keep_witnesses else None,
        "squarefree-primes",
    )


def rho_f_r2(f: IntPoly, r: int) -> int:
    """Number of units z mod r^2 with f(z) = 0 mod r^2, by exhaustion over
    all r(r-1) units.

    >>> rho_f_r2(IntPoly([0, 1]), 5)
    0
    """
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    r2 = r * r
    count = 0
    for z in range(r2):
        if z % r == 0:
            continue
        acc = 0
        for c in reversed(f.coeffs):
            acc = (acc * z + c) % r2
        if acc == 0:
            count += 1
    return count


@dataclass(frozen=True)
class DensityReport:
    """Local root densities of f at squares of primes up to a bound.

    A prime r is an obstruction when every unit mod r^2 is a root; the
    partial product over scanned primes of (1 - rho/(r(r-1))) is exact and
    positive exactly when no scanned prime obstructs.  For each clean prime
    the first non-root unit is kept as the witness.
    """

    poly: IntPoly
    rho_values: dict[int, int]
    partial_product: Fraction
    obstruction_primes: tuple[int, ...]
    no_obstruction_witnesses: dict[int, int]
    note: str = FINITE_NOTE


def local_obstruction_scan(f: IntPoly, B: int) -> DensityReport:
    """Scan primes r <= B for local obstructions of f at r^2.

    >>> local_obstruction_scan(IntPoly([-1, 0, 1]), 2).obstruction_primes
    (2,)
    """
    if B < 2:
        raise ValueError("bound must be at least 2")
    rho_values: dict[int, int] = {}
    witnesses: dict[int, int] = {}
    obstructed: list[int] = []
    product = Fraction(1)
    for r in primes():
        if r > B:
            break
        rho = rho_f_r2(f, r)
        rho_values[r] = rho
        units = r * (r - 1)
        product *= Fraction(units - rho, units)
        if rho == units:
            obstructed.append(r)
            continue
        r2 = r * r
        for z in range(1, r2):
            if z % r == 0:
                continue
            if f(z) % r2 != 0:
                witnesses[r] = z
                break
    return DensityReport(
        f, rho_values, product, tuple(obstructed), witnesses
    )
