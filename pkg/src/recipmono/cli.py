"""Command-line front end.

Single-object reports print as JSON, sweeps as CSV (overridable with
--format).  Every report embeds a run manifest; with fixed inputs the
bytes are reproducible, since collections are sorted, randomness is
seeded, and wall time is only recorded under --timing.  Exit codes:
0 success, 1 domain error (structured JSON on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import re
import sys
import time
from fractions import Fraction

from . import __version__
from .arithfactor import IntFactorization, factor_int, is_squarefree_int
from .discriminant import (
    conjecture_disc_identity,
    discriminant_report,
    lemma_disc_identity,
)
from .families import (
    FamilyParams,
    build_F,
    build_ga,
    count_LF,
    count_MH,
    count_NH,
    local_obstruction_scan,
    sextic_family,
    thm13_family,
    thm13_prime_scan,
)
from .galois import quintic_galois
from .modpoly import factor_mod_p, reduce_mod
from .monogenic import (
    MonogenicityReport,
    dedekind_index_test,
    ideal_square_membership,
    is_monogenic,
    power_compositional_check,
    sufficient_reciprocal_monogenic,
)
from .polycore import (
    IntPoly,
    half_to_reciprocal,
    parse_poly,
    poly_to_text,
    reciprocal_to_half,
)

__all__ = ["main"]


class DomainError(Exception):
    """Invalid input or an unusable result, reported as exit code 1."""


def _poly_arg(text: str) -> IntPoly:
    try:
        return parse_poly(text)
    except ValueError as e:
        raise DomainError(f"malformed polynomial: {e}") from e


def _poly_or_file(text: str) -> IntPoly:
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            return _poly_arg(fh.read().strip())
    return _poly_arg(text)


def _ser_poly(f: IntPoly) -> dict:
    return {"text": poly_to_text(f), "coeffs": [str(c) for c in f.coeffs]}


def _ser_factorization(fac: IntFactorization) -> dict:
    return {
        "sign": fac.sign,
        "factors": [[p, e] for p, e in fac.factors],
        "cofactor": str(fac.cofactor),
        "complete": fac.complete,
    }


def _ser_fraction(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def _ser_certificate(cert) -> dict:
    return {
        "status": cert.status,
        "witness_prime": cert.witness_prime,
        "evidence": cert.evidence,
        "primes_used": list(cert.primes_used),
        "surviving_degrees": list(cert.surviving_degrees),
    }


def _ser_monogenic(rep: MonogenicityReport) -> dict:
    return {
        "poly": _ser_poly(rep.poly),
        "verdict": rep.verdict,
        "reason": rep.reason,
        "disc": rep.disc,
        "disc_factorization": (
            _ser_factorization(rep.disc_factorization)
            if rep.disc_factorization is not None
            else None
        ),
        "candidate_primes": list(rep.candidate_primes),
        "index_primes": list(rep.index_primes),
        "per_prime": {str(p): v for p, v in sorted(rep.per_prime.items())},
        "irreducibility": _ser_certificate(rep.certificate),
    }


def _int_range(text: str) -> list[int]:
    """Parse "3" or "-5..5" into the corresponding integer list."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise DomainError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


# ---------------------------------------------------------------- handlers
# Each returns (report_dict, rows_or_None); rows present means CSV default.


def _cmd_factor(args) -> tuple[dict, None]:
    fac = factor_int(args.n, args.effort)
    return {"input": args.n, **_ser_factorization(fac)}, None


def _cmd_squarefree(args) -> tuple[dict, None]:
    res = is_squarefree_int(args.n, args.effort)
    return {"input": args.n, "status": res.status, "witness": res.witness}, None


def _cmd_disc(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    if f.degree < 1:
        raise DomainError("discriminant needs degree >= 1")
    rep = discriminant_report(f, args.effort)
    return {
        "poly": _ser_poly(f),
        "disc": rep.disc,
        "factorization": _ser_factorization(rep.factorization),
        "square_divisor_primes": sorted(rep.square_divisor_primes),
    }, None


def _cmd_check_lemma(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    try:
        chk = lemma_disc_identity(f)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {
        "poly": _ser_poly(f),
        "holds": chk.holds,
        "lhs": chk.lhs,
        "rhs": chk.rhs,
    }, None


def _cmd_check_conjecture(args) -> tuple[dict, None]:
    try:
        chk = conjecture_disc_identity(args.q, args.a, args.r, args.t)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {
        "q": args.q,
        "a": args.a,
        "r": args.r,
        "t": args.t,
        "holds": chk.holds,
        "lhs": chk.lhs,
        "rhs": chk.rhs,
    }, None


def _cmd_f2g(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    try:
        g = reciprocal_to_half(f)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {"f": _ser_poly(f), "g": _ser_poly(g)}, None


def _cmd_g2f(args) -> tuple[dict, None]:
    g = _poly_arg(args.poly)
    if g.degree < 1:
        raise DomainError("companion must have degree >= 1")
    f = half_to_reciprocal(g, g.degree)
    return {"g": _ser_poly(g), "f": _ser_poly(f)}, None


def _cmd_power_comp(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    try:
        rep = power_compositional_check(f, args.k, args.effort)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {
        "verdict": rep.verdict,
        "reason": rep.reason,
        "base": _ser_poly(rep.base),
        "k": rep.k,
        "composed": _ser_poly(rep.composed),
        "composed_irreducibility": _ser_certificate(rep.composed_certificate),
        "boundary_product": rep.boundary_product,
        "boundary_squarefree": rep.boundary_squarefree.status,
        "companion": _ser_monogenic(rep.companion_report),
        "k_prime_results": {str(p): v for p, v in sorted(rep.k_prime_results.items())},
    }, None


def _cmd_monogenic(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    if not f.is_monic:
        raise DomainError("monogenicity is decided for monic polynomials")
    if f.degree < 1:
        raise DomainError("need degree >= 1")
    rep = is_monogenic(f, args.effort)
    if rep.disc == 0:
        raise DomainError(
            "zero discriminant: repeated factor, no field generated"
        )
    if rep.certificate.status == "Reducible":
        raise DomainError(f"not irreducible: {rep.certificate.evidence}")
    return _ser_monogenic(rep), None


def _cmd_index_test(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    try:
        res = dedekind_index_test(f, args.p)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {"poly": _ser_poly(f), "p": args.p, "result": res}, None


def _cmd_ideal_square(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    h = _poly_arg(args.h)
    try:
        res = ideal_square_membership(f, args.p, h)
    except ValueError as e:
        raise DomainError(str(e)) from e
    out = {
        "poly": _ser_poly(f),
        "p": args.p,
        "h": _ser_poly(h),
        "member": res.member,
    }
    if res.witness is not None:
        w = res.witness
        out["witness"] = {
            "cof_hh": _ser_poly(w.cof_hh),
            "cof_ph": _ser_poly(w.cof_ph),
            "cof_pp": _ser_poly(w.cof_pp),
        }
    return out, None


def _cmd_sufficient(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    try:
        rep = sufficient_reciprocal_monogenic(f, args.effort)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {
        "verdict": rep.verdict,
        "reason": rep.reason,
        "poly": _ser_poly(rep.poly),
        "irreducibility": _ser_certificate(rep.certificate),
        "boundary_product": rep.boundary_product,
        "boundary_squarefree": rep.boundary_squarefree.status,
        "companion": _ser_monogenic(rep.companion_report),
    }, None


def _cmd_galois5(args) -> tuple[dict, None]:
    g = _poly_arg(args.poly)
    try:
        ev = quintic_galois(g, args.primes)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {
        "poly": _ser_poly(g),
        "conclusion": ev.conclusion,
        "group": ev.group,
        "disc_square": ev.disc_square,
        "constraints": list(ev.constraints),
        "samples": [[p, list(t), s] for p, t, s in ev.samples],
        "skipped_primes": list(ev.skipped_primes),
    }, None


def _cmd_factor_mod(args) -> tuple[dict, None]:
    f = _poly_arg(args.poly)
    try:
        fbar = reduce_mod(f, args.p)
        if fbar.is_zero():
            raise DomainError("polynomial vanishes mod p")
        fac = factor_mod_p(fbar)
    except ValueError as e:
        raise DomainError(str(e)) from e
    return {
        "poly": _ser_poly(f),
        "p": args.p,
        "unit": fac.unit,
        "factors": [
            {"coeffs": [str(c) for c in g.coeffs], "text": str(g), "mult": m}
            for g, m in fac.factors
        ],
    }, None


def _cmd_family(args) -> tuple[dict, list[list] | None]:
    if args.which == "jones":
        rows: list[list] = [["q", "a", "r", "t", "F", "g", "disc_F", "holds"]]
        for t in _int_range(args.t):
            try:
                params = FamilyParams(args.q, args.a, 1, args.r, t)
            except ValueError as e:
                raise DomainError(str(e)) from e
            F = build_F(params)
            g = build_ga(args.q, args.a, args.r, t)
            chk = conjecture_disc_identity(args.q, args.a, args.r, t)
            rows.append(
                [args.q, args.a, args.r, t, poly_to_text(F), poly_to_text(g),
                 chk.lhs, chk.holds]
            )
        report = {
            "family": "jones",
            "q": args.q,
            "a": args.a,
            "r": args.r,
            "members": len(rows) - 1,
        }
        return report, rows
    if args.which == "thm13":
        if args.pmax < 2:
            raise DomainError("--pmax must be at least 2")
        entries = thm13_prime_scan(args.pmax, args.effort)
        rows = [["p", "h", "h_factorization", "f_verdict", "g_verdict"]]
        for e in entries:
            rows.append(
                [e.p, e.h_value, str(factor_int(e.h_value)),
                 e.f_report.verdict, e.g_report.verdict]
            )
        report = {
            "family": "thm13",
            "pmax": args.pmax,
            "primes": [e.p for e in entries],
            "count": len(entries),
        }
        return report, rows
    # sextic
    if args.N < 0:
        raise DomainError("--N must be nonnegative")
    rows = [["a", "f", "H", "H_squarefree", "f_verdict"]]
    for a in range(-args.N, args.N + 1):
        f, g, H = sextic_family(a)
        sq = is_squarefree_int(H, args.effort)
        rep = is_monogenic(f, args.effort)
        rows.append([a, poly_to_text(f), H, sq.status, rep.verdict])
    report = {"family": "sextic", "N": args.N, "members": len(rows) - 1}
    return report, rows


def _cmd_count(args) -> tuple[dict, None]:
    keep = not args.no_witnesses
    if args.which == "lf":
        mode = "lemma-filter" if args.mode == "lemma" else "full-decision"
        rep = count_LF(
            args.N, mode, not args.positive, args.checkpoint, args.jobs, keep
        )
    else:
        F = _poly_or_file(args.poly) if args.poly else None
        fn = count_MH if args.which == "mh" else count_NH
        rep = fn(args.X, F, args.checkpoint, args.jobs, keep)
    return {
        "definition": rep.definition,
        "bound": rep.bound,
        "count": rep.count,
        "mode": rep.mode,
        "witnesses": list(rep.witnesses) if rep.witnesses is not None else None,
        "note": rep.note,
    }, None


def _cmd_density(args) -> tuple[dict, None]:
    f = _poly_or_file(args.poly)
    if args.B < 2:
        raise DomainError("--B must be at least 2")
    rep = local_obstruction_scan(f, args.B)
    approx = float(rep.partial_product)
    return {
        "poly": _ser_poly(f),
        "B": args.B,
        "rho_values": {str(r): v for r, v in sorted(rep.rho_values.items())},
        "obstruction_primes": list(rep.obstruction_primes),
        "no_obstruction_witnesses": {
            str(r): z for r, z in sorted(rep.no_obstruction_witnesses.items())
        },
        "partial_product": _ser_fraction(rep.partial_product),
        "partial_product_approx": round(approx, 12),
        "note": rep.note,
    }, None


_HANDLERS = {
    "factor": _cmd_factor,
    "squarefree": _cmd_squarefree,
    "disc": _cmd_disc,
    "check-lemma": _cmd_check_lemma,
    "check-conjecture": _cmd_check_conjecture,
    "f2g": _cmd_f2g,
    "g2f": _cmd_g2f,
    "power-comp": _cmd_power_comp,
    "monogenic": _cmd_monogenic,
    "index-test": _cmd_index_test,
    "ideal-square": _cmd_ideal_square,
    "sufficient": _cmd_sufficient,
    "galois5": _cmd_galois5,
    "factor-mod": _cmd_factor_mod,
    "family": _cmd_family,
    "count": _cmd_count,
    "density": _cmd_density,
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="recipmono",
        description="Exact-arithmetic toolkit for reciprocal polynomials, "
        "their half-degree companions, and monogenicity decisions.",
    )
    top.add_argument("--format", choices=("json", "csv"), default=None,
                     help="override the default output format")
    top.add_argument("--timing", action="store_true",
                     help="record wall time in the manifest (breaks "
                     "byte-for-byte reproducibility)")
    sub = top.add_subparsers(dest="cmd", required=True)

    def add(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, **kw)

    p = add("factor", help="factor an integer")
    p.add_argument("n", type=int)
    p.add_argument("--effort", type=int, default=None)

    p = add("squarefree", help="squarefree test for an integer")
    p.add_argument("n", type=int)
    p.add_argument("--effort", type=int, default=None)

    p = add("disc", help="discriminant with factorization")
    p.add_argument("poly")
    p.add_argument("--effort", type=int, default=None)

    p = add("check-lemma", help="discriminant identity through the "
            "half-degree companion")
    p.add_argument("poly")

    p = add("check-conjecture", help="closed-form discriminant identity for "
            "a perturbed cyclotomic member")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--t", type=int, required=True)

    p = add("f2g", help="reciprocal polynomial to half-degree companion")
    p.add_argument("poly")

    p = add("g2f", help="half-degree companion back to the reciprocal")
    p.add_argument("poly")

    p = add("power-comp", help="monogenicity proof for f(x^k)")
    p.add_argument("poly")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--effort", type=int, default=None)

    p = add("monogenic", help="full monogenicity decision")
    p.add_argument("poly")
    p.add_argument("--effort", type=int, default=None)

    p = add("index-test", help="does p divide the index?")
    p.add_argument("poly")
    p.add_argument("-p", type=int, required=True)

    p = add("ideal-square", help="membership of f in (p, h)^2")
    p.add_argument("poly")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--h", required=True)

    p = add("sufficient", help="sufficient monogenicity test for a "
            "reciprocal polynomial")
    p.add_argument("poly")
    p.add_argument("--effort", type=int, default=None)

    p = add("galois5", help="Galois group of an irreducible quintic")
    p.add_argument("poly")
    p.add_argument("--primes", type=int, default=50)

    p = add("factor-mod", help="factor a polynomial over F_p")
    p.add_argument("poly")
    p.add_argument("-p", type=int, required=True)

    p = add("family", help="family constructors and sweeps (CSV)")
    fsub = p.add_subparsers(dest="which", required=True)
    pj = fsub.add_parser("jones", help="perturbed cyclotomic members")
    pj.add_argument("--q", type=int, required=True)
    pj.add_argument("--a", type=int, required=True)
    pj.add_argument("--r", type=int, default=1)
    pj.add_argument("--t", required=True, help="integer or range lo..hi")
    pt = fsub.add_parser("thm13", help="degree-10 family prime scan")
    pt.add_argument("--pmax", type=int, required=True)
    pt.add_argument("--effort", type=int, default=None)
    ps = fsub.add_parser("sextic", help="sextic family sweep over |a| <= N")
    ps.add_argument("--N", type=int, required=True)
    ps.add_argument("--effort", type=int, default=None)

    p = add("count", help="counting functions")
    csub = p.add_subparsers(dest="which", required=True)
    pl = csub.add_parser("lf", help="monogenic members of the sextic family")
    pl.add_argument("--N", type=int, required=True)
    pl.add_argument("--mode", choices=("lemma", "full"), default="lemma")
    pl.add_argument("--positive", action="store_true",
                    help="count over 1 <= a <= N instead of |a| <= N")
    pm = csub.add_parser("mh", help="squarefree values count")
    pm.add_argument("--X", type=int, required=True)
    pm.add_argument("--poly", default=None,
                    help="value polynomial (text, JSON, or a file path); "
                    "defaults to the sextic driver")
    pn = csub.add_parser("nh", help="squarefree values at primes count")
    pn.add_argument("--X", type=int, required=True)
    pn.add_argument("--poly", default=None)
    for pc in (pl, pm, pn):
        pc.add_argument("--checkpoint", default=None,
                        help="resumable JSON state file")
        pc.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        pc.add_argument("--no-witnesses", action="store_true")

    p = add("density", help="local obstruction scan at prime squares")
    p.add_argument("--poly", required=True,
                   help="polynomial (text, JSON, or a file path)")
    p.add_argument("--B", type=int, required=True)

    return top


def _manifest(args, started: float) -> dict:
    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("cmd", "format", "timing") and v is not None
    }
    digest_src = json.dumps({"cmd": args.cmd, **params}, sort_keys=True,
                            default=str)
    man = {
        "subcommand": args.cmd,
        "parameters": {k: v for k, v in params.items()},
        "input_digest": hashlib.sha256(digest_src.encode()).hexdigest()[:16],
        "version": __version__,
        "seed": os.environ.get("RECIPMONO_SEED", "default"),
    }
    if args.timing:
        man["wall_time_s"] = round(time.monotonic() - started, 3)
    return man


def _emit_csv(rows: list[list], manifest: dict, out) -> None:
    out.write("# manifest: " + json.dumps(manifest, sort_keys=True) + "\n")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    out.write(buf.getvalue())


def _merge_range_values(argv: list[str]) -> list[str]:
    """Join "--t -5..5" into "--t=-5..5" so argparse keeps the value."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok == "--t" and nxt is not None
                and re.fullmatch(r"-\d+\.\.-?\d+", nxt)):
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_range_values(list(argv)))
    started = time.monotonic()
    try:
        report, rows = _HANDLERS[args.cmd](args)
    except DomainError as e:
        err = {
            "error": {"type": "DomainError", "message": str(e)},
            "manifest": _manifest(args, started),
        }
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return 1
    man = _manifest(args, started)
    fmt = args.format or ("csv" if rows is not None else "json")
    if fmt == "csv":
        if rows is None:
            rows = [["key", "value"]] + [
                [k, json.dumps(v, sort_keys=True, default=str)]
                for k, v in sorted(report.items())
            ]
        _emit_csv(rows, man, sys.stdout)
    else:
        payload = {"manifest": man, "report": report}
        if rows is not None:
            payload["report"] = {
                **report,
                "rows": [dict(zip(rows[0], r)) for r in rows[1:]],
            }
        print(json.dumps(payload, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
