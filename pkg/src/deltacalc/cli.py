"""Command-line front end.

Every subcommand builds a JSON-ready payload.  ``--format csv`` prints the
payload's table when it has one and ``key,value`` lines otherwise.  Exit
codes: 0 success, 1 a cross-check disagreed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import cache
from .errors import DeltaCalcError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class Result:
    def __init__(self, payload: dict, ok: bool = True, table: Optional[List[list]] = None):
        self.payload = payload
        self.ok = ok
        self.table = table


def _ints(text: str) -> Tuple[int, ...]:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    if "," in text or " " in text:
        return tuple(int(x) for x in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


def _sym(f) -> dict:
    out = f.to_json()
    out["pretty"] = str(f)
    return out


def _poly_list(p) -> List[int]:
    top = max(p.degree_q(), 0)
    return [int(p.coeff(i, 0)) for i in range(top + 1)]


# ---------------------------------------------------------------------------
# subcommands


def cmd_frob(args) -> Result:
    from .arith import rev_q
    from .coinvariant import build_ideal, graded_frobenius, hl_formula, quotient_basis, syt_formula
    from .qtops import delta_prime
    from .symfunc import e, omega

    n, k = args.n, args.k
    Q = quotient_basis(build_ideal("nk", n=n, k=k))
    frob = graded_frobenius(Q, check=args.verify)
    payload = {
        "n": n,
        "k": k,
        "dimension": Q.dimension,
        "hilbert": str(Q.hilbert),
        "hilbert_coefficients": _poly_list(Q.hilbert),
        "grfrob": _sym(frob),
    }
    ok = True
    if args.verify:
        syt = syt_formula(n, k)
        hl = hl_formula(n, k)
        top = math.comb(k, 2) + (n - k) * (k - 1)
        bridge = omega(delta_prime(("e", k - 1), e(n)).subs(at_t=0)).map_coeffs(lambda c: rev_q(c, top))
        agree = frob == syt == hl == bridge
        payload.update(
            {"syt_formula": _sym(syt), "hl_formula": _sym(hl), "delta_formula": _sym(bridge), "agree": agree}
        )
        ok = agree
    table = [["partition", "coefficient"]] + [
        [" ".join(map(str, lam)), str(c)] for lam, c in frob.items()
    ]
    return Result(payload, ok, table)


def cmd_delta(args) -> Result:
    from .qtops import delta_prime
    from .symfunc import e

    n, k = args.n, args.k
    if not 1 <= k <= n:
        raise UsageError("--k must satisfy 1 <= k <= n")
    f = delta_prime(("e", k - 1), e(n))
    table = [["partition", "coefficient"]] + [[" ".join(map(str, lam)), str(c)] for lam, c in f.items()]
    return Result({"n": n, "k": k, "delta": _sym(f)}, True, table)


def cmd_shuffle(args) -> Result:
    from .combinatorics import shuffle_rhs
    from .qtops import nabla
    from .symfunc import e

    lhs = nabla(e(args.n))
    rhs = shuffle_rhs(args.n)
    ok = lhs == rhs
    return Result({"n": args.n, "nabla": _sym(lhs), "parking": _sym(rhs), "match": ok}, ok)


def cmd_rise(args) -> Result:
    from .combinatorics import rise_rhs
    from .qtops import delta_prime
    from .symfunc import e

    n, k = args.n, args.k
    if not 1 <= k <= n:
        raise UsageError("--k must satisfy 1 <= k <= n")
    lhs = delta_prime(("e", k - 1), e(n))
    rhs = rise_rhs(n, k)
    ok = lhs == rhs
    return Result({"n": n, "k": k, "delta": _sym(lhs), "rise": _sym(rhs), "match": ok}, ok)


def cmd_osp(args) -> Result:
    from .combinatorics import OSP, code, coinv, inv, inversion_pairs, iota, osp_to_word

    if args.encode:
        sigma = OSP.parse(args.encode)
    elif args.decode:
        if args.n is None or args.k is None:
            raise UsageError("--decode needs --n and --k")
        sigma = iota(_ints(args.decode), args.n, args.k)
    else:
        raise UsageError("give --encode BLOCKS or --decode CODE")
    pairs_inv, pairs_coinv = inversion_pairs(sigma)
    c = code(sigma)
    ok = True
    if args.verify:
        ok = iota(c, sigma.n, sigma.k) == sigma
    payload = {
        "osp": str(sigma),
        "blocks": [list(b) for b in sigma.blocks],
        "word": list(osp_to_word(sigma)),
        "code": list(c),
        "inv": inv(sigma),
        "coinv": coinv(sigma),
        "inversion_pairs": [list(p) for p in pairs_inv],
        "coinversion_pairs": [list(p) for p in pairs_coinv],
        "round_trip": ok,
    }
    return Result(payload, ok)


def _ideal_params(args) -> dict:
    params = {}
    for name in ("n", "k", "s", "r"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    if args.lam is not None:
        params["lam"] = _ints(args.lam)
    return params


def cmd_groebner(args) -> Result:
    from .coinvariant import build_ideal, buchberger, format_xpoly, standard_monomials

    I = build_ideal(args.kind, **_ideal_params(args))
    G = buchberger(I, args.order)
    payload = {
        "ideal": I.label,
        "order": args.order,
        "generators": [format_xpoly(g, args.order) for g in G.polys],
        "leading_monomials": [list(m) for m in G.leading_monomials()],
        "gb": G.to_json(),
    }
    table = [["generator"]] + [[format_xpoly(g, args.order)] for g in G.polys]
    try:
        std = standard_monomials(G)
    except DeltaCalcError:
        std = None
    if std is not None:
        from .arith import QTPoly

        hil: Dict[int, int] = {}
        for m in std:
            hil[sum(m)] = hil.get(sum(m), 0) + 1
        h = QTPoly({(d, 0): c for d, c in hil.items()})
        payload.update({"dimension": len(std), "hilbert": str(h), "hilbert_coefficients": _poly_list(h)})
    return Result(payload, True, table)


def cmd_orbit(args) -> Result:
    from .coinvariant import (
        PointLocus,
        associated_graded,
        buchberger,
        format_xpoly,
        graded_frobenius,
        hl_positivity_check,
        permutation_character,
        quotient_basis,
        vanishing_ideal,
    )
    from .symfunc import frobenius_from_character

    text = sys.stdin.read() if args.locus == "-" else open(args.locus).read()
    Z = PointLocus.from_csv(text)
    if not Z.points:
        raise UsageError("--locus contains no points")
    if not Z.is_stable():
        raise UsageError("--locus is not stable under permuting coordinates")
    grI = associated_graded(vanishing_ideal(Z))
    G = buchberger(grI, "graded_neglex")
    Q = quotient_basis(grI, "neglex")
    frob = graded_frobenius(Q)
    report = hl_positivity_check(frob)
    ok = True
    payload = {
        "n": Z.n,
        "points": len(Z.points),
        "gr_ideal": [format_xpoly(g, "graded_neglex") for g in G.polys],
        "hilbert": str(Q.hilbert),
        "grfrob": _sym(frob),
        "hl_positivity": report.to_json(),
    }
    if args.verify:
        ungraded = frobenius_from_character(Z.n, permutation_character(Z))
        ok = frob.subs(at_q=1) == ungraded and Q.dimension == len(Z.points)
        payload["ungraded_match"] = ok
    table = [["partition", "hl_coefficient"]] + [
        [" ".join(map(str, item["partition"])), item["pretty"]] for item in report.to_json()["coefficients"]
    ]
    return Result(payload, ok, table)


def cmd_count_fq(args) -> Result:
    from .schubert import count_spanning_fq, spanning_formula

    formula = spanning_formula(args.n, args.k, args.q)
    payload = {"n": args.n, "k": args.k, "q": args.q, "formula": formula}
    ok = True
    if args.verify:
        brute = count_spanning_fq(args.n, args.k, args.q, jobs=args.jobs)
        ok = brute == formula
        payload.update({"brute": brute, "match": ok})
    return Result(payload, ok, [list(payload), list(payload.values())])


def cmd_schubert(args) -> Result:
    from .schubert import conv, expand_in_schubert, schubert_fubini, sort_perm, standardize

    w = _ints(args.word)
    f = schubert_fubini(w)
    payload = {
        "word": list(w),
        "conv": list(conv(w)),
        "sort": list(sort_perm(w)),
        "st_conv": list(standardize(conv(w))),
        "polynomial": str(f),
    }
    table = None
    if args.times:
        v = _ints(args.times)
        if len(v) != len(w) or max(v) != max(w):
            raise UsageError("--times must be a Fubini word with the same n and k as --word")
        n, k = len(w), max(w)
        coeffs = expand_in_schubert(f * schubert_fubini(v), n, k)
        payload["times"] = list(v)
        payload["expansion"] = [
            {"word": list(u), "coeff": str(c)} for u, c in sorted(coeffs.items())
        ]
        table = [["word", "coeff"]] + [["".join(map(str, u)), str(c)] for u, c in sorted(coeffs.items())]
    return Result(payload, True, table)


def cmd_stats(args) -> Result:
    from .arith import rev_q
    from .combinatorics import coinv, inv, mahonian_osp, ordered_set_partitions
    from .schubert import dim_generating_function

    n, k = args.n, args.k
    if not 1 <= k <= n:
        raise UsageError("--k must satisfy 1 <= k <= n")
    inv_c: Dict[int, int] = {}
    coinv_c: Dict[int, int] = {}
    for sigma in ordered_set_partitions(n, k):
        a, b = inv(sigma), coinv(sigma)
        inv_c[a] = inv_c.get(a, 0) + 1
        coinv_c[b] = coinv_c.get(b, 0) + 1
    dim = dim_generating_function(n, k)
    formula = mahonian_osp(n, k)
    top = max(formula.degree_q(), 0)
    rows = [["degree", "inv", "coinv", "dim", "formula"]]
    for d in range(top + 1):
        rows.append([d, inv_c.get(d, 0), coinv_c.get(d, 0), int(dim.coeff(d, 0)), int(formula.coeff(d, 0))])
    ok = True
    if args.verify:
        ok = all(r[1] == r[3] == r[4] for r in rows[1:]) and sum(inv_c.values()) == sum(formula.coeff(d, 0) for d in range(top + 1))
        coinv_poly = [r[2] for r in rows[1:]]
        ok = ok and coinv_poly == [r[4] for r in rows[1:]][::-1]
    payload = {"n": n, "k": k, "table": rows[1:], "columns": rows[0], "match": ok}
    return Result(payload, ok, rows)


# ---------------------------------------------------------------------------
# plumbing


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cache-dir", help="directory for cached tables (DELTACALC_CACHE overrides)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for enumerations")
    common.add_argument("--no-verify", dest="verify", action="store_false", help="skip cross-checks")

    parser = _Parser(prog="deltacalc", description="Exact computations around Delta operators and R_{n,k}.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("frob", cmd_frob, "graded Frobenius image of R_{n,k} by three formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("delta", cmd_delta, "Schur expansion of Delta'_{e_{k-1}} e_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("shuffle-check", cmd_shuffle, "nabla e_n against the parking function sum")
    p.add_argument("--n", type=int, required=True)
    p = add("rise-check", cmd_rise, "Delta'_{e_{k-1}} e_n against the rise sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("osp", cmd_osp, "ordered set partition statistics and codes")
    p.add_argument("--encode", help='blocks such as "6|14|237|5"')
    p.add_argument("--decode", help="code sequence such as 2,1,3,2,0,0,2")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p = add("groebner", cmd_groebner, "reduced Groebner basis of a named ideal")
    p.add_argument("--kind", required=True, choices=("coinvariant", "nk", "nks", "tanisaki", "griffin", "line"))
    p.add_argument("--order", default="neglex", choices=("neglex", "graded_neglex"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--lam", help="partition such as 2,1,1")
    p = add("orbit", cmd_orbit, "orbit harmonics of a point locus given as CSV")
    p.add_argument("--locus", required=True, help="CSV file of points, or - for stdin")
    p = add("count-fq", cmd_count_fq, "spanning line configurations over F_q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = add("schubert", cmd_schubert, "Schubert polynomial of a Fubini word")
    p.add_argument("--word", required=True)
    p.add_argument("--times", help="second word: expand the product in R_{n,k}")
    p = add("stats", cmd_stats, "inv, coinv and dim generating functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def _emit(result: Result, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(result.payload, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    if result.table is not None:
        writer.writerows(result.table)
        return
    for key in sorted(result.payload):
        v = result.payload[key]
        writer.writerow([key, v if isinstance(v, (int, str, bool)) else json.dumps(v, sort_keys=True)])


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        for name in ("n", "k", "q"):
            v = getattr(args, name, None)
            if v is not None and v < 1:
                raise UsageError(f"--{name} must be positive")
        if args.cache_dir:
            cache.configure(args.cache_dir)
        result = args.func(args)
    except UsageError as exc:
        err.write(f"deltacalc: usage error: {exc}\n")
        return EXIT_USAGE
    except DeltaCalcError as exc:
        err.write(f"deltacalc: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"deltacalc: {exc}\n")
        return EXIT_USAGE
    _emit(result, args.format, out)
    if not result.ok:
        err.write("deltacalc: verification mismatch (both sides are in the output)\n")
        return EXIT_MISMATCH
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
