"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 invalid parameters
or unmet theorem preconditions, 3 work budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import product

from . import kernels
from .charsum import (
    gaussian_period_closed_N2,
    gaussian_period_direct,
    jacobi_sum,
    quadratic_index,
    reduced_jacobi_closed,
    jacobi_closed,
)
from .code_family import (
    WeightDistribution,
    auto_theorem,
    build_lambda,
    distribution_to_json,
    theorem1_distribution,
    theorem1_failures,
    theorem2_distribution,
    theorem2_failures,
    theorem3_distribution,
    theorem3_failures,
    theorem_min_distance,
    validate_params,
    weights_by_enumeration,
    weights_by_tracesum,
)
from .errors import BudgetExceededError, CyclocodeError, PreconditionsNotMetError
from .finite_field import build_field, format_poly_coeffs, parse_poly
from .omega import (
    OmegaPattern,
    omega_bruteforce,
    omega_closed,
    omega_sum_form,
    omega_via_jacobi,
)
from .polynomials import cyclotomic_coset, minimal_polynomial, parity_check_polynomial


# -- argument parsing ----------------------------------------------------------

def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _shared() -> argparse.ArgumentParser:
    sh = argparse.ArgumentParser(add_help=False)
    sh.add_argument("--p", type=int, help="characteristic")
    sh.add_argument("--s", type=int, default=1, help="q = p^s (default 1)")
    sh.add_argument("--m", type=int, help="r = q^m")
    sh.add_argument("--modulus", help="modulus of GF(r) over GF(p), constant first, e.g. 2,4,1")
    sh.add_argument("--gamma", help="primitive element as a polynomial, constant first, e.g. 0,1")
    sh.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sh.add_argument("--out", help="write output to this file instead of stdout")
    sh.add_argument("--threads", type=int, default=1)
    sh.add_argument("--budget", type=int, default=None,
                    help="max work units for exhaustive methods (env CYCLOCODE_BUDGET)")
    return sh


def _code_flags(sp: argparse.ArgumentParser):
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--deltas", type=_int_list, required=True, help="comma-separated")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocode",
        description="Reducible cyclic codes over finite fields and their weight distributions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sh = _shared()

    sub.add_parser("field-info", parents=[sh], help="describe GF(r) and its subfield")

    sp = sub.add_parser("construct", parents=[sh], help="derived parameters and h(x)")
    _code_flags(sp)

    sp = sub.add_parser("weights", parents=[sh], help="weight distribution")
    _code_flags(sp)
    sp.add_argument("--method", choices=("enumerate", "tracesum", "theorem", "auto"), default="auto")

    sp = sub.add_parser("verify", parents=[sh], help="run every cross-check for one code")
    _code_flags(sp)

    sp = sub.add_parser("charsum", parents=[sh], help="Gaussian periods or Jacobi sums")
    sp.add_argument("--kind", choices=("periods", "jacobi"), default="periods")
    sp.add_argument("--L", type=int, default=2, help="order of the Gaussian periods")
    sp.add_argument("--chars", default="rho,rho",
                    help="Jacobi sum characters, comma-separated eps/rho")
    sp.add_argument("--reduced", action="store_true", help="restrict to nonzero z_i")

    sp = sub.add_parser("omega", parents=[sh], help="quadratic pattern counts")
    sp.add_argument("--pattern", required=True, help="bit string such as 0011")
    sp.add_argument("--field", type=_int_list, help="p,s,m (alternative to --p/--s/--m)")
    sp.add_argument("--method", choices=("brute", "jacobi", "sum", "closed", "all"), default="all")
    return parser


def _field(args):
    p, s, m = args.p, args.s, args.m
    if getattr(args, "field", None):
        if len(args.field) != 3:
            raise ValueError("--field expects p,s,m")
        p, s, m = args.field
    if p is None or m is None:
        raise ValueError("the field needs --p and --m (and optionally --s)")
    modulus = parse_poly(args.modulus) if args.modulus else None
    gamma = parse_poly(args.gamma) if args.gamma else None
    return build_field(p, s, m, modulus=modulus, gamma_poly=gamma)


def _params(args):
    return validate_params(_field(args), args.e, args.t, args.a, args.deltas)


def _budget(args) -> int:
    return args.budget if args.budget is not None else kernels.default_budget()


# -- rendering -------------------------------------------------------------------

def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _kv_text(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in pairs)


def _render_pairs(pairs, fmt) -> str:
    if fmt == "json":
        return _dump_json({k: v for k, v in pairs})
    if fmt == "csv":
        return _csv([(k, v if not isinstance(v, (list, tuple)) else " ".join(map(str, v)))
                      for k, v in pairs], ("key", "value"))
    return _kv_text([(k, v if not isinstance(v, (list, tuple)) else
                      "(" + ",".join(map(str, v)) + ")") for k, v in pairs])


def render_distribution(dist: WeightDistribution, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(distribution_to_json(dist))
    if fmt == "csv":
        return _csv(dist.entries.items(), ("weight", "frequency"))
    P = dist.params
    lines = []
    if P is not None:
        lines.append(f"code: n={P.n}, k={P.dim}, q={P.q}, a_i=({','.join(map(str, P.exponents))})")
    lines.append(f"method: {dist.label}")
    lines.append(f"{'weight':>8}  frequency")
    for w, f in dist.entries.items():
        lines.append(f"{w:>8}  {f}")
    lines.append(f"min distance: {dist.min_distance()}")
    for k, v in dist.checks().items():
        lines.append(f"check {k}: {v}")
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------

def cmd_field_info(args) -> str:
    F = _field(args)
    pairs = [
        ("p", F.p), ("s", F.s), ("m", F.m), ("q", F.q), ("r", F.r),
        ("modulus_r", format_poly_coeffs(F.modulus_r)),
        ("modulus_q", format_poly_coeffs(F.modulus_q)),
        ("gamma", format_poly_coeffs(F.gamma_poly)),
        ("subfield_generator", F.format_element(F.sub_gen)),
        ("minus_one", F.format_element(F.neg(1))),
        ("trace_q_of_gamma", F.format_element(F.trace(F.gamma, "q"))),
    ]
    return _render_pairs(pairs, args.format)


def cmd_construct(args) -> str:
    P = _params(args)
    F = P.field
    h = parity_check_polynomial(P)
    factors = [str(minimal_polynomial(F.exp(-x), F)) for x in P.exponents]
    cosets = [" ".join(map(str, cyclotomic_coset(x, F).members)) for x in P.exponents]
    pairs = [
        ("a_i", list(P.exponents)), ("N", P.N), ("delta", P.delta), ("n", P.n), ("dim", P.dim),
        ("cosets", cosets), ("h_factors", factors), ("h(x)", str(h)),
        ("h_coeffs", h.to_coeff_text()),
    ]
    for k, v in P.applicability().items():
        pairs.append((k, v))
    if args.format == "text":
        pairs = [(k, "; ".join(v) if k in ("cosets", "h_factors") else v) for k, v in pairs]
    return _render_pairs(pairs, args.format)


def _auto_or_fallback(P, args) -> WeightDistribution:
    try:
        return auto_theorem(P)
    except PreconditionsNotMetError as exc:
        dist = weights_by_enumeration(P, budget=_budget(args), threads=args.threads)
        dist.detail = f"fallback, {exc}"
        return dist


def cmd_weights(args) -> str:
    P = _params(args)
    method = args.method
    if method == "enumerate":
        dist = weights_by_enumeration(P, budget=_budget(args), threads=args.threads)
    elif method == "tracesum":
        dist = weights_by_tracesum(P, budget=_budget(args))
    elif method == "theorem":
        dist = auto_theorem(P)
    else:
        dist = _auto_or_fallback(P, args)
    return render_distribution(dist, args.format)


def verify_report(P, budget: int, threads: int = 1) -> tuple[list[tuple[str, bool, str]], str]:
    """Every applicable cross-check for one code; returns (rows, summary chain)."""
    F = P.field
    rows = []

    def check(name, ok, info=""):
        rows.append((name, bool(ok), info))

    if F.order % 2 == 0 and F.degree % 2 == 0:
        closed = gaussian_period_closed_N2(F)
        direct = tuple(gaussian_period_direct(F, 2, i).to_int() for i in range(2))
        check("gaussian periods closed = direct", closed == direct, f"{closed}")
    if F.order % 2 == 0 and F.is_square(F.neg(1)) == 0 and F.degree % 2 == 0:
        length = 2
        while length <= 5 and (F.order // 2) ** (length - 1) <= budget // 4:
            ok = True
            for bits in product((0, 1), repeat=length):
                pat = OmegaPattern(bits)
                vals = {omega_bruteforce(pat, F, budget=budget, threads=threads),
                        omega_via_jacobi(pat, F), omega_sum_form(pat, F),
                        omega_closed(pat.zeros, pat.ones, F)}
                ok = ok and len(vals) == 1
            check(f"omega four-way, length {length}", ok)
            length += 1

    enum = weights_by_enumeration(P, budget=budget, threads=threads)
    trace = weights_by_tracesum(P, budget=budget)
    check("enumeration = tracesum", enum == trace)
    chain = ["enumeration", "tracesum"]
    if not theorem1_failures(P):
        check("enumeration = theorem1", enum == theorem1_distribution(P))
        check("min distance formula", enum.min_distance() == theorem_min_distance(P))
    if not theorem2_failures(P):
        check("enumeration = theorem2", enum == theorem2_distribution(P))
    if not theorem3_failures(P):
        lam = build_lambda(P)
        check("enumeration = theorem3", enum == theorem3_distribution(P, lam),
              f"l0={lam.l0}, l1={lam.l1}")
        chain.append("theorem3")
    for name, status in enum.checks().items():
        check(f"moment {name}", status == "pass")
    return rows, " = ".join(chain)


def cmd_verify(args) -> tuple[str, int]:
    P = _params(args)
    rows, chain = verify_report(P, _budget(args), args.threads)
    ok = all(r[1] for r in rows)
    summary = (f"ALL CHECKS PASS ({chain}; moments ok)" if ok
               else f"CHECKS FAILED: {', '.join(r[0] for r in rows if not r[1])}")
    if args.format == "json":
        out = _dump_json({
            "params": P.as_dict(),
            "checks": [{"name": n, "ok": o, "info": i} for n, o, i in rows],
            "summary": summary,
        })
    elif args.format == "csv":
        out = _csv([(n, "pass" if o else "fail", i) for n, o, i in rows], ("check", "status", "info"))
    else:
        out = "".join(f"{'PASS' if o else 'FAIL'}  {n}{'  [' + i + ']' if i else ''}\n"
                      for n, o, i in rows) + summary + "\n"
    return out, 0 if ok else 1


def cmd_charsum(args) -> str:
    F = _field(args)
    if args.kind == "periods":
        vals = [(f"eta_{i}", str(gaussian_period_direct(F, args.L, i))) for i in range(args.L)]
        if args.L == 2 and F.degree % 2 == 0:
            e0, e1 = gaussian_period_closed_N2(F)
            vals.append(("closed_form", f"({e0}, {e1})"))
        return _render_pairs(vals, args.format)
    names = [c.strip().lower() for c in args.chars.split(",") if c.strip()]
    table = {"eps": 0, "rho": quadratic_index(F)}
    bad = [c for c in names if c not in table]
    if bad:
        raise ValueError(f"unknown character {bad[0]!r}; use eps or rho")
    value = jacobi_sum(F, [table[c] for c in names], reduced=args.reduced)
    k, n_eps = len(names), names.count("eps")
    closed = (reduced_jacobi_closed(F, k, n_eps) if args.reduced
              else jacobi_closed(F, k, n_eps))
    pairs = [("chars", ",".join(names)), ("reduced", args.reduced),
             ("brute_force", str(value)), ("closed_form", str(closed))]
    return _render_pairs(pairs, args.format)


def cmd_omega(args) -> tuple[str, int]:
    F = _field(args)
    pat = OmegaPattern.parse(args.pattern)
    methods = {
        "brute": lambda: omega_bruteforce(pat, F, budget=_budget(args), threads=args.threads),
        "jacobi": lambda: omega_via_jacobi(pat, F),
        "sum": lambda: omega_sum_form(pat, F),
        "closed": lambda: omega_closed(pat.zeros, pat.ones, F),
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    pairs = [("pattern", str(pat))] + [(name, methods[name]()) for name in chosen]
    code = 0
    if args.method == "all":
        agree = len({v for _, v in pairs[1:]}) == 1
        pairs.append(("agreement", "PASS" if agree else "FAIL"))
        code = 0 if agree else 1
    return _render_pairs(pairs, args.format), code


COMMANDS = {
    "field-info": cmd_field_info,
    "construct": cmd_construct,
    "weights": cmd_weights,
    "verify": cmd_verify,
    "charsum": cmd_charsum,
    "omega": cmd_omega,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.budget is None and os.environ.get("CYCLOCODE_BUDGET"):
        args.budget = int(os.environ["CYCLOCODE_BUDGET"])
    try:
        result = COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: budget exceeded: {exc}", file=stderr)
        return 3
    except (CyclocodeError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    text, code = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
