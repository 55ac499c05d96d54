"""Batch verification front end.

Exit codes: 0 = all checks passed, 1 = a mathematical check failed,
2 = bad input or configuration.  Reports carry no timestamps and all
iteration orders are fixed, so identical invocations produce identical
bytes regardless of the --jobs setting.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .arith import is_prime, multiplicative_order, primitive_root
from .cyclotomic import PrecisionExhausted, ValuationCapExceeded
from .gauss import build_record
from .groupring import (
    delta_coeffs,
    polynomial_P,
    polynomial_Q,
    polynomial_Q1_factorization,
    polynomial_S2,
    q_identity_holds,
    s2_refold_identity_holds,
    stickelberger_S,
)
from .principality import half_degree_corollary, principal_norm_probe, principality_test
from .regularity import bernoulli_mod_p, q_root_scan

# The fixed pair battery exercised by the `suite` command.
SUITE_SPLIT_PAIRS = ((3, 7), (3, 13), (5, 11), (5, 31), (7, 29), (11, 23))
SUITE_INERT_PAIRS = ((5, 3), (7, 2), (11, 3), (5, 7))


def _emit(text, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _json_dump(obj, out):
    _emit(json.dumps(obj, indent=2), out)


def _coeff_strings(elt):
    return [str(c) for c in elt.coeffs]


def _scan_worker(p):
    return q_root_scan(p)


def _primes_upto(n):
    return [p for p in range(3, n + 1) if is_prime(p)]


def cmd_scan_irregular(args, out):
    primes = _primes_upto(args.pmax)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(_scan_worker, primes))
    else:
        verdicts = [_scan_worker(p) for p in primes]
    _emit(f"# stickelberger {__version__}", out)
    _emit(f"# scan-irregular pmax={args.pmax}", out)
    _emit("p\tverdict\todd_roots\tirregular_indices\tagreement", out)
    failures = []
    irregular_count = 0
    for vd in verdicts:
        if vd.verdict == "irregular":
            irregular_count += 1
        if not vd.agreement:
            failures.append(vd.p)
        _emit(
            "\t".join(
                (
                    str(vd.p),
                    vd.verdict,
                    ",".join(str(m) for m in sorted(vd.odd_roots)) or "-",
                    ",".join(str(k) for k in sorted(vd.irregular_indices)) or "-",
                    "yes" if vd.agreement else "NO",
                )
            ),
            out,
        )
    _emit(f"# summary scanned={len(verdicts)} irregular={irregular_count}", out)
    _emit(f"# failures {','.join(map(str, failures)) if failures else '-'}", out)
    return 1 if failures else 0


def cmd_bernoulli(args, out):
    table = bernoulli_mod_p(args.p)
    _emit(f"# stickelberger {__version__}", out)
    _emit(f"# bernoulli p={args.p}", out)
    _emit("k\tB_k_mod_p", out)
    for k in sorted(table):
        _emit(f"{k}\t{table[k]}", out)
    return 0


def cmd_stickelberger_show(args, out):
    p = args.p
    v = primitive_root(p)
    s = stickelberger_S(p, v)
    big_p = polynomial_P(p, v)
    q1, q1_ok = polynomial_Q1_factorization(p, v)
    payload = {
        "version": __version__,
        "p": p,
        "v": v,
        "S": _coeff_strings(s),
        "P": _coeff_strings(big_p),
        "delta": [str(d) for d in delta_coeffs(p, v)],
        "Q": _coeff_strings(polynomial_Q(p, v)),
        "Q1": _coeff_strings(q1),
        "identities": {
            "S_equals_P": s == big_p,
            "P_times_sigma_minus_v_is_pQ": q_identity_holds(p, v),
            "Q1_factorization": q1_ok,
        },
    }
    if args.q is not None:
        f = multiplicative_order(args.q, p)
        if f == 1:
            raise ValueError(f"q={args.q} splits (f=1); S2 is undefined")
        s2 = polynomial_S2(p, args.q, v)
        payload["S2"] = {
            "q": args.q,
            "f": f,
            "m": (p - 1) // f,
            "coeffs": _coeff_strings(s2)[: (p - 1) // f],
            "refold_identity": s2_refold_identity_holds(p, args.q, v),
        }
    _json_dump(payload, out)
    ok = all(payload["identities"].values()) and (
        "S2" not in payload or payload["S2"]["refold_identity"]
    )
    return 0 if ok else 1


def cmd_gauss_verify(args, out):
    record = build_record(args.p, args.q, args.hensel_precision, args.valuation_cap)
    payload = {"version": __version__}
    payload.update(record.to_json_obj())
    _json_dump(payload, out)
    return 0 if record.ok else 1


def cmd_principality_test(args, out):
    report = principality_test(args.p, args.q)
    payload = {"version": __version__}
    payload.update(report.to_json_obj())
    _json_dump(payload, out)
    return 0 if report.full_orbit_sum_ok else 1


def cmd_principality_corollary(args, out):
    verdict = half_degree_corollary(args.p)
    payload = {"version": __version__}
    payload.update(verdict.to_json_obj())
    _json_dump(payload, out)
    return 0 if verdict.verdict else 1


def cmd_principality_probe(args, out):
    report = principal_norm_probe(args.p, args.bound, args.coeff_bound)
    payload = {"version": __version__}
    payload.update(report.to_json_obj())
    _json_dump(payload, out)
    return 0 if not report.counterexamples else 1


def _suite_gauss_item(pair):
    record = build_record(*pair)
    return record.to_json_obj()


def cmd_suite(args, out):
    """One deterministic report over the whole verification battery."""
    primes = _primes_upto(args.pmax)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            scan = list(pool.map(_scan_worker, primes))
            gauss = list(
                pool.map(_suite_gauss_item, SUITE_SPLIT_PAIRS + SUITE_INERT_PAIRS)
            )
    else:
        scan = [_scan_worker(p) for p in primes]
        gauss = [_suite_gauss_item(pair) for pair in SUITE_SPLIT_PAIRS + SUITE_INERT_PAIRS]
    principality = [
        principality_test(p, q).to_json_obj()
        for (p, q) in SUITE_INERT_PAIRS
    ]
    corollaries = [
        half_degree_corollary(p).to_json_obj()
        for p in primes
        if p % 4 == 3 and p > 3
    ]
    failures = []
    for item in gauss:
        if not item["ok"]:
            failures.append(f"gauss p={item['p']} q={item['q']}")
    for vd in scan:
        if not vd.agreement:
            failures.append(f"scan p={vd.p}")
    for item in principality:
        if not item["full_orbit_sum_ok"]:
            failures.append(f"principality p={item['p']} q={item['q']}")
    for item in corollaries:
        if not item["verdict"]:
            failures.append(f"corollary p={item['p']}")
    # the config echo carries only math-relevant settings: --jobs must not
    # change a single output byte
    payload = {
        "version": __version__,
        "config": {"pmax": args.pmax},
        "gauss_records": gauss,
        "scan": [vd.to_json_obj() for vd in scan],
        "principality": principality,
        "half_degree_corollaries": corollaries,
        "summary": {
            "gauss_records": len(gauss),
            "primes_scanned": len(scan),
            "principality_reports": len(principality),
            "corollaries": len(corollaries),
            "failures": len(failures),
        },
        "failures": failures,
    }
    _json_dump(payload, out)
    return 1 if failures else 0


def _add_prime_arg(parser, name, help_text):
    parser.add_argument(name, type=int, required=True, help=help_text)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stickelberger",
        description="Exact verification of Gauss-sum and Stickelberger facts "
        "in prime cyclotomic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan-irregular", help="scan primes for irregularity")
    scan.add_argument("--pmax", type=int, required=True, help="largest prime to scan")
    scan.add_argument("--jobs", type=int, default=1, help="parallel workers")
    scan.set_defaults(func=cmd_scan_irregular)

    bern = sub.add_parser("bernoulli", help="Bernoulli numbers mod p")
    _add_prime_arg(bern, "--p", "odd prime modulus")
    bern.set_defaults(func=cmd_bernoulli)

    stick = sub.add_parser("stickelberger", help="group-ring elements")
    stick_sub = stick.add_subparsers(dest="subcommand", required=True)
    show = stick_sub.add_parser("show", help="dump S, P, delta, Q, Q1 (and S2)")
    _add_prime_arg(show, "-p", "odd prime")
    show.add_argument("-q", type=int, default=None, help="prime with f > 1, for S2")
    show.set_defaults(func=cmd_stickelberger_show)

    gauss = sub.add_parser("gauss", help="Gauss-sum records")
    gauss_sub = gauss.add_subparsers(dest="subcommand", required=True)
    verify = gauss_sub.add_parser("verify", help="build and verify g(q)")
    _add_prime_arg(verify, "-p", "odd prime")
    _add_prime_arg(verify, "-q", "prime distinct from p")
    verify.add_argument(
        "--hensel-precision", type=int, default=None, help="initial q-adic precision"
    )
    verify.add_argument(
        "--valuation-cap", type=int, default=None, help="lambda-adic valuation cap"
    )
    verify.set_defaults(func=cmd_gauss_verify)

    prin = sub.add_parser("principality", help="p-principality tests")
    prin_sub = prin.add_subparsers(dest="subcommand", required=True)
    test = prin_sub.add_parser("test", help="congruence test for f > 1")
    _add_prime_arg(test, "-p", "odd prime")
    _add_prime_arg(test, "-q", "prime with f > 1")
    test.set_defaults(func=cmd_principality_test)
    corollary = prin_sub.add_parser("corollary", help="half-degree corollary")
    _add_prime_arg(corollary, "-p", "prime = 3 mod 4")
    corollary.set_defaults(func=cmd_principality_corollary)
    probe = prin_sub.add_parser("probe", help="norm-probe search")
    _add_prime_arg(probe, "-p", "odd prime")
    probe.add_argument("--bound", type=int, default=10_000, help="candidate cap")
    probe.add_argument(
        "--coeff-bound", type=int, default=2, help="coefficient box half-width"
    )
    probe.set_defaults(func=cmd_principality_probe)

    suite = sub.add_parser("suite", help="full deterministic verification report")
    suite.add_argument("--pmax", type=int, default=100, help="scan bound")
    suite.add_argument("--jobs", type=int, default=1, help="parallel workers")
    suite.set_defaults(func=cmd_suite)

    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("pmax", "jobs", "bound", "coeff_bound", "hensel_precision", "valuation_cap"):
        value = getattr(args, name, None)
        if value is not None and value <= 0:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return 2
    try:
        return args.func(args, out)
    except (ValueError, OverflowError, PrecisionExhausted, ValuationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
