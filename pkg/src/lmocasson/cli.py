"""Command-line front end.

    lmocasson invariants FILE [--json]
    lmocasson zn FILE --degree N
    lmocasson verify [--suite NAME] [--seed S] [--trials T] [--max-n N]

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 precondition error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .diagrams import CharCombo, canonicalize, format_rational
from .generators import theta_power
from .lescop import lambda_b2, lambda_surgery
from .lmo import z1, zn_b2
from .pairing import theta_power_coefficient
from .surgery import PreconditionError, PresentationError, derived_stats, parse_presentation
from .verification import DEFAULT_SEED, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3
REPORT_ZN_DEGREES = (1, 2)


def describe_combo(combo: CharCombo) -> list[str]:
    """One line per term; powers of Theta are named, other diagrams serialized."""
    if not combo:
        return ["0"]
    lines = []
    for d, c in combo.items():
        k = d.degree
        if not d.n_legs and canonicalize(theta_power(k))[0] == d:
            coeff = combo.coefficient(theta_power(k))
            if k == 0:
                lines.append(format_rational(coeff))
            else:
                name = "Θ" if k == 1 else f"Θ^{k}"
                lines.append(f"{format_rational(coeff)} · {name}")
        else:
            body = d.serialize().replace("\n", "\n    ")
            lines.append(f"{format_rational(c)} · [\n    {body}\n  ]")
    return lines


def _zn_entry(s, n):
    combo = zn_b2(s, n)
    return {
        "degree": n,
        "combo": combo.serialize(),
        "thetaPowerProjection": format_rational(theta_power_coefficient(combo, n)),
    }


def build_report(s) -> dict:
    st = derived_stats(s)
    report = {
        "b1": st.b1,
        "sigmaPlus": st.sigma_plus,
        "sigmaMinus": st.sigma_minus,
        "h1Order": st.h1_order,
        "lambdaSurgery": format_rational(lambda_surgery(s)),
        "z1ThetaCoefficient": format_rational(z1(s).theta_coefficient),
    }
    if st.b1 == 2:
        report["lambdaLemma1"] = format_rational(lambda_b2(s))
        report["znResults"] = [_zn_entry(s, n) for n in REPORT_ZN_DEGREES]
    return report


def parse_report(text: str) -> dict:
    """Read a JSON report back, turning rational strings into Fractions."""
    doc = json.loads(text)
    for key in ("lambdaSurgery", "z1ThetaCoefficient", "lambdaLemma1"):
        if key in doc:
            doc[key] = Fraction(doc[key])
    for entry in doc.get("znResults", []):
        entry["thetaPowerProjection"] = Fraction(entry["thetaPowerProjection"])
    return doc


def _load(path):
    with open(path, "rb") as fh:
        return parse_presentation(fh.read())


def cmd_invariants(args, out) -> int:
    s = _load(args.file)
    report = build_report(s)
    if args.json:
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    rows = [("b1", report["b1"]), ("sigma+", report["sigmaPlus"]),
            ("sigma-", report["sigmaMinus"]), ("|H1|", report["h1Order"])]
    if "lambdaLemma1" in report:
        rows.append(("lambda (b1=2 formula)", report["lambdaLemma1"]))
    rows += [("lambda (surgery formula)", report["lambdaSurgery"]),
             ("Z_1 / Theta", report["z1ThetaCoefficient"])]
    for entry in report.get("znResults", []):
        n = entry["degree"]
        rows.append((f"Z_{n} Theta^{n} projection", entry["thetaPowerProjection"]))
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        out.write(f"{k:<{width}}  {v}\n")
    return EXIT_OK


def cmd_zn(args, out) -> int:
    s = _load(args.file)
    b1 = derived_stats(s).b1
    if b1 != 2:
        raise PreconditionError(f"zn requires b1 = 2; this presentation has b1 = {b1}")
    if not 1 <= args.degree <= 3:
        raise PreconditionError(f"zn supports degrees 1..3, got {args.degree}")
    combo = zn_b2(s, args.degree)
    for line in describe_combo(combo):
        out.write(line + "\n")
    proj = theta_power_coefficient(combo, args.degree)
    out.write(f"Theta^{args.degree} projection: {format_rational(proj)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    options = {"seed": args.seed}
    if args.trials is not None:
        options["trials"] = args.trials
    if args.max_n is not None:
        options["max_n"] = args.max_n
    checks = run_suite(args.suite, **options)
    for check in checks:
        out.write(check.line() + "\n")
    failed = sum(1 for c in checks if not c.passed)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_OK if not failed else EXIT_FAIL


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmocasson",
        description="LMO invariant in low degree and the Casson-Walker-Lescop invariant "
                    "of surgery on algebraically split links.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="report invariants of a surgery presentation")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("zn", help="degree-n LMO invariant when b1 = 2")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_zn)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except PresentationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except PreconditionError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
