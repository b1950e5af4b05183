"""Command-line interface: ``ascartier {anumber,bounds,certify,scan,paper-example}``.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import paper_example
from .algebra import FieldContext, make_field
from .bounds import L, L_J, dim_H_le, index_sets
from .cartier import cartier_matrix, filtration_report
from .certificate import greedy_sigma0, minor_spec, randomized_det_check
from .curve import CurveParams, check_params, genus
from .scan import run_scan, serialize_coeffs, write_scan

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_range(text: str) -> list[int]:
    """'2..8' (inclusive), '5', or '2,5,7'."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use A..B or a comma list") from None


def parse_coeffs(text: str, field: FieldContext) -> list[int]:
    """Comma-separated a_0..a_d; each entry an integer or a ':'-separated
    coefficient vector (lowest first) over the field's modulus."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            digits = [int(x) for x in tok.split(":")]
        except ValueError:
            raise UsageError(f"bad coefficient {tok!r}") from None
        if len(digits) > field.m:
            raise UsageError(f"coefficient {tok!r} has more than m={field.m} entries")
        out.append(field.from_digits(digits))
    return out


def format_coeff(c, m: int) -> str:
    return str(c) if m == 1 else ":".join(map(str, c))


def _field(args) -> FieldContext:
    if getattr(args, "modulus", None):
        mod = _ints(args.modulus)
        if len(mod) - 1 != args.m:
            raise UsageError(f"--modulus has degree {len(mod) - 1}, expected m={args.m}")
        return FieldContext(args.p, mod)
    return make_field(args.p, args.m, args.field_seed)


def _field_header(field: FieldContext) -> str:
    if field.m == 1:
        return f"field: F_{field.p}"
    return f"field: F_{field.p}^{field.m}  modulus (low->high): {','.join(map(str, field.modulus))}"


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


# -- commands ----------------------------------------------------------------

def cmd_anumber(args) -> int:
    field = _field(args)
    values = parse_coeffs(args.coeffs, field)
    if len(values) != args.d + 1:
        raise UsageError(f"--coeffs must list d+1 = {args.d + 1} values a_0..a_d, got {len(values)}")
    curve = CurveParams.from_values(field, values)
    cm = cartier_matrix(curve)
    report = filtration_report(curve, cm)
    a = report.kernel_dims[-1] if report.kernel_dims else 0
    bound = L(curve.p, curve.d)
    out = {
        "command": "anumber",
        "p": curve.p,
        "d": curve.d,
        "m": field.m,
        "modulus": list(field.modulus),
        "coeffs": serialize_coeffs(curve),
        "genus": cm.genus,
        "a_number": a,
        "L": bound,
        "filtration": report.rows(),
    }
    if args.json:
        _emit(out)
    else:
        print(_field_header(field))
        print(f"curve: y^{curve.p} - y = f(x), a = ({', '.join(format_coeff(c, field.m) for c in out['coeffs'])})")
        print(f"genus: {cm.genus}")
        print(f"a-number: {a}")
        print(f"L(d): {bound}" + ("  (minimal)" if a == bound else ""))
        print(f"{'J':>3} {'dim':>6} {'kernel':>7} {'L_J':>5}")
        for row in out["filtration"]:
            pred = "-" if row["predicted"] is None else row["predicted"]
            print(f"{row['J']:>3} {row['dim']:>6} {row['kernel']:>7} {pred:>5}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    p, d = args.p, args.d
    check_params(p, d)
    rows = []
    for J in range(1, p):
        row = {"J": J, "dim_H_le": dim_H_le(p, d, J), "L_J": L_J(p, d, J) if J <= (p + 1) // 2 else None}
        if J > 1:
            sets = index_sets(p, d, J)
            row.update(R=len(sets.R), C=len(sets.C))
        rows.append(row)
    out = {"command": "bounds", "p": p, "d": d, "genus": genus(p, d), "L": L(p, d), "levels": rows}
    if args.json:
        _emit(out)
    else:
        print(f"p={p} d={d} genus={out['genus']} L(d)={out['L']}")
        print(f"{'J':>3} {'dim H<=J':>9} {'L_J':>5} {'|R_J|':>6} {'|C_J|':>6}")
        for r in rows:
            lj = "-" if r["L_J"] is None else r["L_J"]
            print(f"{r['J']:>3} {r['dim_H_le']:>9} {lj:>5} {r.get('R', '-'):>6} {r.get('C', '-'):>6}")
    return EXIT_OK


def certify_report(p: int, d: int, J: int) -> dict:
    minor = minor_spec(p, d, J)
    cert = greedy_sigma0(minor)
    return {
        "command": "certify",
        "p": p,
        "d": d,
        "J": J,
        "R": [list(r) for r in minor.sets.R],
        "C": list(minor.sets.C),
        "minor_rows": [i for i, _ in minor.rows],
        "minor_cols": list(minor.cols),
        "steps": [[ell, list(rs), list(cs)] for ell, rs, cs in cert.step_order()],
        "sigma0": [[i, ip] for i, ip in cert.sigma0.items()],
        "leading_monomial": str(cert.leading_monomial) if cert.success else None,
        "degree": minor.degree,
        "success": cert.success,
    }


def cmd_certify(args) -> int:
    p, d = args.p, args.d
    check_params(p, d)
    js = list(range(2, p)) if args.all_j else [args.j]
    check_field = None
    if args.check:
        m, trials = args.check
        check_field = make_field(p, m, args.field_seed)
    status = EXIT_OK
    for J in js:
        rep = certify_report(p, d, J)
        if check_field is not None:
            minor = minor_spec(p, d, J)
            rep["check"] = {
                "q": check_field.q,
                "trials": trials,
                "nonzero_fraction": randomized_det_check(minor, check_field, trials, args.check_seed),
            }
        if not rep["success"]:
            status = EXIT_MISMATCH
        if args.json:
            _emit(rep)
            continue
        print(f"p={p} d={d} J={J}")
        print(f"  R_J (i,lam): {[tuple(r) for r in rep['R']]}")
        print(f"  C_J: {rep['C']}")
        print(f"  minor N: {len(rep['minor_rows'])}x{len(rep['minor_cols'])} columns {rep['minor_cols']}")
        for ell, rs, cs in rep["steps"]:
            print(f"  step {ell:>3}: rows {rs} -> cols {cs}")
        print("  sigma0: " + ", ".join(f"{i}->{ip}" for i, ip in rep["sigma0"]))
        print(f"  LM(Pr(sigma0)): {rep['leading_monomial']}")
        print(f"  certified: {'yes' if rep['success'] else 'NO'}")
        if "check" in rep:
            c = rep["check"]
            print(f"  random check over F_{c['q']}: nonzero in {c['nonzero_fraction']:.3f} of {c['trials']} trials")
    return status


def cmd_scan(args) -> int:
    field = _field(args)
    degrees = parse_range(args.d)
    for d in degrees:
        if d < 1:
            raise UsageError(f"degree {d} must be positive")
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    if not any(d % args.p for d in degrees):
        raise UsageError(f"no degree in {args.d!r} is prime to p={args.p}")
    if args.out and args.out.endswith(".json"):
        raise UsageError("--out names the CSV file; the .json sidecar is derived from it")
    records = run_scan(field, degrees, args.trials, args.seed, args.threads)
    if args.out:
        csv_path, json_path = write_scan(records, args.out)
    status = EXIT_OK
    for rec in records:
        if any(a < rec.L for a in rec.anumbers):
            status = EXIT_MISMATCH
    if args.json:
        for rec in records:
            _emit(rec.to_dict())
    else:
        print(_field_header(field))
        print(f"{'d':>4} {'L':>5} {'min':>5} {'at L':>9}  witness")
        for rec in records:
            lo = min(rec.anumbers) if rec.anumbers else "-"
            wit = "-" if rec.witness is None else ",".join(format_coeff(c, rec.m) for c in rec.witness)
            print(f"{rec.d:>4} {rec.L:>5} {lo:>5} {rec.count_at_L:>4}/{rec.trials:<4}  {wit}")
        if args.out:
            print(f"wrote {csv_path} and {json_path}")
    return status


def cmd_paper_example(args) -> int:
    results = paper_example.run(args.golden)
    for name, ok, diff in results:
        if args.json:
            _emit({"check": name, "ok": ok, "diff": diff})
        else:
            print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {diff}" if diff else ""))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ascartier", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def field_opts(sp):
        sp.add_argument("--m", type=int, default=1, help="extension degree of the coefficient field")
        sp.add_argument("--field-seed", type=int, default=0, help="seed for the modulus search")
        sp.add_argument("--modulus", help="explicit monic modulus, comma-separated, lowest first")

    sp = sub.add_parser("anumber", help="a-number and filtration kernels of one curve")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--coeffs", required=True, help="a_0,...,a_d; vectors as c0:c1:...")
    field_opts(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_anumber)

    sp = sub.add_parser("bounds", help="L(d), L_J(d) and index-set sizes")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("certify", help="greedy determinant certificate for M_J")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--j", type=int)
    g.add_argument("--all-j", action="store_true")
    sp.add_argument("--check", type=int, nargs=2, metavar=("Q_DEGREE", "TRIALS"),
                    help="also evaluate det(N) at random points of F_{p^Q_DEGREE}")
    sp.add_argument("--check-seed", type=int, default=0)
    sp.add_argument("--field-seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("scan", help="sample random curves and look for minimal a-numbers")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", required=True, help="degree range: A..B, a single value, or a comma list")
    field_opts(sp)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="CSV output path; a .json sidecar is written next to it")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("paper-example", help="check the p=5, d=18, J=3 example against golden values")
    sp.add_argument("--golden", help="alternative golden JSON file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_paper_example)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
