"""Command-line driver: ``arboreal <command> ...``.

Exit status: 0 for a definitive verdict or a successful construction, 2 when
the search budget ran out without a verdict, 1 for input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import List, Optional

from .certify import (
    HEIGHT_AT_MOST_1,
    UNKNOWN,
    Certificate,
    SearchBudget,
    analyze,
    scale_to_A2,
)
from .cyclo import classify_cyclotomic
from .obstruct import (
    modp_factor_degrees,
    modp_obstruction_record,
    no_interlacing_obstruction,
    zeta48_three_adic_report,
)
from .poly import IntPolynomial, parse_polynomial
from .spectrum import squared_spectrum, squares_min_poly
from .startree import (
    build_tree,
    char_poly_bruteforce,
    char_poly_closed_form,
    char_poly_factored,
    export_tree,
    search_min_tree,
    tree_summary,
)
from . import gf

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNKNOWN = 2


class InputError(Exception):
    pass


@dataclass
class Output:
    text: str
    obj: dict
    status: int = EXIT_OK


# ---------------------------------------------------------------------------
# argument helpers


def _positive(value: str) -> int:
    n = int(value)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _positive_float(value: str) -> float:
    x = float(value)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    p.add_argument("--timing", action="store_true", help="include wall time in the output")


def _poly_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--poly", help='polynomial expression, e.g. "x^2 - 3x + 1"')
    g.add_argument("--coeffs", help="comma-separated coefficients, constant term first")
    g.add_argument("--file", help="file holding the polynomial text")
    p.add_argument("--kind", choices=("lambda", "lambda-squared"), default="lambda",
                   help="whether the input is the minimal polynomial of lambda or of lambda^2")


def _budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-k", type=_positive, default=None)
    p.add_argument("--max-sets", type=_positive, default=5000)
    p.add_argument("--max-mult", type=_positive, default=50)
    p.add_argument("--time-limit", type=_positive_float, default=None, metavar="S")
    p.add_argument("--seed", type=int, default=0, help="reserved; all strategies are deterministic")


def _branch_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", help='branch map "k:a_k,...", e.g. "0:2,4:4,8:2"')
    g.add_argument("--cert", help="certificate JSON file (as printed by certify --json)")


def read_polynomial(args) -> IntPolynomial:
    if args.poly is not None:
        text = args.poly
    elif args.coeffs is not None:
        text = args.coeffs
        if "," not in text:
            text = text.strip()
    else:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.file}: {e.strerror}") from None
    try:
        return parse_polynomial(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def lambda_squared_poly(args) -> IntPolynomial:
    p = read_polynomial(args)
    if p.degree < 1 or not p.is_monic():
        raise InputError("input polynomial must be monic of positive degree")
    return squares_min_poly(p) if args.kind == "lambda" else p


def read_branches(args) -> dict:
    if args.a is not None:
        out = {}
        for part in args.a.split(","):
            if not part.strip():
                continue
            try:
                k, m = part.split(":")
                out[int(k)] = out.get(int(k), 0) + int(m)
            except ValueError:
                raise InputError(f"bad branch entry {part!r}; expected k:a_k") from None
        return out
    return _load_cert_json(args.cert)["a"]


def _load_cert_json(path: str) -> dict:
    try:
        if path == "-":
            obj = json.load(sys.stdin)
        else:
            with open(path) as fh:
                obj = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e}") from None
    if "certificate" in obj:
        obj = obj["certificate"]
    if "a" not in obj or "F" not in obj:
        raise InputError("certificate JSON needs keys 'F' and 'a'")
    return obj


def _budget(args) -> SearchBudget:
    return SearchBudget(max_k=args.max_k, max_sets=args.max_sets,
                        max_multiplier=args.max_mult, time_limit=args.time_limit)


# ---------------------------------------------------------------------------
# commands


def _verdict_status(verdict: str) -> int:
    return EXIT_UNKNOWN if verdict == UNKNOWN else EXIT_OK


def cmd_analyze(args) -> Output:
    p = read_polynomial(args)
    kind = "lambda" if args.kind == "lambda" else "lambda_squared"
    try:
        rep = analyze(p, kind, _budget(args))
    except ValueError as e:
        raise InputError(str(e)) from None
    obj = rep.to_json()
    lines = [f"F = {rep.F}", f"verdict: {rep.verdict}"]
    if rep.method:
        lines.append(f"method: {rep.method}")
    lines.append(f"irreducibility: {rep.irreducibility}")
    if "roots_of_F" in obj:
        lines.append("roots of F: " + ", ".join(obj["roots_of_F"]))
        lines.append(f"left interlacing set: {obj['left_interlacing']}")
        lines.append(f"right interlacing set: {obj['right_interlacing']}")
    if rep.obstruction is not None:
        lines.append(f"obstruction: {rep.obstruction.detail}")
    if rep.certificate is not None:
        c = rep.certificate
        if c.combination:
            lines.append("combination: " + " + ".join(f"{m}*({v})" for v, m in c.combination) + " = 1")
        lines.append(f"certificate: {c.a}")
        lines.append(f"verified: {c.verified}")
        lines.append(f"witness tree vertices: {c.vertex_count}")
    if rep.verdict == UNKNOWN:
        d = rep.diagnostics
        lines.append(f"no verdict: {d.get('budget')}; gcd trajectory {d.get('gcd_trajectory')}")
    return Output("\n".join(lines), obj, _verdict_status(rep.verdict))


def cmd_certify(args) -> Output:
    out = cmd_analyze(args)
    cert = out.obj.get("certificate")
    if cert is None:
        verdict = out.obj["verdict"]
        text = f"no certificate: verdict {verdict}"
        if verdict == HEIGHT_AT_MOST_1:
            text += " (lambda^2 is an integer)"
        return Output(text, {"verdict": verdict, "certificate": None}, out.status)
    text = json.dumps(cert, sort_keys=True)
    return Output(text, cert, EXIT_OK)


def cmd_verify_cert(args) -> Output:
    obj = _load_cert_json(args.cert)
    try:
        c = Certificate.from_json(obj, verify=True)
    except ValueError as e:
        raise InputError(str(e)) from None
    text = f"certificate for F = {c.F}: {'valid' if c.verified else 'INVALID'}"
    if c.verified:
        text += f" ({c.vertex_count} vertices)"
    return Output(text, {"F": str(c.F), "verified": c.verified, "vertex_count": c.vertex_count},
                  EXIT_OK if c.verified else EXIT_INPUT)


def cmd_obstruct(args) -> Output:
    F = lambda_squared_poly(args)
    if F.degree < 2:
        return Output(f"F = {F}: lambda^2 is an integer, nothing to obstruct",
                      {"F": str(F), "obstructions": []})
    try:
        spec = squared_spectrum(F)
    except ValueError as e:
        raise InputError(str(e)) from None
    found = [o for o in (no_interlacing_obstruction(spec), modp_obstruction_record(F)) if o]
    table = {}
    for p in gf.primes_below(max(3, F.degree)):
        if F.lc % p:
            table[str(p)] = modp_factor_degrees(F, p)
    lines = [f"F = {F}"]
    lines += [f"mod {p}: factor degrees {d}" for p, d in table.items()]
    lines += [f"obstruction: {o.detail}" for o in found] or ["no obstruction found"]
    obj = {"F": str(F), "factor_degrees": table, "obstructions": [o.to_json() for o in found]}
    return Output("\n".join(lines), obj)


def cmd_scale(args) -> Output:
    F = lambda_squared_poly(args)
    try:
        r = scale_to_A2(F, _budget(args))
    except ValueError as e:
        raise InputError(str(e)) from None
    obj = {"D": r.D, "scaled_F": str(r.scaledF), "method": r.method,
           "certificate": r.certificate.to_json(), "vertex_count": r.certificate.vertex_count}
    if r.ks:
        obj["support"] = list(r.ks)
        obj["weights"] = [str(x) for x in r.v]
    text = "\n".join([
        f"D = {r.D}",
        f"scaled F = {r.scaledF}",
        f"certificate: {r.certificate.a}",
        f"witness tree vertices: {r.certificate.vertex_count}",
    ])
    return Output(text, obj)


def cmd_cyclo(args) -> Output:
    ms = [args.m] if args.m is not None else list(range(args.range[0], args.range[1] + 1))
    reports = [classify_cyclotomic(m, SearchBudget(time_limit=args.time_limit)) for m in ms]
    header = f"{'m':>4} {'n':>3}  {'verdict':<17} summary"
    rows = [f"{r.m:>4} {r.n:>3}  {r.verdict:<17} {r.summary()}" for r in reports]
    text = "\n".join([header] + rows)
    if len(reports) == 1:
        obj = reports[0].to_json()
    else:
        obj = {"rows": [r.to_json() for r in reports]}
    status = EXIT_UNKNOWN if any(r.verdict == UNKNOWN for r in reports) else EXIT_OK
    return Output(text, obj, status)


def cmd_zeta48(args) -> Output:
    r = zeta48_three_adic_report(args.k_max)
    obj = r.to_json()
    if not args.full:
        obj.pop("bk0")
    text = "\n".join([
        f"y0 = {r.y0}",
        f"det M = {r.detM}",
        f"F(k) = 1 mod 3 for k = 0..{r.k_max}: {r.fk_mod3_all_one}",
        f"b_k^(0) 3-integral for k = 4..{r.k_max}: {r.all_three_integral}",
    ])
    return Output(text, obj)


def cmd_tree_build(args) -> Output:
    try:
        t = build_tree(read_branches(args))
    except ValueError as e:
        raise InputError(str(e)) from None
    obj = tree_summary(t)
    text = f"{t.label()}: {t.vertex_count} vertices, root degree {t.root_degree}, height {t.height}"
    return Output(text, obj)


def cmd_tree_charpoly(args) -> Output:
    try:
        t = build_tree(read_branches(args))
    except ValueError as e:
        raise InputError(str(e)) from None
    fac = char_poly_factored(t)
    obj = {"tree": tree_summary(t), "factored": str(fac)}
    lines = [f"{t.label()}", f"factored: {fac}"]
    if args.expand or args.bruteforce:
        poly = char_poly_closed_form(t)
        obj["charpoly"] = str(poly)
        lines.append(f"expanded: {poly}")
    if args.bruteforce:
        try:
            bf = char_poly_bruteforce(t, args.max_vertices)
        except ValueError as e:
            raise InputError(str(e)) from None
        obj["bruteforce_agrees"] = bf == char_poly_closed_form(t)
        lines.append(f"brute-force determinant agrees: {obj['bruteforce_agrees']}")
    return Output("\n".join(lines), obj)


def cmd_tree_search(args) -> Output:
    F = lambda_squared_poly(args)
    try:
        res = search_min_tree(F, args.max_vertices, args.max_k, args.excess)
    except ValueError as e:
        raise InputError(str(e)) from None
    if res is None:
        text = f"no witness tree within {args.max_vertices} vertices, keys <= {args.max_k}"
        return Output(text, {"F": str(F), "found": False})
    cert, t = res
    obj = {"F": str(F), "found": True, "certificate": cert.to_json(), "tree": tree_summary(t)}
    return Output(f"{t.label()}: {t.vertex_count} vertices, verified {cert.verified}", obj)


def cmd_tree_export(args) -> Output:
    try:
        t = build_tree(read_branches(args))
        body = export_tree(t, args.format, args.cap)
    except ValueError as e:
        raise InputError(str(e)) from None
    return Output(body.rstrip("\n"), {"format": args.format, "tree": tree_summary(t), "text": body})


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arboreal", description="Height-2 tree eigenvalue toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="three-valued verdict for lambda")
    _poly_source(p); _budget_flags(p); _common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="print a certificate when lambda is certifiable")
    _poly_source(p); _budget_flags(p); _common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-cert", help="check a certificate JSON file ('-' for stdin)")
    p.add_argument("cert")
    _common(p)
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("obstruct", help="list refutation evidence")
    _poly_source(p); _common(p)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("scale", help="least certified D with D*lambda of height <= 2")
    _poly_source(p); _budget_flags(p); _common(p)
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("cyclo", help="classify 2cos(2pi/m)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=_positive)
    g.add_argument("--range", type=_positive, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--time-limit", type=_positive_float, default=None, metavar="S")
    _common(p)
    p.set_defaults(func=cmd_cyclo)

    p = sub.add_parser("zeta48", help="three-adic computation for 2cos(2pi/48)")
    p.add_argument("--k-max", type=int, default=100)
    p.add_argument("--full", action="store_true", help="include every b_k^(0) value")
    _common(p)
    p.set_defaults(func=cmd_zeta48)

    tree = sub.add_parser("tree", help="witness tree utilities")
    tsub = tree.add_subparsers(dest="tree_command", required=True)

    p = tsub.add_parser("build")
    _branch_source(p); _common(p)
    p.set_defaults(func=cmd_tree_build)

    p = tsub.add_parser("charpoly")
    _branch_source(p)
    p.add_argument("--expand", action="store_true", help="also print the expanded polynomial")
    p.add_argument("--bruteforce", action="store_true", help="cross-check with a determinant")
    p.add_argument("--max-vertices", type=_positive, default=64)
    _common(p)
    p.set_defaults(func=cmd_tree_charpoly)

    p = tsub.add_parser("search")
    _poly_source(p)
    p.add_argument("--max-vertices", type=_positive, default=200)
    p.add_argument("--max-k", type=_positive, default=30)
    p.add_argument("--excess", type=int, default=1, help="extra support keys beyond deg F")
    _common(p)
    p.set_defaults(func=cmd_tree_search)

    p = tsub.add_parser("export")
    _branch_source(p)
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.add_argument("--cap", type=_positive, default=10 ** 7)
    _common(p)
    p.set_defaults(func=cmd_tree_export)
    return parser


def run_command(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, which would read as "unknown"
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    start = time.monotonic()
    try:
        out = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        obj = dict(out.obj)
        if args.timing:
            obj["elapsed_seconds"] = round(time.monotonic() - start, 3)
        rendered = json.dumps(obj, indent=2, sort_keys=True)
    else:
        rendered = out.text
        if args.timing:
            rendered += f"\nelapsed: {time.monotonic() - start:.3f} s"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rendered + "\n")
    else:
        print(rendered)
    return out.status


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
