"""Command line front-end: ``lame apply|decompose|construct|verify|selftest``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import theorems
from .checks import CHECKS, run_check
from .errors import (
    CliffLameError,
    DegenerateFactor,
    ExprSyntaxError,
    InadmissibleParams,
    NotASolution,
    NotOneVector,
    NotOrthonormal,
    NotVectorValued,
    PreconditionViolated,
    VerificationFailed,
)
from .expr import parse_field, parse_scalar
from .fields import MVField
from .operators import STANDARD, StructuralSet, lame_table, params_from
from .selftest import FixtureError, run_selftest

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_ROW = re.compile(r"\[([^\[\]]*)\]")


def parse_structural_set(text: str) -> StructuralSet:
    """Parse ``[[a,b,c],[d,e,f],[g,h,i]]``; entries may be scalar expressions."""
    rows = [[parse_scalar(c) for c in m.group(1).split(",")] for m in _ROW.finditer(text)]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise UsageError(f"structural set must be three coefficient triples, got {text!r}")
    return StructuralSet.from_rows(rows)


def load_field(args) -> MVField:
    if args.field is not None and args.field_json is not None:
        raise UsageError("give either --field or --field-json, not both")
    if args.field is not None:
        return parse_field(args.field)
    if args.field_json is not None:
        path = Path(args.field_json)
        if not path.is_file():
            raise UsageError(f"no such file: {path}")
        return MVField.from_json(json.loads(path.read_text()))
    raise UsageError("an input field is required (--field or --field-json)")


def load_params(args, strict: bool):
    pairs = {"mu": args.mu, "lam": args.lam, "alpha": args.alpha, "beta": args.beta}
    given = {k: parse_scalar(v) for k, v in pairs.items() if v is not None}
    if not given:
        raise UsageError("parameters are required: --alpha/--beta or --mu/--lambda")
    try:
        return params_from(**given, strict=strict)
    except ValueError as exc:
        if isinstance(exc, InadmissibleParams):
            raise
        raise UsageError(str(exc)) from None


def _sets(args) -> tuple[StructuralSet, StructuralSet]:
    phi = parse_structural_set(args.phi) if args.phi else STANDARD
    psi = parse_structural_set(args.psi) if args.psi else STANDARD
    return phi, psi


def _field_json(f: MVField) -> dict:
    return {"expr": str(f), "components": f.to_json()}


def cmd_apply(args, out) -> int:
    p = load_params(args, strict=False)
    phi, psi = _sets(args)
    f = load_field(args)
    table = lame_table(p, phi, psi, f)
    if args.json:
        out(json.dumps(
            {
                "admissible": p.admissible,
                "message": p.message(),
                "results": {k: _field_json(v) for k, v in table.items()},
            },
            indent=2,
        ))
    else:
        out(p.message())
        for k, v in table.items():
            out(f"{k} = {v}")
    return EXIT_OK


def _print_report(report: theorems.Report, args, out) -> int:
    if args.json:
        out(json.dumps(report.to_json(), indent=2))
    else:
        out(report.summary())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_decompose(args, out) -> int:
    p = load_params(args, strict=True)
    phi, psi = _sets(args)
    u = load_field(args)
    if args.theorem == 1:
        dec = theorems.decompose_t1(p, psi, u)
    elif args.theorem == 2:
        dec = theorems.decompose_t2(p, phi, psi, u)
    else:
        dec = theorems.decompose_t3(p, phi, psi, u)
    residuals = {k: v.is_zero() for k, v in dec.residuals(phi, psi).items()}
    if args.json:
        out(json.dumps({**dec.to_json(), "theorem": args.theorem, "residuals_zero": residuals}, indent=2))
    else:
        out(p.message())
        out(f"theorem {args.theorem}: scale factor {dec.scale_factor}")
        out(f"h = {dec.h}    [{dec.h_class}]")
        out(f"i = {dec.i}    [{dec.i_class}]")
        for k, zero in residuals.items():
            out(f"check {k}: {'ok' if zero else 'FAILED'}")
    return EXIT_OK


def cmd_construct(args, out) -> int:
    p = load_params(args, strict=True)
    phi, psi = _sets(args)
    u = load_field(args)
    build = {
        5: ("w", theorems.construct_w_t5),
        6: ("w~", theorems.construct_w_t6),
        7: ("i", theorems.conjugate_infra_t7),
        8: ("h", theorems.conjugate_harmonic_t8),
    }
    label, fn = build[args.theorem]
    result = fn(p, phi, psi, u)
    if args.json:
        out(json.dumps({"theorem": args.theorem, "name": label, "result": _field_json(result)}, indent=2))
    else:
        out(p.message())
        out(f"{label} = {result}")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    name = args.check
    if name in ("lemma2", "prop2", "theorem4") and (args.field or args.field_json):
        p = load_params(args, strict=True)
        phi, psi = _sets(args)
        u = load_field(args)
        if name == "lemma2":
            report = theorems.check_lemma2(p, phi, psi, u)
        elif name == "prop2":
            report = theorems.check_prop2(p, phi, psi, u)
        else:
            if args.h is None or args.i_star is None:
                raise UsageError("theorem4 needs --h and --i-star")
            report = theorems.verify_decomposition_t4(p, phi, psi, u, parse_field(args.h), parse_field(args.i_star))
        return _print_report(report, args, out)
    if name == "theorem4":
        raise UsageError("theorem4 needs --field, --h and --i-star")
    return _print_report(run_check(name, seed=args.seed, cases=args.cases), args, out)


def cmd_selftest(args, out) -> int:
    try:
        ok = run_selftest(args.fixtures, inject_fault=args.inject_fault == "sign-table", out=out)
    except FixtureError as exc:
        out(f"error: {exc}")
        return EXIT_USAGE
    return EXIT_OK if ok else EXIT_FAIL


def _add_common(sp: argparse.ArgumentParser, sets: bool = True) -> None:
    sp.add_argument("--field", help="field expression, e.g. 'x1*x2*e1 + x3*e3'")
    sp.add_argument("--field-json", help="JSON file with 8 polynomial entries in canonical blade order")
    if sets:
        sp.add_argument("--phi", help="structural set phi as [[..],[..],[..]] (default: standard)")
        sp.add_argument("--psi", help="structural set psi as [[..],[..],[..]] (default: standard)")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.add_argument("--mu")
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("apply", help="evaluate all second-order and Lame quantities of a field")
    _add_common(sp)
    sp.set_defaults(run=cmd_apply)

    sp = sub.add_parser("decompose", help="split a solution into harmonic-type and inframonogenic-type parts")
    sp.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    _add_common(sp)
    sp.set_defaults(run=cmd_decompose)

    sp = sub.add_parser("construct", help="build solutions or conjugate partners")
    sp.add_argument("--theorem", type=int, choices=(5, 6, 7, 8), required=True)
    _add_common(sp)
    sp.set_defaults(run=cmd_construct)

    sp = sub.add_parser("verify", help="run a verification check")
    sp.add_argument("--check", required=True, choices=sorted(CHECKS) + ["theorem4"])
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int)
    sp.add_argument("--h", help="candidate h for theorem4")
    sp.add_argument("--i-star", help="candidate i* for theorem4")
    _add_common(sp)
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("selftest", help="run golden fixtures and reduced property suites")
    sp.add_argument("--fixtures", help="alternative fixture file")
    sp.add_argument("--inject-fault", choices=("sign-table",), help="corrupt the product table first")
    sp.set_defaults(run=cmd_selftest)
    return parser


def main(argv: list[str] | None = None, out=print) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    err = lambda msg: print(f"error: {msg}", file=sys.stderr)
    try:
        return args.run(args, out)
    except (UsageError, ExprSyntaxError, InadmissibleParams, NotOneVector, NotOrthonormal, NotVectorValued) as exc:
        err(exc)
        return EXIT_USAGE
    except (NotASolution, PreconditionViolated, VerificationFailed, DegenerateFactor) as exc:
        err(exc)
        return EXIT_FAIL
    except CliffLameError as exc:
        err(exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
