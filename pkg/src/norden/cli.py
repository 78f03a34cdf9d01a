"""Command-line interface.

Subcommands::

    norden validate <model>                 check a model file
    norden report <model>                   full geometry report
    norden identities <model>               identity verdicts only
    norden family --n N --lambda a,b,...    generate a family member
    norden section <model> --x .. --y ..    classify a 2-plane

``--json`` switches output to JSON, ``--quiet`` suppresses output and
leaves only the exit code.  Exit codes: 0 = success / all applicable
checks pass; 1 = validation or identity failure; 2 = input error
(unreadable file, parse error, bad parameters).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classify import verify_identities
from .curvature import classify_section, riemann, sectional_curvature
from .connection import levi_civita
from .errors import (
    BadParams,
    DegenerateSection,
    LinearlyDependent,
    NordenError,
    ParseError,
    ValidationError,
)
from .family import FamilyParams, generate_family
from .modelfile import parse_model, serialize_model
from .report import (
    all_identities_ok,
    report_to_json,
    report_to_text,
    run_report,
)
from .structures import AcnModel, validate_structure
from .tensors import as_scalar, format_scalar

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _CliFailure(EXIT_INPUT, f"cannot read {path}: {exc}")


def _load_model(path: str, require_valid: bool = True) -> AcnModel:
    text = _read_file(path)
    try:
        return parse_model(text, require_valid=require_valid)
    except ParseError as exc:
        raise _CliFailure(EXIT_INPUT, f"{path}: {exc}")


def _parse_vector(text: str, what: str) -> list[Fraction]:
    try:
        return [as_scalar(tok) for tok in text.split(",")]
    except (ValueError, TypeError) as exc:
        raise _CliFailure(EXIT_INPUT, f"bad {what} vector {text!r}: {exc}")


def _emit(args, text_output: str, json_obj) -> None:
    if args.quiet:
        return
    if getattr(args, "json", False):
        print(json.dumps(json_obj, sort_keys=True, indent=1))
    else:
        print(text_output, end="" if text_output.endswith("\n") else "\n")


def _violations_json(report) -> list[dict]:
    return [
        {
            "rule": v.rule,
            "where": list(v.where) if v.where is not None else None,
            "detail": v.detail,
        }
        for v in report.violations
    ]


def _cmd_validate(args) -> int:
    model = _load_model(args.model, require_valid=False)
    report = validate_structure(model)
    _emit(
        args,
        str(report),
        {"valid": report.ok, "violations": _violations_json(report)},
    )
    return EXIT_OK if report.ok else EXIT_FAIL


def _run_validated(args) -> AcnModel:
    try:
        return _load_model(args.model, require_valid=True)
    except ValidationError as exc:
        if not args.quiet:
            if getattr(args, "json", False):
                print(json.dumps(
                    {"valid": False, "violations": _violations_json(exc.report)},
                    sort_keys=True, indent=1,
                ))
            else:
                print(str(exc.report), file=sys.stderr)
        raise _CliFailure(EXIT_FAIL, "")


def _cmd_report(args) -> int:
    model = _run_validated(args)
    report = run_report(model)
    _emit(args, report_to_text(report), json.loads(report_to_json(report)))
    return EXIT_OK if all_identities_ok(report) else EXIT_FAIL


def _cmd_identities(args) -> int:
    model = _run_validated(args)
    verdicts = verify_identities(model)
    lines = []
    obj = {}
    ok = True
    for name, v in verdicts.items():
        if not v.applicable:
            status = " n/a"
        elif v.passed:
            status = "pass"
        else:
            status = "FAIL"
            ok = False
        lines.append(f"[{status}] {name}")
        obj[name] = {
            "applicable": v.applicable,
            "passed": v.passed,
            "detail": v.detail,
        }
    _emit(args, "\n".join(lines) + "\n", obj)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_family(args) -> int:
    try:
        lam = [as_scalar(tok) for tok in args.lam.split(",")]
        params = FamilyParams(n=args.n, lam=tuple(lam))
    except (BadParams, ValueError, TypeError) as exc:
        raise _CliFailure(EXIT_INPUT, f"bad family parameters: {exc}")
    model = generate_family(params)
    fmt = "json" if args.json else "text"
    serialized = serialize_model(model, fmt=fmt)
    if args.emit_model:
        try:
            with open(args.emit_model, "w", encoding="utf-8") as fh:
                fh.write(serialized)
        except OSError as exc:
            raise _CliFailure(EXIT_INPUT, f"cannot write {args.emit_model}: {exc}")
        if not args.quiet:
            print(f"wrote {args.emit_model}")
    elif not args.quiet:
        print(serialized, end="")
    return EXIT_OK


def _cmd_section(args) -> int:
    model = _run_validated(args)
    x = _parse_vector(args.x, "x")
    y = _parse_vector(args.y, "y")
    try:
        section = classify_section(model, x, y)
    except LinearlyDependent as exc:
        raise _CliFailure(EXIT_INPUT, str(exc))
    conn = levi_civita(model)
    pack = riemann(model, conn)
    note = ""
    try:
        k = sectional_curvature(model, pack, x, y)
    except DegenerateSection:
        k = None
        note = "restricted metric is degenerate; no sectional curvature"
    lines = [
        f"kind: {section.kind}",
        f"contains_xi: {section.contains_xi}",
        f"phi_invariant: {section.phi_invariant}",
        f"totally_real: {section.totally_real}",
        f"sectional_curvature: {format_scalar(k) if k is not None else 'undefined'}",
    ]
    if note:
        lines.append(f"note: {note}")
    obj = {
        "kind": section.kind,
        "contains_xi": section.contains_xi,
        "phi_invariant": section.phi_invariant,
        "totally_real": section.totally_real,
        "sectional_curvature": format_scalar(k) if k is not None else None,
        "note": note or None,
    }
    _emit(args, "\n".join(lines) + "\n", obj)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="norden",
        description="Exact tensor calculus for left-invariant almost contact "
                    "structures with Norden metric.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p, with_json=True):
        if with_json:
            p.add_argument("--json", action="store_true",
                           help="emit JSON instead of text")
        p.add_argument("--quiet", action="store_true",
                       help="suppress output; use the exit code only")

    p = sub.add_parser("validate", help="validate a model file")
    p.add_argument("model", help="path to a model file (text or JSON)")
    add_output_flags(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("report", help="full geometry report for a model file")
    p.add_argument("model", help="path to a model file (text or JSON)")
    add_output_flags(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("identities", help="verify exact identities on a model")
    p.add_argument("model", help="path to a model file (text or JSON)")
    add_output_flags(p)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("family", help="generate a member of the built-in family")
    p.add_argument("--n", type=int, required=True, help="half-dimension (dim = 2n+1)")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="comma-separated rational coefficients, e.g. 2,3 or 1/2,-3")
    p.add_argument("--emit-model", metavar="PATH",
                   help="write the model file here instead of stdout")
    add_output_flags(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("section", help="classify a 2-plane and compute its curvature")
    p.add_argument("model", help="path to a model file (text or JSON)")
    p.add_argument("--x", required=True, help="first spanning vector, e.g. 1,0,0")
    p.add_argument("--y", required=True, help="second spanning vector, e.g. 0,1,0")
    add_output_flags(p)
    p.set_defaults(func=_cmd_section)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliFailure as exc:
        if exc.message and not args.quiet:
            print(exc.message, file=sys.stderr)
        return exc.code
    except NordenError as exc:
        if not args.quiet:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
