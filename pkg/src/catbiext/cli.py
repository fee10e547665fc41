"""Command-line front end.

Subcommands map one-to-one onto library operations; inputs are JSON files
(or group descriptor strings on the command line) and every invocation
prints a single JSON report. Exit codes: 0 pass/success, 1 mathematical
failure (an equation is violated or a witness is absent), 2 input or
resource error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .groups import CapExceededError, DEFAULT_ENUMERATION_CAP, GroupParseError, parse_group
from .picard import PicardValidationError
from .cohomology import cohomology_group, les_check, picard_cohomology
from .extension import (
    ClassificationError,
    check_k5,
    check_pentagon,
    classify_bicat,
    classify_moncat,
)
from .biextension import (
    BiextensionError,
    check_biext,
    check_cat_biext,
    check_symmetric,
    commutator_biextension,
    diagonal_extension,
    is_alternating,
    is_trivial,
)
from .qcomplex import check_42_report, theta_44_report
from .report import Report
from . import jsonio

PASS, FAIL, ERROR = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="catbiext",
        description="Exact checkers and classifiers for categorical "
        "extensions and biextensions of finite abelian groups.",
    )
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="enumeration cap for exhaustive sweeps")
    p.add_argument("--json", action="store_true",
                   help="compact JSON output (default)")
    p.add_argument("--pretty", action="store_true", help="indented JSON output")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock timing in the report")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", help="invariant factors of H^n(G, A)")
    c.add_argument("G")
    c.add_argument("A")
    c.add_argument("n", type=int)

    c = sub.add_parser("picard-cohomology",
                       help="invariant factors of H^n(G, picard)")
    c.add_argument("G")
    c.add_argument("picard", help="path to a Picard groupoid JSON file")
    c.add_argument("n", type=int)

    c = sub.add_parser("check", help="run a coherence checker on a JSON file")
    c.add_argument("which", choices=[
        "pentagon", "k5", "biext", "cat-biext", "symmetric", "q44", "q42"])
    c.add_argument("file")

    c = sub.add_parser("classify", help="class coordinates in cohomology")
    c.add_argument("which", choices=["moncat", "bicat"])
    c.add_argument("file")

    c = sub.add_parser("biext", help="biextension pipeline operations")
    c.add_argument("which", choices=["from-monoidal", "alternating", "diagonal"])
    c.add_argument("file")

    c = sub.add_parser("les", help="long-exact-sequence exactness checks")
    c.add_argument("G")
    c.add_argument("picard", help="path to a Picard groupoid JSON file")
    c.add_argument("n", type=int)
    return p


def _emit(payload: dict, args) -> None:
    if args.pretty:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _report_exit(rep: Report, args, extra: dict | None = None) -> int:
    payload = rep.to_dict()
    if extra:
        payload.update(extra)
    _emit(payload, args)
    return PASS if rep.ok else FAIL


def _bool_report(ok: bool, witnesses=None) -> Report:
    if ok:
        return Report.passed()
    return Report.failed(witnesses or [("check", ())])


def _run_cohomology(args) -> int:
    G = parse_group(args.G)
    A = parse_group(args.A)
    H = cohomology_group(G, A, args.n, args.cap)
    _emit({"invariants": list(H.invariants.factors), "degree": args.n,
           "group": str(G), "coeff": str(A)}, args)
    return PASS


def _run_picard_cohomology(args) -> int:
    G = parse_group(args.G)
    pic = jsonio.picard_from_json(jsonio.load_file(args.picard))
    H = picard_cohomology(G, pic, args.n, args.cap)
    _emit({"invariants": list(H.invariants.factors), "degree": args.n,
           "group": str(G), "picard": jsonio.picard_to_json(pic)}, args)
    return PASS


def _run_check(args) -> int:
    obj = jsonio.load_file(args.file)
    which = args.which
    if which == "pentagon":
        if isinstance(obj, dict) and obj.get("kind") == "moncat-ext":
            f = jsonio.moncat_ext_from_json(obj).f
        else:
            f = jsonio.cochain_from_json(obj)
        from .cohomology import bar_delta

        d = bar_delta(f)
        rep = _bool_report(d.is_zero,
                           [("pentagon", k) for k, _ in d.values[:8]])
        return _report_exit(rep, args)
    if which == "k5":
        e = jsonio.bicat_ext_from_json(obj)
        from .cohomology import bar_delta

        wit = [("k5-f", k) for k, _ in bar_delta(e.f).values[:8]]
        wit += [("k5-theta", k) for k, _ in bar_delta(e.theta).values[:8]]
        return _report_exit(_bool_report(check_k5(e), wit), args)
    if which == "biext":
        return _report_exit(check_biext(jsonio.biext_from_json(obj), args.cap), args)
    if which == "cat-biext":
        return _report_exit(
            check_cat_biext(jsonio.cat_biext_from_json(obj), args.cap), args)
    if which == "symmetric":
        return _report_exit(
            check_symmetric(jsonio.sym_biext_from_json(obj), args.cap), args)
    if which == "q44":
        return _report_exit(
            theta_44_report(jsonio.theta_matrix_from_json(obj), args.cap), args)
    if which == "q42":
        return _report_exit(
            check_42_report(jsonio.biq_from_json(obj), args.cap), args)
    raise AssertionError(which)


def _run_classify(args) -> int:
    obj = jsonio.load_file(args.file)
    if args.which == "moncat":
        H, coords = classify_moncat(jsonio.moncat_ext_from_json(obj), args.cap)
    else:
        H, coords = classify_bicat(jsonio.bicat_ext_from_json(obj), args.cap)
    _emit({"invariants": list(H.invariants.factors),
           "coordinates": list(coords)}, args)
    return PASS


def _run_biext(args) -> int:
    obj = jsonio.load_file(args.file)
    if args.which == "from-monoidal":
        d = jsonio.monoidal_datum_from_json(obj)
        E = commutator_biextension(d)
        payload = jsonio.biext_to_json(E)
        payload["trivial"] = is_trivial(E, args.cap) is not None
        _emit(payload, args)
        return PASS
    E = jsonio.biext_from_json(obj)
    if args.which == "alternating":
        verdict = is_alternating(E, args.cap)
        return _report_exit(_bool_report(verdict, [("alternating", ())]), args)
    e = diagonal_extension(E, args.cap)
    _emit(jsonio.cochain_to_json(e), args)
    return PASS


def _run_les(args) -> int:
    G = parse_group(args.G)
    pic = jsonio.picard_from_json(jsonio.load_file(args.picard))
    ok = les_check(G, pic, args.n, args.cap)
    return _report_exit(_bool_report(ok, [("les-exactness", ())]), args)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.monotonic()
    try:
        handler = {
            "cohomology": _run_cohomology,
            "picard-cohomology": _run_picard_cohomology,
            "check": _run_check,
            "classify": _run_classify,
            "biext": _run_biext,
            "les": _run_les,
        }[args.command]
        code = handler(args)
    except ClassificationError as exc:
        _emit({"status": "fail", "witnesses": [], "message": str(exc)}, args)
        return FAIL
    except (OSError, json.JSONDecodeError, ValueError, KeyError,
            GroupParseError, PicardValidationError, BiextensionError,
            CapExceededError) as exc:
        print(json.dumps({"status": "error",
                          "message": f"{type(exc).__name__}: {exc}"}),
              file=sys.stdout)
        return ERROR
    if args.timing:
        # Timing is opt-in so default output stays byte-deterministic.
        print(f"elapsed_ms={1000 * (time.monotonic() - start):.1f}",
              file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
