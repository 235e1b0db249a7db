"""Command-line front end.

Subcommands: count, list, basis, series, decompose, verify, identity.
Exit codes: 0 success (or verification match), 1 verification mismatch,
2 argument/validation errors, 3 internal invariant violations.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from pathlib import Path

from .bases import (DecompositionFailureError, Decomposition, decompose,
                    enumerate_basis)
from .objects import (ClassSpec, KindMismatchError, Overpartition, Partition,
                      enumerate_members, refined_gf)
from .series import Series
from .theorems import (VerificationReport, basis_driven_gf, check_identity,
                       closed_form_gf, load_grid, verify)

DEFAULT_MAX_TRUNC = 200


class CliError(Exception):
    """Argument or validation failure (exit code 2)."""


# ---------------------------------------------------------------------------
# output formatting
# ---------------------------------------------------------------------------

def _fmt_over_part(m, over):
    return f"{m}~" if over else str(m)


def emit(fmt, payload):
    """Render a payload as bytes in the requested format."""
    if fmt == "json":
        return (json.dumps(_to_jsonable(payload), indent=1) + "\n").encode()
    if fmt == "plain":
        return (_to_plain(payload) + "\n").encode()
    if fmt == "csv":
        return (_to_csv(payload) + "\n").encode()
    raise CliError(f"unknown format {fmt!r}")


def _to_jsonable(payload):
    if isinstance(payload, (Partition, Overpartition, Series, ClassSpec,
                            Decomposition, VerificationReport)):
        return payload.to_json_dict()
    if isinstance(payload, list):
        return [_to_jsonable(x) for x in payload]
    if isinstance(payload, int):
        return payload
    raise CliError(f"cannot serialize payload of type {type(payload)}")


def _to_plain(payload):
    if isinstance(payload, int):
        return str(payload)
    if isinstance(payload, (Partition, Overpartition)):
        return str(payload)
    if isinstance(payload, list):
        return "\n".join(_to_plain(x) for x in payload) if payload else ""
    if isinstance(payload, Series):
        lines = []
        for (q, marks), coeff in payload.sorted_terms():
            mark_bits = " ".join(
                f"{n}^{e}" for n, e in zip(payload.markers, marks) if e)
            head = f"q^{q}" + (f" {mark_bits}" if mark_bits else "")
            lines.append(f"{head}: {coeff}")
        return "\n".join(lines) if lines else "0"
    if isinstance(payload, Decomposition):
        pad = ",".join(str(p) for p in payload.padding)
        return f"basis {payload.basis} + padding ({pad})"
    if isinstance(payload, VerificationReport):
        head = "MATCH" if payload.matched else "MISMATCH"
        line = f"{head} {_subject_label(payload)} N={payload.trunc} " \
               f"routes={','.join(payload.routes)} " \
               f"elapsed={payload.elapsed * 1000:.1f}ms"
        if payload.first_discrepancy:
            line += f" first_discrepancy={payload.first_discrepancy}"
        return line
    raise CliError(f"cannot render payload of type {type(payload)}")


def _subject_label(report):
    subj = report.subject
    if isinstance(subj, ClassSpec):
        return subj.label()
    if isinstance(subj, dict) and "identity" in subj:
        return subj["identity"]
    return str(subj)


def _to_csv(payload):
    if isinstance(payload, Series):
        header = ",".join(["q", *payload.markers, "coeff"])
        rows = [header]
        for (q, marks), coeff in payload.sorted_terms():
            rows.append(",".join([str(q), *map(str, marks), str(coeff)]))
        return "\n".join(rows)
    if isinstance(payload, list):
        rows = []
        for obj in payload:
            if isinstance(obj, Partition):
                rows.append(",".join(str(p) for p in obj.parts))
            elif isinstance(obj, Overpartition):
                rows.append(",".join(_fmt_over_part(m, o)
                                     for m, o in obj.parts))
            else:
                raise CliError("csv lists hold partitions or overpartitions")
        return "\n".join(rows)
    if isinstance(payload, int):
        return str(payload)
    raise CliError(f"no csv rendering for payload of type {type(payload)}")


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

def _add_spec_flags(p):
    p.add_argument("--class", dest="klass",
                   choices=["P", "Pprime", "R", "Rr", "Fbar", "Lbar",
                            "Fr", "Lr", "Gset"])
    for flag in ("a", "b", "c", "k", "r", "d", "h", "s"):
        p.add_argument(f"--{flag}", type=int)


def _add_common_flags(p):
    p.add_argument("--format", choices=["plain", "json", "csv"],
                   default="plain")
    p.add_argument("--out", type=Path)
    p.add_argument("--max-trunc", type=int, default=DEFAULT_MAX_TRUNC,
                   help="guardrail on truncation order")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sepclass",
        description="Enumerate and verify separable partition and "
                    "overpartition classes.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count", help="count class members of weight n")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("list", help="list class members of weight n")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("basis", help="list the basis elements with m parts")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.add_argument("--parts", type=int, required=True)
    p.add_argument("--max-weight", type=int)

    p = sub.add_parser("series", help="expand a generating function")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--route", choices=["oracle", "basis", "closed"],
                   default="closed")

    p = sub.add_parser("decompose",
                       help="basis-plus-padding split of a member")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.add_argument("--obj", required=True,
                   help="JSON: [5,2] for a partition, or the overpartition "
                        "schema {\"convention\":...,\"parts\":[...]}")

    p = sub.add_parser("verify", help="three-route verification")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.add_argument("--trunc", type=int)
    p.add_argument("--grid", type=Path,
                   help="grid config path (default: built-in grid when no "
                        "--class is given)")
    p.add_argument("--bless", action="store_true",
                   help="write golden coefficient files for the verified "
                        "specs")

    p = sub.add_parser("identity", help="check a supporting identity")
    _add_common_flags(p)
    p.add_argument("--id", dest="identity_id", required=True)
    p.add_argument("--trunc", type=int, required=True)
    for flag in ("a", "b", "c", "k", "r", "d", "h", "s"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--A", type=int)
    p.add_argument("--B", type=int)

    return parser


def _spec_from_args(args):
    if not args.klass:
        raise CliError("--class is required")
    kwargs = {}
    for flag in ("a", "b", "c", "k", "r", "d", "h", "s"):
        value = getattr(args, flag, None)
        if value is not None:
            kwargs[flag] = value
    try:
        return ClassSpec(args.klass, **kwargs)
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc)) from exc


def _check_trunc(args, value):
    if value is None or value < 0:
        raise CliError("a nonnegative truncation order is required")
    if value > args.max_trunc:
        raise CliError(
            f"truncation order {value} exceeds the guardrail "
            f"{args.max_trunc} (raise it with --max-trunc)")


def _parse_obj(text, spec):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"bad --obj JSON: {exc}") from exc
    try:
        if isinstance(data, list):
            return Partition(tuple(data))
        if isinstance(data, dict) and "parts" in data:
            if data.get("convention") or (
                    data["parts"] and isinstance(data["parts"][0], dict)):
                if "convention" not in data and spec.convention:
                    data["convention"] = spec.convention
                return Overpartition.from_json_dict(data)
            return Partition.from_json_dict(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(f"bad --obj value: {exc}") from exc
    raise CliError("--obj must be a parts list or an object schema")


# ---------------------------------------------------------------------------
# golden corpus
# ---------------------------------------------------------------------------

def golden_dir():
    override = os.environ.get("SEPCLASS_GOLDEN_DIR")
    return Path(override) if override else Path("golden")


def golden_path(spec, trunc, root=None):
    root = root or golden_dir()
    return root / spec.kind / spec.label() / f"coeffs_N{trunc}.json"


def write_golden(spec, trunc, series, root=None):
    path = golden_path(spec, trunc, root)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"spec": spec.to_json_dict(), "N": trunc,
               "series": series.to_json_dict()}
    path.write_text(json.dumps(payload, indent=1) + "\n")
    return path


def read_golden(spec, trunc, root=None):
    path = golden_path(spec, trunc, root)
    data = json.loads(path.read_text())
    return Series.from_json_dict(data["series"])


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _cmd_count(args, out):
    spec = _spec_from_args(args)
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    out.write(emit(args.format, len(enumerate_members(spec, args.n))))
    return 0


def _cmd_list(args, out):
    spec = _spec_from_args(args)
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    out.write(emit(args.format, enumerate_members(spec, args.n)))
    return 0


def _cmd_basis(args, out):
    spec = _spec_from_args(args)
    if args.parts < 1:
        raise CliError("--parts must be >= 1")
    elements = enumerate_basis(spec, args.parts, max_weight=args.max_weight)
    out.write(emit(args.format, elements))
    return 0


def _cmd_series(args, out):
    spec = _spec_from_args(args)
    _check_trunc(args, args.trunc)
    route = {"oracle": refined_gf, "basis": basis_driven_gf,
             "closed": closed_form_gf}[args.route]
    out.write(emit(args.format, route(spec, args.trunc)))
    return 0


def _cmd_decompose(args, out):
    spec = _spec_from_args(args)
    obj = _parse_obj(args.obj, spec)
    dec = decompose(spec, obj)
    out.write(emit(args.format, dec))
    return 0


def _cmd_verify(args, out):
    if args.klass:
        spec = _spec_from_args(args)
        trunc = args.trunc if args.trunc is not None else 25
        _check_trunc(args, trunc)
        jobs = [(spec, trunc)]
    else:
        trunc, specs = load_grid(args.grid)
        if args.trunc is not None:
            trunc = args.trunc
        _check_trunc(args, trunc)
        jobs = [(spec, trunc) for spec in specs]
    reports = []
    all_match = True
    for spec, n in jobs:
        report = verify(spec, n)
        reports.append(report)
        all_match = all_match and report.matched
        if args.bless and report.matched:
            write_golden(spec, n, refined_gf(spec, n))
    payload = reports[0] if len(reports) == 1 else reports
    out.write(emit(args.format, payload))
    return 0 if all_match else 1


def _cmd_identity(args, out):
    _check_trunc(args, args.trunc)
    params = {}
    for flag in ("a", "b", "c", "k", "r", "d", "h", "s", "A", "B"):
        value = getattr(args, flag, None)
        if value is not None:
            params[flag] = value
    try:
        report = check_identity(args.identity_id, params, args.trunc)
    except (ValueError, KeyError) as exc:
        raise CliError(str(exc)) from exc
    out.write(emit(args.format, report))
    return 0 if report.matched else 1


_DISPATCH = {
    "count": _cmd_count,
    "list": _cmd_list,
    "basis": _cmd_basis,
    "series": _cmd_series,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "identity": _cmd_identity,
}


def run(argv):
    """Execute one CLI invocation; returns (exit_code, stdout, stderr)."""
    out, err = io.BytesIO(), io.BytesIO()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), out.getvalue(), err.getvalue()
    try:
        code = _DISPATCH[args.subcommand](args, out)
    except CliError as exc:
        err.write(f"error: {exc}\n".encode())
        return 2, out.getvalue(), err.getvalue()
    except (ValueError, KindMismatchError) as exc:
        err.write(f"error: {exc}\n".encode())
        return 2, out.getvalue(), err.getvalue()
    except DecompositionFailureError as exc:
        err.write(f"internal invariant violation: {exc}\n".encode())
        return 3, out.getvalue(), err.getvalue()
    if args.out:
        args.out.write_bytes(out.getvalue())
        out = io.BytesIO()
    return code, out.getvalue(), err.getvalue()


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.buffer.write(out)
    sys.stderr.buffer.write(err)
    sys.stdout.flush()
    sys.stderr.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
