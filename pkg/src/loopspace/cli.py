"""Command-line front end.

Exit codes: 0 on success or a passing check, 1 on a failing check or an
inconclusive certificate, 2 on usage or parse errors.  With ``--json`` the
result is a single stable JSON document on stdout (see
:mod:`loopspace.serialize`); otherwise a human-readable table is printed.
The environment variable ``LOOPSPACE_MAX_DEGREE`` overrides the default
truncation degree (24) wherever ``--max-degree`` is not given explicitly.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__, serialize
from .bott import bott_index, certify_theorem4, certify_theorem5, index_parity, is_nondegenerate
from .dsl import ParseResult, parse_path, document_text
from .gca.algebra import DgaModel, GcaError
from .gca.cohomology import (
    DEFAULT_MAX_DEGREE,
    RingPresentation,
    cochain_complex,
    cohomology,
    verify_ring_presentation,
)
from .spaceforms import (
    GysinInput,
    SpaceFormSpec,
    euler_action_matrices,
    euler_class,
    gysin_check,
    theorem1_table,
    theorem2_table,
    theorem3_model,
)

ENV_MAX_DEGREE = "LOOPSPACE_MAX_DEGREE"


class UsageError(Exception):
    pass


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopspace",
        description="Exact computations on free-loop spaces of spherical space forms.",
    )
    parser.add_argument("--version", action="version", version=f"loopspace {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", help="Betti table of a DGA model")
    p.add_argument("--max-degree", type=_nonneg_int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("file")

    p = sub.add_parser("ring-verify", help="verify a Q[w,z]/(w^a) cohomology presentation")
    p.add_argument("--deg-w", type=_positive_int, default=2)
    p.add_argument("--deg-z", type=_positive_int, required=True)
    p.add_argument("--nilpotency", type=_positive_int, required=True)
    p.add_argument("--max-degree", type=_nonneg_int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("file")

    p = sub.add_parser("homotopy", help="rational homotopy table of a loop component")
    p.add_argument("--which", choices=("lambda", "quotient"), required=True)
    p.add_argument("--max-degree", type=_nonneg_int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("file")

    p = sub.add_parser("spaceform-model", help="emit the minimal model of the circle quotient")
    p.add_argument("--json", action="store_true")
    p.add_argument("file")

    p = sub.add_parser("gysin-check", help="circle-bundle rank identity between two models")
    p.add_argument("--max-degree", type=_nonneg_int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("base_file")
    p.add_argument("total_file")

    p = sub.add_parser("bott", help="index iteration of a step function")
    bott_sub = p.add_subparsers(dest="bott_command", required=True)
    q = bott_sub.add_parser("index", help="index of the m-th iterate")
    q.add_argument("--iterate", type=_positive_int, required=True)
    q.add_argument("--json", action="store_true")
    q.add_argument("file")

    p = sub.add_parser("certify", help="contradiction-search certificates")
    cert_sub = p.add_subparsers(dest="certify_command", required=True)
    q = cert_sub.add_parser("rp2", help="two-geodesic certificate for the projective plane")
    q.add_argument("--grid", type=_positive_int, required=True)
    q.add_argument("--values", type=_nonneg_int, required=True)
    q.add_argument("--cutoff", type=_positive_int, required=True)
    q.add_argument("--json", action="store_true")
    q = cert_sub.add_parser("theorem5", help="even-parity certificate for odd space forms")
    q.add_argument("--k", type=_positive_int, required=True)
    q.add_argument("--iterates", type=_nonneg_int, required=True)
    q.add_argument("--json", action="store_true")
    q.add_argument("spaceform_file")
    q.add_argument("bott_file")

    return parser


def _resolve_max_degree(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_MAX_DEGREE)
    if env is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(env)
    except ValueError:
        raise UsageError(f"{ENV_MAX_DEGREE} must be an integer, got {env!r}")
    if value < 0:
        raise UsageError(f"{ENV_MAX_DEGREE} must be >= 0, got {value}")
    return value


def _load(path: str, kind: str):
    try:
        result: ParseResult = parse_path(path, kind=kind)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}")
    for diag in result.diagnostics:
        print(diag.format(path), file=sys.stderr)
    if not result.ok:
        raise UsageError(f"{path}: parse failed")
    return result.value


def _emit(args, kind: str, input_echo, result_json, table: str) -> None:
    if args.json:
        print(serialize.dumps(serialize.payload(kind, input_echo, result_json)))
    else:
        print(table)


def _pi1_text(order: int) -> str:
    if order == 0:
        return "not computed"
    if order == 1:
        return "0 (trivial)"
    return f"Z_{order}"


# -- commands ----------------------------------------------------------------


def cmd_cohomology(args) -> int:
    max_degree = _resolve_max_degree(args.max_degree)
    model: DgaModel = _load(args.file, "dga")
    table = cohomology(model, max_degree, with_representatives=True)
    lines = ["degree  dim  representatives"]
    for d, (n, reps) in enumerate(zip(table.dims, table.representatives)):
        shown = ", ".join(model.format_element(r) for r in reps)
        lines.append(f"{d:>6}  {n:>3}  {shown}")
    lines.append(f"(truncated at degree {max_degree})")
    _emit(args, "cohomology", document_text(model), serialize.betti_json(table), "\n".join(lines))
    return 0


def cmd_ring_verify(args) -> int:
    max_degree = _resolve_max_degree(args.max_degree)
    model: DgaModel = _load(args.file, "dga")
    presentation = RingPresentation(args.deg_w, args.deg_z, args.nilpotency)
    report = verify_ring_presentation(model, presentation, max_degree)
    table = report.format() + f"\n(truncated at degree {max_degree})"
    _emit(args, "ring-verify", document_text(model), serialize.ring_report_json(report), table)
    return 0 if report.passed else 1


def cmd_homotopy(args) -> int:
    max_degree = _resolve_max_degree(args.max_degree)
    spec: SpaceFormSpec = _load(args.file, "spaceform")
    if args.which == "lambda":
        table = theorem1_table(spec, max_degree)
        what = "free-loop component"
    else:
        table = theorem2_table(spec, max_degree)
        what = "SO(2) homotopy quotient"
    lines = [f"rational homotopy of the {what} (S^{spec.n}, r={spec.r}, ord={spec.element_order})"]
    for d, v in table.dims:
        lines.append(f"pi_{d}  Q" + (f"^{v}" if v > 1 else ""))
    lines.append(f"pi_1  {_pi1_text(table.pi1)}")
    lines.append(f"(truncated at degree {max_degree})")
    _emit(args, "homotopy", document_text(spec), serialize.homotopy_json(table), "\n".join(lines))
    return 0


def cmd_spaceform_model(args) -> int:
    spec: SpaceFormSpec = _load(args.file, "spaceform")
    model = theorem3_model(spec)
    text = document_text(model)
    _emit(args, "spaceform-model", document_text(spec), serialize.model_json(model), text.rstrip("\n"))
    return 0


def cmd_gysin_check(args) -> int:
    max_degree = _resolve_max_degree(args.max_degree)
    base_model: DgaModel = _load(args.base_file, "dga")
    total_model: DgaModel = _load(args.total_file, "dga")
    try:
        euler = euler_class(base_model)
    except ValueError as exc:
        raise UsageError(str(exc))
    data = cochain_complex(base_model, max_degree)
    inputs = GysinInput(
        base=data.betti(),
        euler=tuple(euler_action_matrices(data, euler)),
        total=cohomology(total_model, max_degree),
    )
    report = gysin_check(inputs)
    echo = {"base": document_text(base_model), "total": document_text(total_model)}
    _emit(args, "gysin-check", echo, serialize.gysin_report_json(report), report.format())
    return 0 if report.passed else 1


def cmd_bott_index(args) -> int:
    f = _load(args.file, "bott")
    m = args.iterate
    value = bott_index(f, m)
    result = {
        "iterate": m,
        "index": value,
        "parity": "odd" if index_parity(f, m) else "even",
        "nondegenerate": is_nondegenerate(f, m),
    }
    table = (
        f"ind gamma^{m} = {value}\n"
        f"parity: {result['parity']}\n"
        f"nondegenerate at m={m}: {'yes' if result['nondegenerate'] else 'no'}"
    )
    _emit(args, "bott-index", document_text(f), result, table)
    return 0


def _certificate_table(cert) -> str:
    lines = [f"certificate: {cert.kind}", f"verdict: {cert.verdict}"]
    for key, value in sorted(cert.parameters.items()):
        lines.append(f"  {key} = {serialize.jsonable(value)}")
    lines.append(f"survivors: {len(cert.survivors)}")
    for s in cert.survivors:
        lines.append(f"  {serialize.jsonable(s)}")
    return "\n".join(lines)


def cmd_certify_rp2(args) -> int:
    try:
        cert = certify_theorem4(args.grid, args.values, args.cutoff)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(args, "certificate", None, serialize.certificate_json(cert), _certificate_table(cert))
    return 0 if cert.established else 1


def cmd_certify_theorem5(args) -> int:
    spec: SpaceFormSpec = _load(args.spaceform_file, "spaceform")
    f = _load(args.bott_file, "bott")
    try:
        cert = certify_theorem5(spec, True, args.k, f, args.iterates)
    except ValueError as exc:
        raise UsageError(str(exc))
    echo = {"spaceform": document_text(spec), "bott": document_text(f)}
    _emit(args, "certificate", echo, serialize.certificate_json(cert), _certificate_table(cert))
    return 0 if cert.established else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "cohomology":
            return cmd_cohomology(args)
        if args.command == "ring-verify":
            return cmd_ring_verify(args)
        if args.command == "homotopy":
            return cmd_homotopy(args)
        if args.command == "spaceform-model":
            return cmd_spaceform_model(args)
        if args.command == "gysin-check":
            return cmd_gysin_check(args)
        if args.command == "bott":
            return cmd_bott_index(args)
        if args.command == "certify":
            if args.certify_command == "rp2":
                return cmd_certify_rp2(args)
            return cmd_certify_theorem5(args)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, GcaError) as exc:
        print(f"loopspace: error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
