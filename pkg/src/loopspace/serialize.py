"""Stable JSON forms for every result type.

Rationals serialize as lowest-terms strings (``"p/q"``, or ``"p"`` for
integers), never as floats.  Keys are emitted sorted, so identical inputs
produce byte-identical output.  The top-level document is::

    {"kind": ..., "input": ..., "result": ..., "version": ...}

where ``input`` echoes the normalised source text of the parsed input
(an object with one entry per file for two-input commands, null for
commands that take only flags).
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .bott import BottFunction, Certificate, IndexSequence
from .gca.algebra import DgaModel
from .gca.cohomology import BettiTable, ModelReport, RingReport
from .spaceforms import GysinReport, HomotopyTable, SpaceFormSpec


def jsonable(value):
    """Recursively convert a value into JSON-encodable data."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, BottFunction):
        return bott_json(value)
    if isinstance(value, DgaModel):
        return model_json(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def model_json(model: DgaModel) -> dict:
    differentials = {}
    for g in model.generators:
        dg = model.differential_of(g.name)
        if dg.is_zero:
            continue
        differentials[g.name] = [
            {"coeff": str(c), "monomial": [[n, e] for n, e in sorted(model.exponent_map(m).items())]}
            for m, c in dg.sorted_terms()
        ]
    return {
        "name": model.name,
        "generators": [{"name": g.name, "degree": g.degree} for g in model.generators],
        "differentials": differentials,
    }


def betti_json(table: BettiTable) -> dict:
    reps = None
    if table.representatives is not None:
        reps = [
            [r.model.format_element(r) for r in degree_reps]
            for degree_reps in table.representatives
        ]
    return {"max_degree": table.max_degree, "dims": list(table.dims), "representatives": reps}


def homotopy_json(table: HomotopyTable) -> dict:
    return {"dims": [[d, v] for d, v in table.dims], "pi1": table.pi1}


def spaceform_json(spec: SpaceFormSpec) -> dict:
    return {"n": spec.n, "r": spec.r, "ord": spec.element_order, "parity": spec.parity}


def bott_json(f: BottFunction) -> dict:
    return {
        "disc": [str(t) for t in f.discontinuities],
        "arcs": list(f.arc_values),
        "points": list(f.point_values),
    }


def index_sequence_json(seq: IndexSequence) -> dict:
    return {"entries": [[m, i] for m, i in seq.entries]}


def model_report_json(report: ModelReport) -> dict:
    return {
        "ok": report.ok,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks
        ],
    }


def ring_report_json(report: RingReport) -> dict:
    return {
        "passed": report.passed,
        "presentation": {
            "deg_w": report.presentation.deg_w,
            "deg_z": report.presentation.deg_z,
            "nilpotency": report.presentation.nilpotency,
        },
        "max_degree": report.max_degree,
        "expected_dims": list(report.expected_dims),
        "actual_dims": list(report.actual_dims),
        "first_mismatch": report.first_mismatch,
        "w": None if report.w is None else report.w.model.format_element(report.w),
        "z": None if report.z is None else report.z.model.format_element(report.z),
        "messages": list(report.messages),
    }


def gysin_report_json(report: GysinReport) -> dict:
    return {
        "passed": report.passed,
        "checked_up_to": report.checked_up_to,
        "first_failure": report.first_failure,
        "detail": report.detail,
        "conventions": report.conventions,
    }


def certificate_json(cert: Certificate) -> dict:
    return {
        "kind": cert.kind,
        "parameters": jsonable(cert.parameters),
        "survivors": jsonable(cert.survivors),
        "verdict": cert.verdict,
        "transcript": jsonable(cert.transcript),
    }


def payload(kind: str, input_echo, result) -> dict:
    return {"kind": kind, "input": input_echo, "result": result, "version": __version__}


def dumps(document: dict) -> str:
    return json.dumps(document, sort_keys=True, ensure_ascii=False)
