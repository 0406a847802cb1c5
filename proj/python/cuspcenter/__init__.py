"""Python access to the cuspcenter verification pipeline.

Reports are the same envelopes the command-line tool prints. Exact values
are kept exact: rationals come back as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from ._core import (
    InvalidInput,
    ParameterSet,
    VerificationFailure,
    __version__,
    reduce_parameters,
    validate_parameters,
)
from . import _core

__all__ = [
    "InvalidInput",
    "ParameterSet",
    "VerificationFailure",
    "__version__",
    "census",
    "class_count",
    "group_order",
    "minimal_polynomial",
    "presentation",
    "rational",
    "reduce_parameters",
    "run",
    "validate_parameters",
]


def rational(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def run(command: str, q: int, ell: Optional[int] = None, n: Optional[int] = None, d: int = 1,
        *, cache_dir: Optional[str] = None, max_group_order: int = 5000, t_count: int = 0) -> dict[str, Any]:
    passed, text = _core.run_json(command, q, ell, n, d, cache_dir, max_group_order, t_count)
    report = json.loads(text)
    assert (report["status"] == "pass") == passed
    return report


def minimal_polynomial(q: int, ell: int, n: Optional[int] = None, d: int = 1) -> list[Fraction]:
    """Coefficients of m(Y), constant term first."""
    report = run("invariants", q, ell, n, d)
    if report["status"] != "pass":
        raise VerificationFailure(json.dumps(report["checks"]))
    return [rational(c) for c in report["artifacts"]["m"]["coeffs"]]


def presentation(q: int, ell: int, n: Optional[int] = None, d: int = 1) -> str:
    report = run("endo-ring", q, ell, n, d)
    if report["status"] != "pass":
        failed = [c for c in report["checks"] if c["status"] != "pass"]
        raise VerificationFailure(json.dumps(failed))
    return report["artifacts"]["presentation"]


def census(q: int, n: int) -> list[dict[str, Any]]:
    return json.loads(_core.census_json(q, n))["classes"]


def class_count(q: int, n: int) -> int:
    return int(_core.class_count(q, n))


def group_order(q: int, n: int) -> int:
    return int(_core.group_order(q, n))
