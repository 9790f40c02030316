"""
Rendering of distribution tables and reports for the command line.

A table is a plain dict::

    {"family": "A", "k": 3, "method": "recursive",
     "rows": [{"n": 6, "coefficients": [72, 456, 192]}]}

B rows carry ``z0`` and ``z1`` lists instead of ``coefficients``. In JSON
every coefficient is a decimal string; ``parse_json_table`` turns them back
into integers.
"""

import csv
import io
import json
import re
from typing import Any, Dict, Iterable, List, Optional, Sequence

import click

FAMILIES = ("A", "B", "B0", "B1")
FORMATS = ("text", "json", "csv")

_SELECTOR = re.compile(r"^(const|top|x(\d+))$")


class UnknownSelectorError(ValueError):
    """Raised for an unknown family, method, format or coefficient selector."""


class SpanParamType(click.ParamType):
    """``a..b`` (inclusive) or a single integer; ``b < a`` is an empty span."""

    name = "span"

    def convert(self, value, param, ctx):
        if isinstance(value, range):
            return value
        match = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", str(value))
        if not match:
            self.fail(f"{value!r} is not of the form a..b", param, ctx)
        low = int(match.group(1))
        high = int(match.group(2)) if match.group(2) is not None else low
        return range(low, high + 1)


SPAN = SpanParamType()


def check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise UnknownSelectorError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return fmt


def _row_parts(family: str, row: Dict[str, Any]):
    if family == "B":
        return [("z0", row["z0"]), ("z1", row["z1"])]
    return [(None, row["coefficients"])]


def _list_text(values: Sequence[int]) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"


def render_table(table: Dict[str, Any], fmt: str) -> str:
    """Rows in ascending n, coefficients in ascending degree."""
    check_format(fmt)
    family = table["family"]
    rows = sorted(table["rows"], key=lambda row: row["n"])

    if fmt == "json":
        payload = dict(table)
        payload["rows"] = [
            {key: ([str(v) for v in value] if isinstance(value, list) else value) for key, value in row.items()}
            for row in rows
        ]
        return json.dumps(payload, indent=2)

    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "z", "degree", "coefficient"] if family == "B" else ["n", "degree", "coefficient"])
        for row in rows:
            for z, values in _row_parts(family, row):
                for degree, value in enumerate(values):
                    prefix = [row["n"], z[-1]] if z else [row["n"]]
                    writer.writerow(prefix + [degree, value])
        return buffer.getvalue().rstrip("\n")

    lines = []
    for row in rows:
        parts = _row_parts(family, row)
        if parts[0][0] is None:
            lines.append(f"{row['n']}: {_list_text(parts[0][1])}")
        else:
            lines.append(f"{row['n']}: " + ", ".join(f"{z}={_list_text(values)}" for z, values in parts))
    return "\n".join(lines)


def parse_json_table(text: str) -> Dict[str, Any]:
    payload = json.loads(text)
    payload["rows"] = [
        {key: ([int(v) for v in value] if isinstance(value, list) else value) for key, value in row.items()}
        for row in payload["rows"]
    ]
    return payload


def render_report(report, fmt: str) -> str:
    """
    A ``VerificationReport`` as JSON or as a summary line plus one line per
    failure. Wall-clock time is left out so output depends only on what was
    checked; the services log it instead.
    """
    check_format(fmt)
    if fmt == "json":
        payload = report.to_dict()
        payload.pop("elapsed", None)
        return json.dumps(payload, indent=2)
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{report.id}: {status} ({report.checked} checks, {len(report.failures)} failures)"]
    for failure in report.failures:
        lines.append(_failure_line(failure, fmt))
    return "\n".join(lines)


def _failure_line(failure: Dict[str, Any], fmt: str) -> str:
    params = failure["params"]
    if "method" in params:
        fields = [params.get(key) for key in ("k", "n", "j", "s", "method")] + [failure["lhs"]]
        if fmt == "csv":
            return ",".join(str(v) for v in fields)
        return "mismatch (" + ", ".join(str(v) for v in fields) + f") expected {failure['rhs']}"
    name = f"{failure['id']} " if "id" in failure else ""
    return f"failure {name}{params}: {failure['lhs']} != {failure['rhs']}"


def parse_selector(selector: str):
    """``const``, ``top`` or ``x<d>``; returns the degree, or None for ``top``."""
    match = _SELECTOR.match(selector)
    if not match:
        raise UnknownSelectorError(f"Unknown coefficient selector {selector!r}; use const, top or x<d>")
    if match.group(1) == "const":
        return 0
    if match.group(1) == "top":
        return None
    return int(match.group(2))


def check_family(family: str) -> str:
    if family not in FAMILIES:
        raise UnknownSelectorError(f"Unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return family


def select_coefficient(family: str, poly, selector: str, k: int, length: int) -> int:
    """
    One coefficient of an ``IntPoly`` (family A) or ``BiPoly`` (B, B0, B1).
    ``top`` is the coefficient of x^(length // k).
    """
    check_family(family)
    degree = parse_selector(selector)
    if degree is None:
        if k < 1:
            raise UnknownSelectorError(f"The top selector needs k >= 1; got k={k}")
        degree = length // k
    if family == "A":
        return poly.coeff(degree)
    if family == "B":
        return poly.at_z1().coeff(degree)
    return poly.coeff(0 if family == "B0" else 1, degree)


def format_sequence(values: Iterable[int]) -> str:
    return ", ".join(str(v) for v in values)


def parse_residues(text: Optional[str]) -> List[int]:
    if text is None or text.strip() == "":
        return [0]
    try:
        return sorted({int(part) for part in text.split(",")})
    except ValueError:
        raise UnknownSelectorError(f"Residues must be comma-separated integers, got {text!r}")
