"""Report serialization: JSON, CSV and plain text, written atomically."""

from __future__ import annotations

import csv
import io
import json
import os
import platform
import tempfile
from fractions import Fraction

from ..scalars import SqrtRational, format_scalar
from .runner import Report

FORMATS = ("json", "csv", "text")
FIELDS = ("id", "criterion", "status", "residual", "tolerance", "samples", "description", "anchor", "reason")


def _plain(value):
    """JSON-ready copy: rationals as "num/den" strings, floats at full precision."""
    if isinstance(value, (Fraction, SqrtRational)):
        return format_scalar(value)
    if isinstance(value, float):
        return float(format_scalar(value))
    if isinstance(value, complex):
        return {"re": _plain(value.real), "im": _plain(value.imag)}
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _row(r) -> dict:
    out = {k: getattr(r, k) for k in FIELDS}
    out["passed"] = r.passed
    if r.details:
        out["details"] = {k: v for k, v in r.details.items() if k != "traceback"}
    return _plain(out)


def versions() -> dict:
    import numpy
    import scipy

    from .. import __version__

    return {"dunklsb": __version__, "numpy": numpy.__version__, "scipy": scipy.__version__,
            "python": platform.python_version()}


def summary(report: Report) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in report.results:
        counts["skipped" if r.passed is None else "pass" if r.passed else "fail"] += 1
    counts["passed"] = report.passed
    return counts


def to_json(report: Report) -> str:
    meta = {"config": report.config.to_dict(), "versions": versions(), "seed": report.config.seed}
    meta.update(_plain(report.meta))
    doc = {"meta": meta, "checks": [_row(r) for r in report.results], "summary": summary(report)}
    return json.dumps(doc, indent=2) + "\n"


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in report.results:
        w.writerow(_row(r))
    return buf.getvalue()


def to_text(report: Report) -> str:
    lines = []
    for r in report.results:
        if r.status == "skipped":
            lines.append(f"SKIP {r.id:5s} [{r.criterion:2d}] {r.description} ({r.reason})")
            continue
        mark = "PASS" if r.passed else ("ERR " if r.status == "error" else "FAIL")
        res = r.residual if isinstance(r.residual, str) else format_scalar(r.residual) if r.residual is not None else "-"
        line = f"{mark} {r.id:5s} [{r.criterion:2d}] residual {res} tol {r.tolerance:g}  {r.description}"
        if r.reason:
            line += f" ({r.reason})"
        lines.append(line)
    total = report.meta.get("total_time")
    lines.append(f"{'all checks passed' if report.passed else 'FAILURES'}; {len(report.results)} checks in {total}s")
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str = "json") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    return {"json": to_json, "csv": to_csv, "text": to_text}[fmt](report)


def emit_report(report: Report, fmt: str = "json", path: str | None = None) -> str:
    """Render the report; when a path is given, write it via a temporary file and rename."""
    text = render(report, fmt)
    if path is not None:
        folder = os.path.dirname(os.path.abspath(path))
        os.makedirs(folder, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=folder, prefix=".dunklsb-", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    return text
