"""JSON and CSV encodings of BoundReport and SharpnessResult.

Floats are written with 17 significant digits so reruns diff cleanly.
JSON output is one object per line.
"""
from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable

from .bounds import BoundReport
from .sharpness import SharpnessResult

CSV_COLUMNS = ("theorem", "function_id", "density_id", "a", "b", "alpha", "p", "q", "M",
               "lhs", "rhs", "slack", "holds", "quadrature_error")


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    text = format(x, ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def dumps(obj) -> str:
    """Compact JSON with every float rendered by :func:`fmt_float`."""
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def report_to_dict(r: BoundReport) -> dict:
    return {
        "theorem": r.theorem.value,
        "function_id": r.function_id,
        "density_id": r.density_id,
        "interval": {"a": float(r.interval.a), "b": float(r.interval.b)},
        "alpha": float(r.alpha),
        "holder": None if r.holder is None else {"p": float(r.holder.p), "q": float(r.holder.q)},
        "M": None if r.M is None else float(r.M),
        "lhs": float(r.lhs),
        "rhs": float(r.rhs),
        "slack": float(r.slack),
        "holds": bool(r.holds),
        "quadrature_error": float(r.quadrature_error),
    }


def sharpness_to_dict(s: SharpnessResult) -> dict:
    return {
        "theorem": s.theorem.value,
        "family": s.family,
        "best_params": [float(v) for v in s.best_params],
        "best_ratio": float(s.best_ratio),
        "evaluations": int(s.evaluations),
    }


def csv_row(r: BoundReport) -> list[str]:
    def num(v):
        return "" if v is None else fmt_float(float(v))

    return [
        r.theorem.value, r.function_id, r.density_id or "",
        num(r.interval.a), num(r.interval.b), num(r.alpha),
        num(r.holder.p if r.holder else None), num(r.holder.q if r.holder else None),
        num(r.M), num(r.lhs), num(r.rhs), num(r.slack),
        "true" if r.holds else "false", num(r.quadrature_error),
    ]


def render(reports: Iterable[BoundReport], fmt: str) -> str:
    if fmt == "json":
        return "".join(dumps(report_to_dict(r)) + "\n" for r in reports)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            w.writerow(csv_row(r))
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")
