"""Bit-stable CSV and JSON emitters.

Floats go out with 17 significant digits so a parse round-trip is
lossless; negative zero is normalized away so reruns diff clean. Masked
values are an empty CSV field or a JSON null, and the divergent
susceptibility at m = 0 is the literal sentinel string.
"""
from __future__ import annotations

import json
import sys

DIVERGENT = "divergent"


def _norm(x: float) -> float:
    return 0.0 if x == 0 else x


def fmt_float(x: float) -> str:
    return "%.17g" % _norm(x)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    return fmt_float(v)


def render_csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _jsonable(v):
    if isinstance(v, bool):
        return 1 if v else 0
    if isinstance(v, float):
        return _norm(v)
    return v


def render_json(header, rows) -> str:
    records = [{key: _jsonable(v) for key, v in zip(header, row)} for row in rows]
    return json.dumps(records, indent=2) + "\n"


def render(fmt: str, header, rows) -> str:
    if fmt == "json":
        return render_json(header, rows)
    if fmt == "csv":
        return render_csv(header, rows)
    raise ValueError(f"unknown format {fmt!r}")


def emit(text: str, output: str) -> None:
    """Write to a path, or to stdout when output is '-'."""
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
