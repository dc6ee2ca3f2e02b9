"""Deterministic CSV and JSON report writers.

CSV files carry a header row and numbers with 10 significant digits;
JSON output is key-sorted with fixed separators.  In both formats the
string "inf" is the sole representation of a non-finite value, so report
files are byte-identical across runs with the same seed.
"""

from __future__ import annotations

import json
import math
from pathlib import Path


def fmt_num(x) -> str:
    v = float(x)
    if math.isinf(v):
        return "inf"
    return f"{v:.10g}"


def sanitize(obj):
    """Replace non-finite floats by the literal string 'inf' recursively."""
    if isinstance(obj, dict):
        return {k: sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, float) and math.isnan(obj):
        return "nan"
    return obj


def dump_json(obj) -> str:
    return json.dumps(sanitize(obj), sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def write_json(path, obj) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(dump_json(obj))
    return p


def _cell(c) -> str:
    if isinstance(c, str):
        if "," in c or '"' in c:
            return '"' + c.replace('"', '""') + '"'
        return c
    return fmt_num(c)


def csv_lines(header, rows) -> str:
    out = [",".join(header)]
    for row in rows:
        out.append(",".join(_cell(c) for c in row))
    return "\n".join(out) + "\n"


def write_csv(path, header, rows) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(csv_lines(header, rows))
    return p


THEOREM_CSV_HEADER = ("triple_id", "branch", "probe_id", "mult_lower",
                      "lux_value", "ratio", "verdict")


def theorem_report_rows(report):
    rows = []
    for r in report.rows:
        rows.append((report.triple_id, report.branch, r.probe_id, r.mult_lower,
                     r.lux_value, r.ratio, r.status))
    return rows


EXAMPLES_CSV_HEADER = ("name", "metric", "value", "bound", "passed", "note")


def example_rows(rows):
    return [(r.name, r.metric, r.value, r.bound, str(r.passed).lower(), r.note)
            for r in rows]
