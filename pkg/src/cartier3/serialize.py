"""Canonical, byte-stable serialization.

All verification output must be reproducible byte for byte across worker
counts and runs, so JSON is emitted with sorted keys and fixed separators,
integers travel as decimal strings and rationals as "num/den" strings
(nothing is ever a float).
"""

from __future__ import annotations

import json
from fractions import Fraction

CSV_HEADER = "q,g,epsilon,squarefree,a,count,total,probability"


def jsonable(obj):
    """Recursively convert to JSON-safe values: ints and Fractions become
    decimal / num-den strings, mappings get string keys."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        raise TypeError("floating point values are not serialized; use Fraction")
    if isinstance(obj, str) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json_dict"):
        return jsonable(obj.to_json_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json_bytes(obj) -> bytes:
    return (
        json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=True)
        + "\n"
    ).encode("ascii")


def write_json(path: str, obj) -> None:
    with open(path, "wb") as fh:
        fh.write(canonical_json_bytes(obj))


def census_csv_lines(tables) -> list:
    lines = [CSV_HEADER]
    for table in tables:
        for row in table.csv_rows():
            lines.append(",".join(str(x) for x in row))
    return lines


def write_census_csv(path: str, tables) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(census_csv_lines(tables)) + "\n")
