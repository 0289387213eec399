"""Stable machine-readable records for mass reports and censuses."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable

from .census import Census
from .count import MassReport

CENSUS_SCHEMA = "wicks-census/1"
CENSUS_COLUMNS = ["record", "genus", "word", "aut_order", "positive", "negative", "r", "s", "t",
                  "class_count", "words_seen", "mass", "pointed_count"]


def rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_record(rep: MassReport) -> dict:
    return {
        "genus": rep.genus,
        "m1": rational(rep.m1),
        "m2_by_r": {str(r): rational(v) for r, v in rep.m2_by_r.items()},
        "m3_by_st": {f"{s},{t}": rational(v) for (s, t), v in rep.m3_by_st.items()},
        "m6_by_rst": {f"{3 * r};{2 * s},{2 * t}": rational(v) for (r, s, t), v in rep.m6_by_rst.items()},
        "m2": rational(rep.m2),
        "m3": rational(rep.m3),
        "m6": rational(rep.m6),
        "M1": str(rep.M1),
        "M2": str(rep.M2),
        "M3": str(rep.M3),
        "M6": str(rep.M6),
        "exact_orders": {str(d): str(rep.exact_orders[d]) for d in (1, 2, 3, 6)},
    }


def census_records(census: Census, source: str) -> list[dict]:
    out = []
    for c in census.classes:
        out.append({
            "schema": CENSUS_SCHEMA, "record": "class", "genus": census.genus, "word": c.word,
            "aut_order": c.aut_order, "positive": c.positive, "negative": c.negative,
            "r": c.r, "s": c.s, "t": c.t,
        })
    out.append({
        "schema": CENSUS_SCHEMA, "record": "summary", "genus": census.genus, "source": source,
        "class_count": census.class_count, "words_seen": census.words_seen,
        "mass": rational(census.mass), "pointed_count": str(census.pointed_count),
        "order_histogram": {str(d): census.order_histogram[d] for d in (1, 2, 3, 6)},
    })
    return out


def json_lines(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=False) + "\n" for r in records)


def census_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, CENSUS_COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: ("" if v is None else v) for k, v in rec.items()})
    return buf.getvalue()


def read_census(text: str) -> tuple[list[dict], dict]:
    """Parse JSON-lines census output back into class records and the summary."""
    classes, summary = [], None
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if rec.get("schema") != CENSUS_SCHEMA:
            raise ValueError(f"unknown census schema {rec.get('schema')!r}")
        if rec["record"] == "class":
            classes.append(rec)
        else:
            summary = rec
    if summary is None:
        raise ValueError("census has no summary record")
    return classes, summary
