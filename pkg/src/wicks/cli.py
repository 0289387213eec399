"""``wicks`` command line interface."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .census import generate_recursive, gluing_census
from .count import report
from .export import census_csv, census_records, json_lines, rational, report_record
from .flows import (flow_space_dimension, invariant_flow_dimension, quotient_by_involution,
                    quotient_by_order3)
from .gluings import CapacityError
from .surface import build_surface_map, is_maximal, vertex_signs
from .symmetry import automorphisms, canonical_string, shift_order, symmetry_parameters
from .transform import (TransformError, classify_negative_vertex, construct_all, ih_transform,
                        negative_vertices, reduce)
from .verify import verify
from .word import WicksWord, WordConditionError, WordSyntaxError, format_letters, parse_word, validate


class UsageError(Exception):
    pass


def _genus(text: str) -> int:
    g = int(text)
    if g < 1:
        raise argparse.ArgumentTypeError("genus must be at least 1")
    return g


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- table / count ----------------------------------------------------------

def cmd_table(args) -> int:
    rows = []
    for g in range(1, args.max_genus + 1):
        rep = report(g)
        row = {"genus": g, "M1": str(rep.M1)}
        if args.full:
            row.update(M2=str(rep.M2), M3=str(rep.M3), M6=str(rep.M6),
                       **{f"exact_{d}": str(rep.exact_orders[d]) for d in (1, 2, 3, 6)})
        rows.append(row)
    if args.format == "json":
        _emit(args, _dump(rows))
    else:
        sep = "," if args.format == "csv" else " "
        lines = [sep.join(rows[0])] if args.format == "csv" else []
        lines += [sep.join(str(v) for v in row.values()) for row in rows]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_count(args) -> int:
    rec = report_record(report(args.genus))
    if args.format == "json":
        _emit(args, _dump(rec))
    elif args.format == "csv":
        flat = {k: v for k, v in rec.items() if not isinstance(v, dict)}
        _emit(args, ",".join(flat) + "\n" + ",".join(str(v) for v in flat.values()) + "\n")
    else:
        lines = [f"genus {rec['genus']}", f"m1 = {rec['m1']}"]
        for key, label in (("m2_by_r", "m2(r={})"), ("m3_by_st", "m3(s,t={})"), ("m6_by_rst", "m6({})")):
            lines += [f"{label.format(k)} = {v}" for k, v in rec[key].items()]
        lines += [f"{k} = {rec[k]}" for k in ("m2", "m3", "m6", "M1", "M2", "M3", "M6")]
        lines += [f"exactly {d} automorphisms: {n}" for d, n in rec["exact_orders"].items()]
        _emit(args, "\n".join(lines) + "\n")
    return 0


# -- inspect ------------------------------------------------------------------

def _analyse(word: WicksWord, flows: bool, quotient: bool) -> dict:
    smap = build_surface_map(word)
    signs, pos, neg = vertex_signs(word)
    maximal = is_maximal(word)
    rec: dict = {
        "word": str(word),
        "length": len(word),
        "violations": [],
        "genus": smap.genus,
        "maximal": maximal,
        "canonical": canonical_string(word),
        "vertices": [
            {"index": v, "corners": list(cyc), "degree": len(cyc), "sign": signs[v].name.lower(),
             "neighbours": list(smap.adjacency[v])}
            for v, cyc in enumerate(smap.vertex_cycles)],
        "positive": pos,
        "negative": neg,
    }
    if maximal and smap.genus > 1:
        for v in negative_vertices(word):
            rec["vertices"][v]["type"] = classify_negative_vertex(word, v).value
    aut = automorphisms(word)
    rec["aut_order"] = aut.order
    rec["aut_shifts"] = list(aut.member_shifts)
    sym = []
    for k in aut.member_shifts:
        d = shift_order(len(word), k)
        if d in (2, 3, 6):
            p = symmetry_parameters(word, k)
            sym.append({"shift": k, "order": d, "r": p.r, "s": p.s, "t": p.t, "label": p.label()})
    rec["symmetry"] = sym
    if flows:
        rec["flows"] = {"dim_z2": flow_space_dimension(word, 2), "dim_z3": flow_space_dimension(word, 3)}
        three = aut.shift_of_order(3)
        if three is not None:
            rec["flows"]["invariant_dim_z2"] = invariant_flow_dimension(word, three, 2)
    if quotient and maximal:
        out = []
        two = aut.shift_of_order(2)
        if two is not None:
            out.append(_quotient_record("involution", two, quotient_by_involution(word, two), word))
        three = aut.shift_of_order(3)
        if three is not None and smap.genus > 1:
            p = symmetry_parameters(word, three)
            if p.order == 3 and p.t == 0:
                out.append(_quotient_record("order3", three, quotient_by_order3(word, three), word))
        rec["quotients"] = out
    return rec


def _quotient_record(kind, shift, q, word) -> dict:
    rec = {"kind": kind, "shift": shift, "genus": q.genus, "r": q.r, "s": q.s, "t": q.t,
           "reduced_word": None if q.is_empty else str(q.reduced_word), "flow": None}
    if q.flow is not None:
        rec["flow"] = {q.reduced_word.name(i): v for i, v in sorted(q.flow.values.items())}
    return rec


def _parse(text: str) -> WicksWord:
    try:
        return parse_word(text)
    except (WordSyntaxError, WordConditionError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_inspect(args) -> int:
    word = _parse(args.word)
    violations = validate(word)
    if violations:
        rec = {"word": str(word), "error": "not an oriented Wicks form",
               "violations": [{"condition": v.condition, "positions": list(v.positions), "detail": v.detail}
                              for v in violations]}
        sys.stderr.write(_dump(rec))
        return 2
    rec = _analyse(word, args.flows, args.quotient)
    if args.format == "json":
        _emit(args, _dump(rec))
    else:
        lines = [f"word      {rec['word']}", f"canonical {rec['canonical']}",
                 f"genus {rec['genus']}, length {rec['length']}, maximal {str(rec['maximal']).lower()}",
                 f"vertices: {len(rec['vertices'])} ({rec['positive']} positive, {rec['negative']} negative)"]
        for v in rec["vertices"]:
            extra = f" type {v['type']}" if "type" in v else ""
            lines.append(f"  v{v['index']}: degree {v['degree']} {v['sign']}{extra} "
                         f"corners {v['corners']} neighbours {v['neighbours']}")
        lines.append(f"aut order {rec['aut_order']}, shifts {rec['aut_shifts']}")
        lines += [f"  shift {s['shift']} (order {s['order']}): {s['label']}" for s in rec["symmetry"]]
        if "flows" in rec:
            lines.append("flows: " + ", ".join(f"{k} {v}" for k, v in rec["flows"].items()))
        for q in rec.get("quotients", []):
            lines.append(f"quotient ({q['kind']}, shift {q['shift']}): genus {q['genus']} "
                         f"{q['reduced_word'] or '(empty)'} flow {q['flow']}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


# -- enumerate / verify -------------------------------------------------------

def cmd_enumerate(args) -> int:
    if args.mode == "gluings":
        census = gluing_census(args.genus, args.jobs)
    else:
        census = generate_recursive(args.genus, args.jobs)
    records = census_records(census, args.mode)
    if args.format == "csv":
        _emit(args, census_csv(records))
    elif args.format == "json":
        _emit(args, json_lines(records))
    else:
        lines = [f"{c['word']}  |Aut|={c['aut_order']}" for c in records[:-1]]
        s = records[-1]
        lines.append(f"genus {s['genus']}: {s['class_count']} classes, mass {s['mass']}, "
                     f"{s['words_seen']} words seen, histogram {s['order_histogram']}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    checks = verify(args.genus, args.jobs)
    if args.format == "json":
        _emit(args, _dump([{"check": c.name, "ok": c.ok, "expected": _plain(c.expected),
                            "actual": _plain(c.actual)} for c in checks]))
    else:
        lines = []
        for c in checks:
            status = "PASS" if c.ok else "FAIL"
            detail = _plain(c.actual) if c.ok else f"expected {_plain(c.expected)}, got {_plain(c.actual)}"
            if c.ok and isinstance(c.actual, list):
                detail = f"{len(c.actual)} classes"
            lines.append(f"{status} {c.name}: {detail}")
        failed = sum(not c.ok for c in checks)
        lines.append(f"genus {args.genus}: {len(checks) - failed}/{len(checks)} checks passed")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if all(c.ok for c in checks) else 1


def _plain(x):
    from fractions import Fraction
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, set):
        return sorted(_plain(v) for v in x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "__dataclass_fields__"):
        return {k: getattr(x, k) for k in x.__dataclass_fields__}
    return x


# -- transform ----------------------------------------------------------------

def cmd_transform(args) -> int:
    word = _parse(args.word)
    if validate(word) or not is_maximal(word):
        raise UsageError(f"{word} is not a maximal Wicks form")
    if args.ih is not None:
        names = {word.name(i): i for i in word.ids}
        if args.ih not in names:
            raise UsageError(f"edge {args.ih!r} does not occur in the word")
        kind, result = ih_transform(word, names[args.ih])
        recs = [{"operation": "ih", "edge": args.ih, "kind": f"type {kind.value}", "word": str(result),
                 "canonical": canonical_string(result)}]
    elif args.reduce is not None:
        try:
            kind = classify_negative_vertex(word, args.reduce).value
            result = reduce(word, args.reduce)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        recs = [{"operation": "reduce", "vertex": args.reduce, "type": kind, "word": str(result),
                 "canonical": canonical_string(result)}]
    else:
        recs = [{"operation": "construct", "kind": c.kind.value,
                 "points": [[word.name(x), list(sides)] for x, sides in c.points],
                 "roles": list(c.roles), "word": format_letters(c.word.letters),
                 "canonical": canonical_string(c.word)} for c in construct_all(word)]
    if args.format == "json":
        _emit(args, json_lines(recs))
    else:
        _emit(args, "".join(
            f"{r['operation']} {r.get('kind') or r.get('type', '')}: {r['word']}  [{r['canonical']}]\n"
            for r in recs))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wicks", description="Oriented maximal Wicks forms and 1-vertex triangulations.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--output", help="write to this file instead of standard output")

    p = sub.add_parser("table", help="number of classes M1 for genus 1..N")
    p.add_argument("max_genus", type=_genus)
    p.add_argument("--full", action="store_true", help="also M2, M3, M6 and exact-order counts")
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("count", help="masses and class counts for one genus")
    p.add_argument("genus", type=_genus)
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("inspect", help="analyse one word")
    p.add_argument("word")
    p.add_argument("--flows", action="store_true")
    p.add_argument("--quotient", action="store_true")
    common(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("enumerate", help="census of all classes of one genus")
    p.add_argument("genus", type=_genus)
    p.add_argument("--mode", choices=["gluings", "recursive"], default="recursive")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="cross-check formulas against the enumerations")
    p.add_argument("genus", type=_genus)
    p.add_argument("--jobs", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="IH-transformation, reduction or constructions")
    p.add_argument("word")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ih", metavar="EDGE")
    group.add_argument("--reduce", metavar="VERTEX", type=int)
    group.add_argument("--construct", action="store_true")
    common(p)
    p.set_defaults(func=cmd_transform)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CapacityError) as exc:
        sys.stderr.write(f"wicks {args.command}: {exc}\n")
        return 2
    except TransformError as exc:
        sys.stderr.write(f"wicks {args.command}: internal error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
