"""Command line interface: ``essdim report``, ``essdim table``, ``essdim verify``.

Group expressions::

    Cm  Sn  Sn(natural)  An  G(m,l,n)  STk
    W(E6) W(E7) W(E8) W(F4) W(G2) W(H3) W(H4) W(Bn) W(Dn) W(An)

Exit status: 0 success, 1 domain refusal, 2 parse/usage error,
3 enumeration budget exceeded, 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from importlib import metadata
from typing import Iterator, Optional, Sequence

from . import catalog, eddim
from .catalog import (
    NATURAL,
    Alternating,
    Cyclic,
    Exceptional,
    GroupSpec,
    Symmetric,
    degrees,
    group_order,
    is_reflection_spec,
    normalize_imprimitive,
)
from .enumeration import (
    DEFAULT_BUDGET,
    brute_force_families,
    class_families,
    is_enumerable,
    is_even_partition,
)
from .errors import EnumerationBudgetError, EssDimError, GroupParseError
from .exactnum import divisors
from .molien import extract_degrees, molien_series
from .spectra import a_direct, reflection_count

try:
    VERSION = metadata.version("artifact")
except metadata.PackageNotFoundError:  # pragma: no cover - running from a checkout
    VERSION = "0.1.0"

WEYL_EXCEPTIONAL = {"E6": 35, "E7": 36, "E8": 37, "F4": 28, "H3": 23, "H4": 30}

# ---------------------------------------------------------------------------
# group expressions


def parse_group(expr: str, base_char: int = 0) -> tuple[GroupSpec, list[str]]:
    """Parse a group expression into a spec plus normalization notes."""
    s = re.sub(r"\s+", "", expr)
    notes: list[str] = []
    try:
        if m := re.fullmatch(r"C(\d+)", s):
            return Cyclic(int(m[1]), base_char=base_char), notes
        if m := re.fullmatch(r"S(\d+)(\(natural\))?", s):
            rep = NATURAL if m[2] else catalog.STANDARD
            return Symmetric(int(m[1]), rep, base_char=base_char), notes
        if m := re.fullmatch(r"A(\d+)", s):
            return Alternating(int(m[1]), base_char=base_char), notes
        if m := re.fullmatch(r"G\((\d+),(\d+),(\d+)\)", s):
            return normalize_imprimitive(int(m[1]), int(m[2]), int(m[3]), base_char)
        if m := re.fullmatch(r"ST(\d+)", s):
            return Exceptional(int(m[1]), base_char=base_char), notes
        if m := re.fullmatch(r"W\(([A-Z])(\d+)\)", s):
            letter, k = m[1], int(m[2])
            key = f"{letter}{k}"
            if key in WEYL_EXCEPTIONAL:
                spec = Exceptional(WEYL_EXCEPTIONAL[key], base_char=base_char)
                return spec, [f"{s} is {spec.label}"]
            if key == "G2":
                spec, notes = normalize_imprimitive(6, 6, 2, base_char)
            elif letter == "B":
                spec, notes = normalize_imprimitive(2, 1, k, base_char)
            elif letter == "D":
                spec, notes = normalize_imprimitive(2, 2, k, base_char)
            elif letter == "A":
                spec = Symmetric(k + 1, base_char=base_char)
            else:
                raise GroupParseError(f"unknown Weyl group {s!r}")
            return spec, [f"{s} is {spec.label}"] + notes
    except GroupParseError:
        raise
    except ValueError as exc:
        if isinstance(exc, catalog.CharacteristicError):
            raise
        raise GroupParseError(f"{expr!r}: {exc}") from exc
    raise GroupParseError(f"cannot parse group expression {expr!r}")


# ---------------------------------------------------------------------------
# report documents


@dataclass
class ReportDocument:
    group: str
    normalized_group: str
    char: int
    degrees: Optional[dict]
    per_prime: list[dict]
    pmed: Optional[dict]
    ed_abs: dict
    notes: list[str]
    provenance: list[str]
    tool: str = "essdim"
    version: str = VERSION
    generated_at: Optional[str] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ReportDocument":
        return cls(**data)


def build_document(expr: str, g: GroupSpec, notes: list[str], budget: int, timestamp: bool) -> ReportDocument:
    report = eddim.ed_report(g, budget)
    tags: list[str] = []

    def tag(t: Optional[str]) -> Optional[str]:
        if t and t not in tags:
            tags.append(t)
        return t

    degs = None
    if report.degrees is not None:
        degs = {"value": list(report.degrees), "provenance": tag(report.degrees_provenance)}
    per_prime = [
        {"p": p, "a_p": e.a_p, "ed_at_p": e.ed_at_p, "provenance": tag(e.provenance)}
        for p, e in sorted(report.per_prime.items())
    ]
    pm = None
    if report.pmed is not None:
        pm = {"value": report.pmed, "provenance": tag(report.pmed_provenance)}
    if report.ed_abs is None:
        ed_abs = {"kind": "undetermined", "lo": None, "hi": None, "provenance": None}
    else:
        ed_abs = {
            "kind": report.ed_abs.kind,
            "lo": report.ed_abs.lo,
            "hi": report.ed_abs.hi,
            "provenance": tag(report.ed_abs.provenance),
        }
    return ReportDocument(
        group=expr,
        normalized_group=g.label,
        char=g.base_char,
        degrees=degs,
        per_prime=per_prime,
        pmed=pm,
        ed_abs=ed_abs,
        notes=notes + report.notes,
        provenance=tags,
        generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds") if timestamp else None,
    )


def render_json(doc: ReportDocument) -> str:
    return json.dumps(doc.to_dict(), sort_keys=True)


def parse_json(text: str) -> ReportDocument:
    return ReportDocument.from_dict(json.loads(text))


def render_text(doc: ReportDocument) -> str:
    lines = [f"group         {doc.group} -> {doc.normalized_group}" + (f"  (char {doc.char})" if doc.char else "")]
    if doc.degrees:
        lines.append(f"degrees       {', '.join(map(str, doc.degrees['value']))}  [{doc.degrees['provenance']}]")
    else:
        lines.append("degrees       (none)")
    for row in doc.per_prime:
        ed = "?" if row["ed_at_p"] is None else row["ed_at_p"]
        lines.append(f"  p={row['p']:<4} a(p)={row['a_p']:<3} ed(G;p)={ed:<3} [{row['provenance']}]")
    if doc.pmed:
        lines.append(f"pmed          {doc.pmed['value']}  [{doc.pmed['provenance']}]")
    e = doc.ed_abs
    if e["kind"] == "exact":
        lines.append(f"ed            {e['lo']}  [{e['provenance']}]")
    elif e["kind"] == "interval":
        lines.append(f"ed            between {e['lo']} and {e['hi']}  [{e['provenance']}]")
    else:
        lines.append("ed            undetermined")
    lines += [f"note: {n}" for n in doc.notes]
    if doc.generated_at:
        lines.append(f"generated {doc.generated_at} by {doc.tool} {doc.version}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# tables


def expand_range(tokens: Sequence[str]) -> list[str]:
    """Expand a family range into group expressions.

    ``ST4..ST37``, ``S2..S12``, ``C1..C12``, ``A4..A9`` or a template such as
    ``G(m,m,n) m=2..5 n=2..5``; a template slot whose variable has no range
    (usually ``l``) runs over the divisors of the first slot.
    """
    text = " ".join(tokens).strip()
    if m := re.fullmatch(r"(ST|S|C|A)(\d+)\.\.(?:ST|S|C|A)?(\d+)", text):
        lo, hi = int(m[2]), int(m[3])
        if lo > hi:
            raise GroupParseError(f"empty range {text!r}")
        return [f"{m[1]}{k}" for k in range(lo, hi + 1)]
    m = re.fullmatch(r"G\((\w+),(\w+),(\w+)\)((?:\s+\w+=\d+(?:\.\.\d+)?)*)", text)
    if not m:
        raise GroupParseError(f"cannot parse family range {text!r}")
    slots = [m[1], m[2], m[3]]
    ranges: dict[str, range] = {}
    for assign in m[4].split():
        var, spec = assign.split("=")
        lo, _, hi = spec.partition("..")
        ranges[var] = range(int(lo), int(hi or lo) + 1)
    for var in (slots[0], slots[2]):
        if not var.isdigit() and var not in ranges:
            raise GroupParseError(f"no range given for {var!r}")

    def values(slot: str, env: dict) -> Iterator[int]:
        if slot.isdigit():
            yield int(slot)
        elif slot in env:
            yield env[slot]
        elif slot in ranges:
            yield from ranges[slot]
        else:
            first = env[slots[0]] if not slots[0].isdigit() else int(slots[0])
            yield from divisors(first)

    out = []
    for a in values(slots[0], {}):
        env = {} if slots[0].isdigit() else {slots[0]: a}
        for c in values(slots[2], env):
            env2 = dict(env)
            if not slots[2].isdigit():
                env2[slots[2]] = c
            for b in values(slots[1], env2):
                out.append(f"G({a},{b},{c})")
    return out


TABLE_COLUMNS = ["group", "normalized_group", "char", "degrees", "pmed", "ed_kind", "ed_lo", "ed_hi", "status"]


def table_rows(exprs: Sequence[str], base_char: int, budget: int) -> list[dict]:
    rows = []
    for expr in exprs:
        row = dict.fromkeys(TABLE_COLUMNS, "")
        row.update(group=expr, char=base_char, status="ok")
        try:
            g, notes = parse_group(expr, base_char)
            doc = build_document(expr, g, notes, budget, timestamp=False)
        except EssDimError as exc:
            row["status"] = f"error: {exc}"
            rows.append(row)
            continue
        row["normalized_group"] = doc.normalized_group
        if doc.degrees:
            row["degrees"] = "+".join(map(str, doc.degrees["value"]))
        if doc.pmed:
            row["pmed"] = doc.pmed["value"]
        row["ed_kind"] = doc.ed_abs["kind"]
        row["ed_lo"] = "" if doc.ed_abs["lo"] is None else doc.ed_abs["lo"]
        row["ed_hi"] = "" if doc.ed_abs["hi"] is None else doc.ed_abs["hi"]
        row["_per_prime"] = {r["p"]: r for r in doc.per_prime}
        row["_doc"] = doc
        rows.append(row)
    return rows


def prime_columns(rows: list[dict]) -> list[int]:
    top = max((p for r in rows for p in r.get("_per_prime", {})), default=1)
    return catalog.primes_up_to(top)


def render_table(rows: list[dict], fmt: str, primes: bool) -> str:
    cols = list(TABLE_COLUMNS)
    pcols = prime_columns(rows) if primes else []
    cols += [f"ed_p{p}" for p in pcols]

    def flat(r: dict) -> dict:
        out = {k: r[k] for k in TABLE_COLUMNS}
        for p in pcols:
            entry = r.get("_per_prime", {}).get(p)
            if entry is None:
                # primes dividing no degree have a(p) = ed(G;p) = 0
                out[f"ed_p{p}"] = 0 if "_doc" in r else ""
            else:
                out[f"ed_p{p}"] = "" if entry["ed_at_p"] is None else entry["ed_at_p"]
        return out

    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(flat(r))
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        return "\n".join(
            render_json(r["_doc"]) if "_doc" in r else json.dumps({"group": r["group"], "error": r["status"]}, sort_keys=True)
            for r in rows
        )
    widths = {c: max(len(c), *(len(str(flat(r)[c])) for r in rows)) for c in cols} if rows else {}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
    for r in rows:
        fr = flat(r)
        lines.append("  ".join(str(fr[c]).ljust(widths[c]) for c in cols).rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerifyResult:
    group: str
    oracle: str
    status: str = "pass"
    assertions: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.assertions.append({"name": name, "ok": bool(ok), "detail": detail})
        if not ok:
            self.status = "fail"

    def skip(self, why: str) -> "VerifyResult":
        self.status = "skipped"
        self.notes.append(why)
        return self


ELEMENT_ORACLE_LIMIT = 50_000


def verify(g: GroupSpec, oracle: str, budget: int = DEFAULT_BUDGET, label: str = "") -> VerifyResult:
    res = VerifyResult(label or g.label, oracle)
    if not is_enumerable(g):
        return res.skip(f"{g.label} has no signature enumeration")
    try:
        if oracle == "springer-vs-direct":
            if not is_reflection_spec(g):
                return res.skip(f"{g.label}: no degree vector (not generated by pseudo-reflections)")
            d = degrees(g)
            for k in range(1, 2 * max(d) + 1):
                direct, springer = a_direct(g, k, budget), eddim.a_springer(d, k, g.base_char)
                res.check(f"a({k})", direct == springer, f"direct={direct} springer={springer}")
            for p in eddim.relevant_primes(d):
                res.check(f"ed({g.label};{p})", eddim.ed_at_p(g, p) == a_direct(g, p, budget))
        elif oracle == "molien":
            if not is_reflection_spec(g):
                return res.skip(f"{g.label}: no degree vector to compare against")
            found = extract_degrees(molien_series(g, budget=budget), g.rank)
            res.check("degrees", found == degrees(g), f"molien={list(found)} catalog={list(degrees(g))}")
            res.notes.append(f"degrees {list(found)}")
        elif oracle == "counts":
            fams = list(class_families(g, budget))
            total = sum(f.element_count for f in fams)
            res.check("class sizes sum to |G|", total == group_order(g), f"{total} elements")
            res.notes.append(f"{total} elements total")
            if is_reflection_spec(g):
                rc, expected = reflection_count(g, budget), sum(x - 1 for x in degrees(g))
                res.check("reflections = sum(d_i - 1)", rc == expected, f"{rc} vs {expected}")
            if group_order(g) <= ELEMENT_ORACLE_LIMIT:
                fast = {f.signature: f.element_count for f in fams}
                res.check("signatures match element enumeration", fast == _element_oracle(g))
            else:
                res.notes.append("element enumeration oracle skipped: group too large")
        else:
            raise GroupParseError(f"unknown oracle {oracle!r}")
    except EnumerationBudgetError as exc:
        return res.skip(str(exc))
    return res


def _element_oracle(g: GroupSpec) -> dict:
    if isinstance(g, Cyclic):
        return brute_force_families(g.m, 1, 1)
    if isinstance(g, Symmetric):
        return brute_force_families(1, 1, g.n)
    if isinstance(g, Alternating):
        return {s: c for s, c in brute_force_families(1, 1, g.n).items() if is_even_partition(s.partition)}
    return brute_force_families(g.m, g.l, g.n)


def render_verify(res: VerifyResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(asdict(res), sort_keys=True)
    lines = [f"{res.status.upper()}  {res.group}  oracle={res.oracle}"]
    for a in res.assertions:
        lines.append(f"  {'ok  ' if a['ok'] else 'FAIL'} {a['name']}  {a['detail']}".rstrip())
    lines += [f"  note: {n}" for n in res.notes]
    return "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, help="base field characteristic (0 or a prime)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max signature families to enumerate")
    common.add_argument("--no-timestamp", action="store_true", help="omit the generated_at field")

    parser = argparse.ArgumentParser(prog="essdim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"essdim {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common], help="per-group report")
    p.add_argument("group")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("table", parents=[common], help="one row per group in a family range")
    p.add_argument("range", nargs="+")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--primes", action="store_true", help="add ed(G;p) columns")

    p = sub.add_parser("verify", parents=[common], help="run an independent cross-check")
    p.add_argument("group")
    p.add_argument("--oracle", choices=["springer-vs-direct", "molien", "counts"], required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _error(exc: EssDimError) -> int:
    record = {"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
    print(json.dumps(record, sort_keys=True), file=sys.stderr)
    return exc.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "report":
            g, notes = parse_group(args.group, args.char)
            doc = build_document(args.group, g, notes, args.budget, not args.no_timestamp)
            print(render_json(doc) if args.format == "json" else render_text(doc))
        elif args.command == "table":
            exprs = expand_range(args.range)
            print(render_table(table_rows(exprs, args.char, args.budget), args.format, args.primes))
        else:
            g, _ = parse_group(args.group, args.char)
            res = verify(g, args.oracle, args.budget, args.group)
            print(render_verify(res, args.format))
            return 1 if res.status == "fail" else 0
    except EssDimError as exc:
        return _error(exc)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
