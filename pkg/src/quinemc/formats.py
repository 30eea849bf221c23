"""Text formats: minterm-list specs, single-output PLA, expressions, JSON reports.

Minterm spec grammar::

    vars=<n>; minterms=<i,j,...>; dontcares=<i,j,...>

``minterms`` lists every minterm where the function may be 1, don't-cares
included; ``dontcares`` must be a subset of it. Both lists are strictly
ascending. The parsed onset is ``minterms`` minus ``dontcares``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .cover import Cover, MinimizeReport
from .cube import Implicant, ProblemSpec, expand_minterms
from .errors import DomainError, ParseError

_KEYS = ("vars", "minterms", "dontcares")


@dataclass(frozen=True)
class VariableNaming:
    style: str = "letters"
    prefix: str = "x"

    def __post_init__(self):
        if self.style not in ("letters", "indexed"):
            raise DomainError(f"unknown naming style {self.style!r}")

    def names(self, n: int) -> list[str]:
        if self.style == "letters":
            if n > 26:
                raise DomainError(f"letter naming supports at most 26 variables, got {n}")
            return [chr(ord("A") + i) for i in range(n)]
        return [f"{self.prefix}{i}" for i in range(n)]


def _parse_list(text: str, offset: int) -> list[tuple[int, int]]:
    out = []
    if not text.strip():
        return out
    pos = offset
    for item in text.split(","):
        stripped = item.strip()
        at = pos + (len(item) - len(item.lstrip()))
        if not re.fullmatch(r"\d+", stripped):
            raise ParseError("syntax", f"expected a non-negative integer, got {stripped!r}", at)
        out.append((int(stripped), at))
        pos += len(item) + 1
    return out


def _check_list(name: str, items: list[tuple[int, int]], size: int, n: int) -> None:
    for i, (value, at) in enumerate(items):
        if i and value <= items[i - 1][0]:
            raise ParseError("not_ascending", f"{name} indices are not in ascending order", at)
        if value >= size:
            raise ParseError("out_of_range", f"{name} index {value} must be smaller than 2^{n}={size}", at)


def parse_minterm_spec(text: str, allow_empty_onset: bool = False) -> ProblemSpec:
    fields: dict[str, tuple[str, int]] = {}
    pos = 0
    for part in text.split(";"):
        if part.strip():
            key, sep, value = part.partition("=")
            at = pos + (len(part) - len(part.lstrip()))
            key = key.strip()
            if not sep:
                raise ParseError("syntax", f"expected key=value, got {part.strip()!r}", at)
            if key not in _KEYS:
                raise ParseError("syntax", f"unknown key {key!r}", at)
            if key in fields:
                raise ParseError("syntax", f"duplicate key {key!r}", at)
            fields[key] = (value, pos + len(part.partition("=")[0]) + 1)
        pos += len(part) + 1
    for key in ("vars", "minterms"):
        if key not in fields:
            raise ParseError("syntax", f"missing required key {key!r}", len(text))

    vtext, vpos = fields["vars"]
    if not re.fullmatch(r"\s*-?\d+\s*", vtext):
        raise ParseError("syntax", f"vars must be an integer, got {vtext.strip()!r}", vpos)
    n = int(vtext)
    if n <= 0:
        raise ParseError("bad_var_count", "the number of variables should be greater than 0", vpos)
    size = 1 << n

    minterms = _parse_list(*fields["minterms"])
    dontcares = _parse_list(*fields.get("dontcares", ("", len(text))))
    _check_list("minterm", minterms, size, n)
    _check_list("dontcare", dontcares, size, n)

    listed = {v for v, _ in minterms}
    for value, at in dontcares:
        if value not in listed:
            raise ParseError("dontcare_not_listed", f"don't-care {value} is not in the minterm list", at)
    dc = {v for v, _ in dontcares}
    onset = tuple(sorted(listed - dc))
    if not onset and not allow_empty_onset:
        _, at = fields["minterms"]
        raise ParseError("empty_onset", "every listed minterm is a don't-care (or none are listed)", at)
    return ProblemSpec(n, onset, tuple(sorted(dc)))


def parse_pla(text: str) -> ProblemSpec:
    """Parse the single-output PLA subset. Positions in errors are line numbers."""
    n = None
    onset: set[int] = set()
    dontcare: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("."):
            word, *args = line.split()
            if word == ".i":
                if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                    raise ParseError("bad_directive", f"bad input count in {line!r}", lineno)
                n = int(args[0])
            elif word == ".o":
                if args != ["1"]:
                    raise ParseError("multi_output", f"only single-output PLA is supported, got {line!r}", lineno)
            elif word == ".e" or word == ".end":
                break
            elif word in (".p", ".ilb", ".ob"):
                pass
            elif word == ".type":
                if args not in (["f"], ["fd"]):
                    raise ParseError("bad_directive", f"unsupported PLA type {line!r}", lineno)
            else:
                raise ParseError("bad_directive", f"unsupported directive {word!r}", lineno)
            continue
        if n is None:
            raise ParseError("missing_inputs", "cube line before .i declaration", lineno)
        parts = line.split()
        if len(parts) == 2:
            ins, out = parts
        elif len(parts) == 1 and len(line) == n + 1:
            ins, out = line[:n], line[n:]
        else:
            raise ParseError("bad_cube", f"expected '<inputs> <output>', got {line!r}", lineno)
        if len(ins) != n:
            raise ParseError("bad_width", f"cube {ins!r} has width {len(ins)}, expected {n}", lineno)
        if set(ins) - set("01-"):
            raise ParseError("bad_char", f"cube {ins!r} has characters outside 0/1/-", lineno)
        if out not in ("1", "-", "0", "~"):
            raise ParseError("bad_char", f"output {out!r} must be one of 1, -, 0", lineno)
        if out in ("0", "~"):
            continue
        target = onset if out == "1" else dontcare
        target.update(expand_minterms(Implicant.from_string(ins)))
    if n is None:
        raise ParseError("missing_inputs", "no .i declaration", None)
    return ProblemSpec.from_sets(n, onset, dontcare - onset)


def emit_term(imp: Implicant, names: list[str]) -> str:
    parts = []
    for var in range(imp.n):
        lit = imp.literal(var)
        if lit == 1:
            parts.append(names[var])
        elif lit == 0:
            parts.append(names[var] + "'")
    return "".join(parts) or "1"


def emit_expression(cover: Cover, naming: VariableNaming | None = None) -> str:
    naming = naming or VariableNaming()
    names = naming.names(cover.n)
    if cover.constant is not None:
        return str(cover.constant)
    return " + ".join(emit_term(imp, names) for imp in cover)


def emit_pla(cover: Cover) -> str:
    lines = [f".i {cover.n}", ".o 1", f".p {len(cover)}"]
    lines += [f"{imp.to_string('-')} 1" for imp in cover]
    lines.append(".e")
    return "\n".join(lines) + "\n"


def report_dict(report: MinimizeReport) -> dict:
    terms, literals = report.cost
    p = report.problem
    return {
        "problem": {"vars": p.n, "onset": list(p.onset), "dontcare": list(p.dontcare)},
        "primes": [str(i) for i in report.primes],
        "essentials": [str(i) for i in report.essentials],
        "reduced_chart": {
            "columns": list(report.reduced.columns),
            "rows": [str(i) for i in report.reduced.rows],
        },
        "cover": [str(i) for i in report.cover],
        "cost": {"terms": terms, "literals": literals},
    }


def emit_json(report: MinimizeReport) -> str:
    return json.dumps(report_dict(report), indent=2) + "\n"


def _chart_lines(chart, title: str) -> list[str]:
    lines = [title]
    if chart.empty:
        return lines + ["  (empty)"]
    width = max(len(str(c)) for c in chart.columns)
    label = max(len(str(r)) for r in chart.rows) if chart.rows else 0
    lines.append("  " + " " * label + " " + " ".join(str(c).rjust(width) for c in chart.columns))
    for row, marks in zip(chart.rows, chart.marks):
        cells = (("*" if hit else ".").rjust(width) for hit in marks)
        lines.append(f"  {str(row).ljust(label)} " + " ".join(cells))
    return lines


def format_trace(report: MinimizeReport) -> str:
    """Human-readable walk through the reduction columns and charts."""
    lines = []
    for col in report.columns:
        lines.append(f"Column {col.index}")
        for g, group in enumerate(col.groups):
            for imp in group:
                members = ",".join(map(str, expand_minterms(imp)))
                tick = " v" if imp in col.ticked else ""
                lines.append(f"  [{g}] {members:<20} {imp}{tick}")
    lines.append("Prime implicants: " + ", ".join(map(str, report.primes)))
    lines += _chart_lines(report.chart, "PI chart")
    counts = report.chart.coverage_count
    lines.append("Coverage counts: " + ", ".join(f"{c}:{k}" for c, k in counts.items()))
    lines.append("Essential PIs: " + ", ".join(map(str, report.essentials)))
    lines += _chart_lines(report.reduced, "Reduced PI chart")
    return "\n".join(lines) + "\n"
