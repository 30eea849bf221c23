import json
import random

import pytest

from conftest import EXAMPLE, EXAMPLE_SPEC
from quinemc.cover import Cover, minimize
from quinemc.cube import Implicant, ProblemSpec
from quinemc.errors import DomainError, ParseError
from quinemc.formats import (
    VariableNaming,
    emit_expression,
    emit_json,
    emit_pla,
    format_trace,
    parse_minterm_spec,
    parse_pla,
)

I = Implicant.from_string
EXAMPLE_COVER = Cover(4, (I("X0X1"), I("X1X0"), I("XX01")))


def test_parse_minterm_spec_example():
    assert parse_minterm_spec(EXAMPLE_SPEC) == EXAMPLE


def test_parse_minterm_spec_simple():
    assert parse_minterm_spec("vars=1; minterms=1; dontcares=") == ProblemSpec(1, (1,))
    assert parse_minterm_spec("minterms=1, 2 ;vars=2") == ProblemSpec(2, (1, 2))


@pytest.mark.parametrize(
    "text, kind, position",
    [
        ("vars=2; minterms=3,1; dontcares=", "not_ascending", 19),
        ("vars=2; minterms=1,1; dontcares=", "not_ascending", 19),
        ("vars=2; minterms=1,4; dontcares=", "out_of_range", 19),
        ("vars=2; minterms=1,2; dontcares=3", "dontcare_not_listed", 32),
        ("vars=0; minterms=; dontcares=", "bad_var_count", 5),
        ("vars=-1; minterms=1", "bad_var_count", 5),
        ("vars=2; minterms=1,2; dontcares=1,2", "empty_onset", 17),
        ("vars=2; minterms=; dontcares=", "empty_onset", 17),
        ("vars=2; minterms=a", "syntax", 17),
        ("vars=2", "syntax", 6),
        ("vars=2; minterms=1; colour=red", "syntax", 20),
        ("vars=2; vars=3; minterms=1", "syntax", 8),
    ],
)
def test_parse_minterm_spec_errors(text, kind, position):
    with pytest.raises(ParseError) as info:
        parse_minterm_spec(text)
    assert info.value.kind == kind
    assert info.value.position == position


def test_parse_minterm_spec_allow_empty_onset():
    assert parse_minterm_spec("vars=2; minterms=1,2; dontcares=1,2", allow_empty_onset=True) == ProblemSpec(2, (), (1, 2))


def test_parse_pla_example_cubes():
    text = ".i 4\n.o 1\n.p 3\n-0-1 1\n-1-0 1\n--01 1\n.e\n"
    assert parse_pla(text) == ProblemSpec(4, (1, 3, 4, 5, 6, 9, 11, 12, 13, 14))


def test_parse_pla_single():
    assert parse_pla(".i 1\n1 1\n") == ProblemSpec(1, (1,))


def test_parse_pla_dontcare_and_overlap():
    text = "# comment\n.i 3\n.o 1\n.type fd\n1-- 1\n11- -\n0-0 -\n000 0\n.e\n"
    assert parse_pla(text) == ProblemSpec(3, (4, 5, 6, 7), (0, 2))


@pytest.mark.parametrize(
    "text, kind",
    [
        (".i 2\n.o 2\n01 1\n", "multi_output"),
        (".i 2\n011 1\n", "bad_width"),
        (".i 2\n0 1 1\n.e", "bad_cube"),
        (".i 3\n01 1\n", "bad_width"),
        (".i 2\n0a 1\n", "bad_char"),
        (".i 2\n01 x\n", "bad_char"),
        ("01 1\n", "missing_inputs"),
        (".o 1\n", "missing_inputs"),
        (".i 2\n.kiss\n", "bad_directive"),
        (".i 2\n.type r\n", "bad_directive"),
    ],
)
def test_parse_pla_errors(text, kind):
    with pytest.raises(ParseError) as info:
        parse_pla(text)
    assert info.value.kind == kind


def test_pla_round_trip_example():
    report = minimize(EXAMPLE)
    again = parse_pla(emit_pla(report.cover))
    assert set(again.onset) == report.cover.covered_minterms()
    spec = ProblemSpec(4, (1, 3, 4, 5, 6, 9, 11, 12, 13, 14))
    assert parse_pla(emit_pla(minimize(spec).cover)) == spec


def test_emit_expression():
    assert emit_expression(EXAMPLE_COVER) == "B'D + BD' + C'D"
    assert emit_expression(Cover(4, (I("XXXX"),))) == "1"
    assert emit_expression(Cover(4)) == "0"
    assert emit_expression(Cover(4, (I("0100"),))) == "A'BC'D'"
    assert emit_expression(Cover(3, (I("1X0"),)), VariableNaming("indexed")) == "x0x2'"


def test_naming_limits():
    with pytest.raises(DomainError):
        emit_expression(Cover(27, (Implicant(27, 1, 0),)))
    assert len(VariableNaming("indexed").names(40)) == 40
    with pytest.raises(DomainError):
        VariableNaming("greek")


def test_emit_expression_injective_on_small_covers():
    seen = {}
    cubes = [Implicant.from_string(a + b) for a in "01X" for b in "01X"]
    for i, a in enumerate(cubes):
        for b in cubes[i + 1 :]:
            cover = Cover(2, (a, b))
            if cover.constant is not None:
                continue
            text = emit_expression(cover)
            assert seen.setdefault(text, cover) == cover


def test_emit_pla():
    assert emit_pla(EXAMPLE_COVER) == ".i 4\n.o 1\n.p 3\n-0-1 1\n-1-0 1\n--01 1\n.e\n"
    assert emit_pla(Cover(4)) == ".i 4\n.o 1\n.p 0\n.e\n"
    assert emit_pla(Cover(4, (I("XXXX"),))) == ".i 4\n.o 1\n.p 1\n---- 1\n.e\n"


def test_emit_json_example():
    doc = json.loads(emit_json(minimize(EXAMPLE)))
    assert list(doc) == ["problem", "primes", "essentials", "reduced_chart", "cover", "cost"]
    assert doc["primes"] == ["0X0X", "0XX1", "X0X1", "XX01", "01XX", "X10X", "X1X0"]
    assert doc["essentials"] == ["X0X1", "X1X0"]
    assert doc["reduced_chart"] == {"columns": [5, 13], "rows": ["0X0X", "0XX1", "XX01", "01XX", "X10X"]}
    assert doc["cover"] == ["X0X1", "X1X0", "XX01"]
    assert doc["cost"] == {"terms": 3, "literals": 6}
    assert doc["problem"] == {"vars": 4, "onset": [4, 5, 6, 9, 11, 12, 13, 14], "dontcare": [0, 1, 3, 7]}


def test_emit_json_constant_zero():
    doc = json.loads(emit_json(minimize(ProblemSpec(3, (), (2,)))))
    assert doc["cover"] == [] and doc["cost"] == {"terms": 0, "literals": 0}


def test_pla_round_trip_random_covers():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 6)
        cubes = {Implicant.from_string("".join(rng.choice("01X") for _ in range(n))) for _ in range(rng.randint(0, 5))}
        cover = Cover(n, tuple(sorted(cubes, key=Implicant.sort_key)))
        assert set(parse_pla(emit_pla(cover)).onset) == cover.covered_minterms()


def test_format_trace_mentions_every_stage():
    text = format_trace(minimize(EXAMPLE))
    for needle in ("Column 0", "Column 2", "0,1,4,5", "Essential PIs: X0X1, X1X0", "Reduced PI chart", "11:1"):
        assert needle in text
