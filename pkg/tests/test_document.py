from fractions import Fraction as F

import pytest

from epscert.document import (
    load_problem,
    parse_number,
    parse_number_list,
    parse_problem,
    problem_to_document,
)
from epscert.errors import DocumentError

from conftest import FIXTURES


def test_load_halfplane(halfplane):
    assert load_problem(FIXTURES / "halfplane.json") == halfplane


def test_defaults_make_linear_objectives(corner):
    assert load_problem(FIXTURES / "corner.json") == corner


@pytest.mark.parametrize("text, value", [
    ("1/3", F(1, 3)), ("0.1", F(1, 10)), ("-0.25", F(-1, 4)), (" 7 ", F(7)), ("1e-3", F(1, 1000)),
])
def test_parse_number_exact(text, value):
    assert parse_number(text) == value


def test_json_decimals_are_exact():
    doc = '{"n": 1, "objectives": [{"a": [0.1], "alpha": "1/3"}], "constraints": {"C": [[1]], "d": [0.3]}}'
    P = parse_problem(doc)
    assert P.objectives[0].a == (F(1, 10),)
    assert P.objectives[0].alpha == F(1, 3)
    assert P.feasible_set.d == (F(3, 10),)


def test_number_list():
    assert parse_number_list("1/2, 0,0.75") == (F(1, 2), 0, F(3, 4))
    assert parse_number_list("") == ()
    with pytest.raises(DocumentError):
        parse_number_list("1,x")


def test_roundtrip_through_document(halfplane):
    import json

    text = json.dumps(problem_to_document(halfplane))
    assert parse_problem(text) == halfplane


def test_syntax_error_has_line_and_column():
    with pytest.raises(DocumentError) as info:
        parse_problem('{\n  "n": 2,\n  "objectives": [,]\n}')
    assert info.value.position == (3, 18)
    assert "line 3, column 18" in str(info.value)


@pytest.mark.parametrize("doc, where", [
    ('{"objectives": []}', "document"),
    ('{"n": 0, "objectives": []}', "n"),
    ('{"n": 1, "objectives": []}', "objectives"),
    ('{"n": 1, "objectives": [{"a": [1, 2]}]}', "objectives[0].a"),
    ('{"n": 1, "objectives": [{"a": [true]}]}', "objectives[0].a[0]"),
    ('{"n": 1, "objectives": [{"a": ["1/0"]}]}', "objectives[0].a[0]"),
    ('{"n": 1, "objectives": [{"a": [1]}], "constraints": {"C": [[1, 1]], "d": [0]}}', "constraints.C[0]"),
    ('{"n": 1, "objectives": [{"a": [1]}], "constraints": {"C": [[1]], "d": []}}', "constraints.d"),
    ('{"n": 1, "objectives": [{"a": [1]}], "constraints": {"d": []}}', "constraints"),
])
def test_schema_errors_carry_path(doc, where):
    with pytest.raises(DocumentError) as info:
        parse_problem(doc)
    assert info.value.position == where


def test_missing_constraints_means_whole_space():
    P = parse_problem('{"n": 2, "objectives": [{"a": [1, 0]}]}')
    assert P.feasible_set.p == 0
    assert P.feasible_set.contains((F(-10**9), 5))
