import json

import pytest
from hypothesis import given, settings, strategies as st

from brauer_dessins.dessin import NotTransitiveError, example_3, from_cycles, polygon, trivial
from brauer_dessins.permutation import Permutation
from brauer_dessins.workbench import (
    DessinDocument,
    DessinParseError,
    document_of,
    format_dessin,
    format_document,
    parse_cycles,
    parse_document,
    parse_dessin,
    render_report,
    report_data,
)

EXAMPLE_TEXT = "n = 5\nsigma = (2 3 4)\nalpha = (1 2)(3 5 4)\n"


def test_parse_worked_example():
    d = parse_dessin(EXAMPLE_TEXT)
    assert d == from_cycles(5, [(2, 3, 4)], [(1, 2), (3, 5, 4)])
    assert d.phi.cycle_string() == "(1 4 5 2)"


def test_parse_trivial_and_fixed_points():
    assert parse_dessin("n = 1\nsigma =\nalpha =\n") == trivial()
    explicit = parse_dessin("n = 5\nsigma = (1)(2 3 4)(5)\nalpha = (1 2)(3 5 4)\n")
    assert explicit == parse_dessin(EXAMPLE_TEXT)


def test_parse_comments_commas_and_whitespace():
    text = "# header\n  n=5   # five\n\nname = demo\nsigma=( 2, 3 ,4 )\nalpha = (1 2)  (3 5 4)\n"
    assert parse_dessin(text) == parse_dessin(EXAMPLE_TEXT)
    assert parse_document(text).name == "demo"


def test_repeated_label_position():
    with pytest.raises(DessinParseError) as exc:
        parse_dessin("n = 3\nsigma = (1 2)(2 3)\nalpha =\n")
    assert (exc.value.line, exc.value.column) == (2, 15)
    assert "repeated label 2" in str(exc.value)


@pytest.mark.parametrize(
    "text, line, column, fragment",
    [
        ("n = 3\nsigma = (1 4)\nalpha =\n", 2, 12, "out of range"),
        ("n = 3\nsigma = (1 (2)\nalpha =\n", 2, 12, "nested"),
        ("n = 3\nsigma = 1 2)\nalpha =\n", 2, 9, "outside parentheses"),
        ("n = 3\nsigma = (1 2))\nalpha =\n", 2, 14, "unmatched"),
        ("n = 3\nsigma = (1 2\nalpha =\n", 2, 13, "unclosed"),
        ("n = 3\nsigma = (1 x)\nalpha =\n", 2, 12, "unexpected character"),
        ("sigma = (1 2)\nn = 2\nalpha =\n", 1, 1, "must come first"),
        ("n = 3\nphi = (1 2 3)\n", 2, 1, "phi is derived"),
        ("n = 3\nsigma =\nsigma =\nalpha =\n", 3, 1, "duplicate"),
        ("n = 3\nsigma\n", 2, 1, "key = value"),
        ("n = zero\nsigma =\nalpha =\n", 1, 4, "positive integer"),
        ("", 1, 1, "missing 'n"),
        ("n = 2\nsigma = (1 2)\n", 2, 1, "missing 'alpha"),
    ],
)
def test_parse_errors(text, line, column, fragment):
    with pytest.raises(DessinParseError) as exc:
        parse_dessin(text)
    assert (exc.value.line, exc.value.column) == (line, column)
    assert fragment in exc.value.message


def test_not_transitive_input():
    with pytest.raises(NotTransitiveError):
        parse_dessin("n = 4\nsigma = (1 2)\nalpha = (3 4)\n")


def test_parse_cycles_offsets():
    assert parse_cycles("(1 2)(3)", 3) == [(1, 2), (3,)]
    assert parse_cycles("   ", 3) == []
    with pytest.raises(DessinParseError) as exc:
        parse_cycles("(1 9)", 3, line=4, column=10)
    assert (exc.value.line, exc.value.column) == (4, 13)


def test_format_examples():
    assert format_dessin(trivial()) == "n = 1\nsigma =\nalpha =\n"
    assert format_dessin(parse_dessin(EXAMPLE_TEXT), name="ex") == "n = 5\nname = ex\nsigma = (2 3 4)\nalpha = (1 2)(3 5 4)\n"


def test_round_trip_canonical_documents():
    for d in (trivial(), polygon(4), example_3()):
        text = format_dessin(d)
        assert format_dessin(parse_dessin(text)) == text
        doc = document_of(d, "x")
        assert parse_document(format_document(doc)) == doc
        assert doc.to_dessin() == d


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(1, n + 1)),
                                                     st.permutations(range(1, n + 1)))))
def test_round_trip_random(args):
    n, s, a = args
    try:
        d = parse_dessin(format_document(DessinDocument(n, Permutation(tuple(s)).cycle_string(),
                                                        Permutation(tuple(a)).cycle_string())))
    except NotTransitiveError:
        return
    assert d.sigma.image == tuple(s) and d.alpha.image == tuple(a)
    assert parse_dessin(format_dessin(d)) == d


def test_report_fields_example_3():
    data = report_data(example_3())
    assert data["basis_count"] == data["dim_formula"] == 34
    assert data["centre"] == {
        "formula_dim": 7, "bruteforce_dim": 7, "bruteforce_available": True, "mismatch": False, "loops": [4],
    }
    assert set(data) >= {"n", "sigma", "alpha", "phi", "passport", "quiver", "relations", "fingerprint",
                         "duality_checks"}
    assert set(data["relations"]) == {"type_one", "type_two", "type_three"}
    assert len(data["relations"]["type_three"]) == 10
    assert data["duality_checks"]["labelled_equal"] and data["duality_checks"]["oriented_op_equal"]
    assert data["quiver"]["arrows"][9] == {"half_edge": 10, "source": [2, 10, 11], "target": [2, 10, 11],
                                           "formal": True}


def test_report_small_cases():
    assert report_data(trivial())["basis_count"] == 2
    rels = report_data(polygon(3))["relations"]
    assert all(len(t) == 2 for pair in rels["type_one"] for t in pair)
    assert all(len(t) == 2 for t in rels["type_three"])


def test_report_bound():
    c = report_data(example_3(), max_dim=10)["centre"]
    assert c["bruteforce_dim"] is None and not c["bruteforce_available"] and not c["mismatch"]


def test_report_deterministic():
    a = render_report(example_3(), "json")
    b = render_report(parse_dessin(format_dessin(example_3())), "json")
    assert a == b
    assert json.loads(a)["n"] == 12


def test_text_report():
    text = render_report(example_3(), "text")
    assert "dim algebra: 34 (formula 34)" in text
    assert "dim centre: formula 7, brute force 7" in text
    assert "a4 a4" in text
    with pytest.raises(ValueError):
        render_report(trivial(), "yaml")
