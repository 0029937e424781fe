import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from hpairs import io
from hpairs.equation import equation
from hpairs.poly import parse
from hpairs.young import YoungDiagram, build_hpair, family_rays
from strategies import polys, random_hpairs


@settings(max_examples=30)
@given(random_hpairs())
def test_hpair_roundtrip(H):
    doc = io.hpair_to_json(H)
    text = io.dumps(doc)
    H2 = io.parse_hpair(text)
    assert H2.algebra.labels == H.algebra.labels
    assert H2.algebra.products == H.algebra.products
    assert H2.U.same_span(H.U) and H2.w == H.w
    assert equation(H2).f == equation(H).f
    assert io.dumps(io.hpair_to_json(H2)) == text


def test_rationals_are_strings():
    D, B = family_rays((2, 2), (Fraction(1, 3), 2))
    doc = io.hpair_to_json(build_hpair(D, B))
    flat = json.dumps(doc)
    assert '"1/3"' in flat or '"3"' in flat
    for _, _, coords in doc["table"]:
        assert all(isinstance(c, str) for _, c in coords)


def test_float_rejected():
    with pytest.raises(io.FormatError):
        io.read_q(0.5)
    with pytest.raises(io.FormatError):
        io.read_q("1.5")
    assert io.read_q("-3/6") == Fraction(-1, 2)


def test_malformed_hpair():
    with pytest.raises(io.FormatError):
        io.parse_hpair("[1, 2]")
    with pytest.raises(io.FormatError):
        io.parse_hpair('{"dim": 2}')
    with pytest.raises(io.FormatError):
        io.parse_hpair('{"dim": 2, "labels": ["1", "x"], "table": [[1, 1, [[5, "1"]]]], "U": [], "w": ["1"]}')
    with pytest.raises(io.FormatError):
        io.parse_hpair("{not json")


def test_diagram_roundtrip_and_default_b():
    D = YoungDiagram(2, ((3, 1), (1, 2)))
    doc = io.diagram_to_json(D, {(3, 1): Fraction(2), (1, 2): Fraction(-1, 2)})
    assert doc["b"] == {"(1,2)": "-1/2", "(3,1)": "2"}
    D2, B2 = io.diagram_from_json(doc)
    assert D2 == D and B2 == {(3, 1): 2, (1, 2): Fraction(-1, 2)}
    D3, B3 = io.parse_diagram('{"k": 2, "corners": [[3,1],[1,2]], "b": {"( 3, 1 )": "5"}}')
    assert B3 == {(3, 1): 5, (1, 2): 1}
    with pytest.raises(io.FormatError):
        io.parse_diagram('{"k": 2, "corners": [[3,1]], "b": {"3,1": "1"}}')


@given(polys(max_deg=4, max_terms=5))
def test_polynomial_formats(f):
    assert io.poly_from_json(json.loads(io.dumps(io.poly_to_json(f)))) == f


def test_plain_text_polynomial():
    g = io.parse_polynomial("z10*z2 + z2^2\n")
    assert g.vars == ("z2", "z10")
    assert g == parse("z2*z10 + z2^2", ["z2", "z10"])
    with pytest.raises(io.FormatError):
        io.parse_polynomial("z1 +")
