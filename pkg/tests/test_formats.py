import json
import re
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings, strategies as st

from conftest import convex, straight_plane
from gtwist.construct import random_gt, random_gt_word, twisted
from gtwist.cylinder import extract_sweep_word
from gtwist.drawing import DrawingError, crossing_set
from gtwist.formats import (RenderStyle, drawing_to_json, export_crossings, parse_crossings,
                            parse_drawing, parse_word, render_svg, serialize_drawing,
                            serialize_report, serialize_word)
from gtwist.triangles import Level, analyze_triangles, verify_suite

@pytest.mark.parametrize("make", [lambda: twisted(6), lambda: convex(5),
                                  lambda: random_gt(7, 3)])
def test_drawing_round_trip(make):
    d = make()
    text = serialize_drawing(d)
    d2 = parse_drawing(text)
    assert d2 == d
    assert serialize_drawing(d2) == text


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10**6))
def test_word_round_trip(n, seed):
    w = random_gt_word(n, seed)
    text = serialize_word(w)
    assert parse_word(text) == w
    assert serialize_word(parse_word(text)) == text


def test_crossings_round_trip():
    cs = crossing_set(random_gt(7, 1))
    text = export_crossings(cs)
    assert parse_crossings(text) == cs
    assert export_crossings(parse_crossings(text)) == text


def test_rational_strings():
    obj = drawing_to_json(twisted(4))
    assert obj["vertices"][0] == {"id": 1, "x": "1/5", "y": "10/9"}


def _bad(mutate):
    obj = drawing_to_json(convex(4))
    mutate(obj)
    with pytest.raises(DrawingError) as err:
        parse_drawing(json.dumps(obj))
    return err.value


def test_rational_parse_error():
    def f(o):
        o["vertices"][1]["x"] = "1/0"
    err = _bad(f)
    assert err.code == "RATIONAL_PARSE_ERROR"
    assert "$.vertices[1].x" in str(err)


def test_duplicate_edge():
    err = _bad(lambda o: o["edges"].append(dict(o["edges"][0])))
    assert err.code == "SCHEMA_ERROR" and "duplicate edge 1-2" in str(err)


def test_duplicate_vertex():
    err = _bad(lambda o: o["vertices"].append(dict(o["vertices"][0])))
    assert err.code == "SCHEMA_ERROR"


@pytest.mark.parametrize("mutate", [
    lambda o: o.pop("n"),
    lambda o: o.update(mode="torus"),
    lambda o: o.update(n=True),
    lambda o: o["edges"][0].update(polyline=[["0", "0"]]),
    lambda o: o["edges"][0].update(v=o["edges"][0]["u"]),
    lambda o: o["vertices"][0].update(x=0),
])
def test_schema_errors(mutate):
    assert _bad(mutate).code == "SCHEMA_ERROR"


def test_bad_json_text():
    with pytest.raises(DrawingError) as err:
        parse_drawing("{not json")
    assert err.value.code == "SCHEMA_ERROR"
    with pytest.raises(DrawingError):
        parse_word('{"n": 3, "pi0": ["1-1"], "events": []}')


def test_report_json():
    text = serialize_report(verify_suite(twisted(5), Level.GT))
    obj = json.loads(text)
    assert obj["G8"] == {"pass": True}
    assert set(obj) == {f"S{k}" for k in range(1, 8)} | {f"G{k}" for k in range(1, 9)}


def _marks(svg, cls):
    root = ET.fromstring(svg)
    return [el for el in root.iter() if el.get("class") == cls]


def test_svg_twisted_has_one_mark_per_crossing():
    d = twisted(6)
    svg = render_svg(d, analyze_triangles(d))
    assert len(_marks(svg, "crossing")) == 15
    assert len({el.get("data-edge") for el in _marks(svg, "edge")}) == 15
    assert len(_marks(svg, "empty")) > 0
    assert _marks(svg, "ray")
    pairs = {el.get("data-pair") for el in _marks(svg, "crossing")}
    assert pairs == set(crossing_set(d).export().splitlines())


def test_svg_is_deterministic():
    d = random_gt(7, 4)
    assert render_svg(d, analyze_triangles(d)) == render_svg(d, analyze_triangles(d))
    strip = RenderStyle(unroll=True)
    assert render_svg(d, None, strip) == render_svg(d, None, strip)


def test_svg_k3():
    svg = render_svg(twisted(3))
    assert _marks(svg, "crossing") == []
    assert {el.get("data-edge") for el in _marks(svg, "edge")} == {"1-2", "1-3", "2-3"}
    ET.fromstring(render_svg(straight_plane([(0, 0), (1, 0), (0, 1)])))


def test_svg_numbers_are_short():
    svg = render_svg(random_gt(6, 2))
    nums = re.findall(r"-?\d+\.\d+", svg)
    assert nums and all(len(x.replace("-", "").replace(".", "")) <= 9 for x in nums)


@pytest.mark.parametrize("kw", [{"width": 0}, {"height": -5}, {"vertex_radius": 0},
                                {"edge_width": -1}])
def test_bad_render_style(kw):
    with pytest.raises(ValueError):
        RenderStyle(**kw)


def test_extracted_word_serializes():
    w = extract_sweep_word(twisted(5))
    obj = json.loads(serialize_word(w))
    assert obj["n"] == 5 and len(obj["pi0"]) == 10
    assert sum(1 for ev in obj["events"] if "cross" in ev) == 5
