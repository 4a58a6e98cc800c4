import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flagcover import jsonio
from flagcover.cover3 import synth3
from flagcover.exactalg import GF, QQ
from flagcover.flags import FlagTuple, random_flag, random_tuple
from flagcover.gensets import LayerRef
from flagcover.prism import build_G
from flagcover.svg import prism_svg

NS = "{http://www.w3.org/2000/svg}"


def test_field_encoding():
    assert jsonio.field_to_json(QQ) == "rational"
    assert jsonio.field_to_json(GF(7)) == {"prime": 7}
    assert jsonio.field_from_json({"prime": 7}) == GF(7)
    assert jsonio.parse_field_option("fp:3") == GF(3)
    assert jsonio.parse_field_option("rational") == QQ
    for bad in ("fp:9", "reals"):
        with pytest.raises(ValueError):
            jsonio.parse_field_option(bad)
    with pytest.raises(ValueError):
        jsonio.field_from_json("complex")


def test_scalars():
    assert jsonio.vector_to_json(QQ, (Fraction(-3, 4), Fraction(2))) == ["-3/4", "2"]
    assert jsonio.vector_from_json(QQ, ["-3/4", 2]) == (Fraction(-3, 4), Fraction(2))
    assert jsonio.vector_from_json(GF(5), ["4"]) == (4,)
    with pytest.raises(ValueError):
        jsonio.vector_from_json(GF(5), ["5"])


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.sampled_from([None, 2, 5, 7]), st.integers(0, 10**6))
def test_flags_round_trip(m, d, p, seed):
    field = QQ if p is None else GF(p)
    t = random_tuple(m, d, field, seed)
    text = jsonio.dumps(jsonio.flags_to_json(t))
    back = jsonio.flags_from_json(jsonio.json.loads(text))
    assert back == t
    assert jsonio.dumps(jsonio.flags_to_json(back)) == text


def test_flags_shape_checked():
    obj = jsonio.flags_to_json(random_tuple(2, 3, QQ, seed=0))
    obj["flags"][1] = obj["flags"][1][:2]
    with pytest.raises(ValueError):
        jsonio.flags_from_json(obj)


def test_genset_round_trip(generic3, tmp_path):
    gs = synth3(generic3)
    obj = jsonio.genset_to_json(gs, QQ)
    assert obj["sets"][0]["layers"][0]["flag"] in "UVW"
    path = tmp_path / "g.json"
    jsonio.save(path, obj)
    back = jsonio.genset_from_json(jsonio.load(path), QQ)
    assert back.sets == gs.sets
    obj["size"] += 1
    with pytest.raises(ValueError):
        jsonio.genset_from_json(obj, QQ)


def test_layer_names():
    assert jsonio.layer_to_json(LayerRef(3, 2)) == {"flag": "X", "level": 2}
    assert jsonio.layer_from_json({"flag": "W", "level": 4}) == LayerRef(2, 4)


def test_svg_generic(generic3):
    root = ET.fromstring(prism_svg(generic3))
    assert root.tag == NS + "svg"
    assert len(root.findall(f".//{NS}circle")) == 9
    lines = root.findall(f".//{NS}line") + root.findall(f".//{NS}path")
    g = build_G(generic3)
    assert len(lines) == len(g.gtilde_edges())
    dashed = [e for e in lines if e.get("stroke-dasharray")]
    assert len(dashed) == len(g.gtilde_edges()) - len(g.g_edges())
    # the only triangle is incompatible, so nothing is bold
    assert not any(e.get("stroke-width") == "3" for e in lines)
    # WU edges are arcs
    assert len(root.findall(f".//{NS}path")) >= 3


def test_svg_bold_triangles():
    f = random_flag(2, QQ, seed=0)
    root = ET.fromstring(prism_svg(FlagTuple.of(f, f, f)))
    bold = [e for e in root.iter() if e.get("stroke-width") == "3"]
    assert len(bold) == 6
    labels = {e.text for e in root.iter(NS + "text")}
    assert {"U1", "V2", "W1", "U", "V", "W"} <= labels
