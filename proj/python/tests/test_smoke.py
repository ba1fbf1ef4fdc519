from fractions import Fraction
import xml.etree.ElementTree as ET

import pytest

import wavesets as ws

SHANNON = "[-2pi,-pi) | [pi,2pi)"


def test_check_shannon_and_interval():
    report = ws.check(SHANNON)
    assert report["schema"] == ws.SCHEMA == 1
    assert report["is_wavelet_set"] is True
    assert ws.rational(report["measure"]) == 2
    bad = ws.check("[0,2pi)")
    assert bad["is_wavelet_set"] is False
    assert bad["dilation"]["ok"] is False


def test_parse_error_carries_position():
    with pytest.raises(ws.ParseError) as err:
        ws.check("[0,2pi")
    assert err.value.line == 1
    assert err.value.column == 7
    assert isinstance(err.value, ValueError)


def test_canonical_round_trip():
    text = ws.canonical("[pi,2pi) | [-2pi,-pi)")
    assert text == ws.canonical(text)
    assert ws.measure(text) == "2"


def test_meyer_and_theorem4_pairs():
    meyer = ws.catalog_get("meyer_pair")
    e, f = meyer["sets"]["E"]["expr"], meyer["sets"]["F"]["expr"]
    assert all(ws.pair(e, f)[k] for k in ("interpolation_pair", "theorem1", "theorem3_i", "domains_equal", "theorem3_ii"))
    t4 = ws.catalog_get("theorem4_pair")
    assert t4["ok"]
    e, f = t4["sets"]["E"]["expr"], t4["sets"]["F"]["expr"]
    v = ws.pair(e, f)
    assert (v["interpolation_pair"], v["theorem1"], v["theorem3_i"], v["domains_equal"], v["theorem3_ii"]) == (
        False,
        False,
        False,
        True,
        True,
    )
    assert ws.sigma_eval(e, f, "33/16pi") == "129/16pi"
    assert ws.domain(e, f)["equal"] is True


def test_lemma5_telescopes():
    out = ws.lemma5("[pi,2pi)", "[-2pi,-pi)", [-1], [-2], -1, 1)
    assert out["ok"]
    assert out["result"]["G"]["expr"] == "[-8/3pi, -2pi) | [-pi, -2/3pi)"
    assert not ws.lemma5("[pi,2pi)", "[-2pi,-pi)", [-1], [2], -1, 1)["ok"]


def test_catalog_and_errors():
    names = [e["name"] for e in ws.catalog_list()]
    assert "pine_tree" in names
    with pytest.raises(ws.DomainError):
        ws.catalog_get("nope")
    assert ws.catalog_get("example10", [2, 1, 1])["params"] == [2, 1, 1]


def test_fuzz_small_campaign():
    s = ws.fuzz(8, first_seed=3)
    assert s["ok"] and s["seeds"] == 8 and s["counterexamples"] == []


def test_render_is_deterministic_svg():
    a = ws.render_1d([("W", SHANNON)])
    assert a == ws.render_1d([("W", SHANNON)])
    assert ET.fromstring(a).tag.endswith("svg")
    sq = ws.render_2d("[-pi,pi)x[-pi,pi)")
    assert sq.count("<rect") == 3
    assert Fraction(ws.measure("[-pi,pi)x[-pi,pi)")) == 4
