import json
import random

from mpmath import mp

from arithsurf.config import default_config
from arithsurf.laws import (
    verify_horizontal_law,
    verify_point_law,
    verify_vertical_law,
)
from arithsurf.selftest import random_pair, random_point
from arithsurf.surface import parse_curve, parse_function, parse_point

F = parse_function


def test_point_law_fixture():
    r = verify_point_law(parse_point("2:t+1"), F("1*(t^2+1)^1"), F("1*(t-1)^1"))
    assert r.verdict == "pass" and r.exact_sum == 0
    got = {(i["branch"], i["value"]) for i in r.items}
    assert got == {("V:2", 0), ("H:t-1", -1), ("H:t^2+1", 1)}


def test_point_law_at_fiber_infinity():
    # 2t-1 meets the infinity section over 2; the INF curve enters the sum
    r = verify_point_law(parse_point("2:inf"), F("1*(2*t-1)^1"), F("2"))
    assert r.verdict == "pass" and r.exact_sum == 0
    assert any(i["branch"] == "INF" for i in r.items)


def test_point_law_unsupported_is_inconclusive():
    r = verify_point_law(parse_point("2:t+1"), F("1*(2*t^2+t+1)^1"), F("3"))
    assert r.verdict == "inconclusive"
    assert "UnsupportedOrder" in r.reason


def test_vertical_law_fixture():
    r = verify_vertical_law(5, F("5"), F("1*(t^2+2)^1"))
    assert r.verdict == "pass" and r.exact_sum == 0
    got = [(i["place"], i["weighted"]) for i in r.items]
    assert ("5:t^2+2", 2) in got and ("5:inf", -2) in got


def test_vertical_law_weights_use_degrees():
    r = verify_vertical_law(3, F("3"), F("1*(t^2+1)^1"))
    # t^2+1 inert mod 3: one degree-2 point with weight 2, balanced at infinity
    degs = {i["place"]: i["deg"] for i in r.items}
    assert degs["3:t^2+1"] == 2
    assert r.exact_sum == 0


def test_horizontal_law_split_fixture():
    r = verify_horizontal_law(parse_curve("H:t"), F("1*(t)^1"), F("2"))
    assert r.verdict == "pass"
    assert r.finite_part == {"2": 1}
    # finite part log 2 is cancelled exactly by the real place at theta = 0
    assert abs(mp.mpf(r.numeric_sum)) == 0


def test_horizontal_law_ramified_fixture():
    """t^2+1: the finite contribution +log 2 at the ramified prime is killed
    by the conjugate archimedean pair at theta = +-i (each -log sqrt(2))."""
    r = verify_horizontal_law(
        parse_curve("H:t^2+1"), F("1*(t^2+1)^1"), F("1*(t-1)^1")
    )
    assert r.verdict == "pass"
    assert r.finite_part == {"2": 1}
    arch = [i for i in r.items if i["log_base"] == "e"]
    assert len(arch) == 1 and arch[0]["weight"] == 2


def test_horizontal_law_infinity_section():
    r = verify_horizontal_law(parse_curve("INF"), F("1*(t)^1"), F("2"))
    assert r.verdict in ("pass", "inconclusive")
    if r.verdict == "pass":
        assert r.note is not None  # second chart marker


def test_report_schema_and_json():
    r = verify_horizontal_law(parse_curve("H:t^2-2"), F("10 * (t)^1"), F("3 * (t-1)^2"))
    doc = r.to_dict()
    for key in ("law", "subject", "f", "g", "items", "verdict", "config"):
        assert key in doc
    for item in doc["items"]:
        assert {"place", "branch", "value", "log_base"} <= set(item)
    json.dumps(doc)  # serializable


def test_randomized_all_three_laws():
    rng = random.Random(20260826)
    cfg = default_config()
    curves = [parse_curve(s) for s in ("H:t", "H:t-2", "H:t^2+1", "H:t^2-2", "H:t^3-2")]
    for i in range(30):
        f, g = random_pair(rng)
        rp = verify_point_law(random_point(rng), f, g, config=cfg)
        assert rp.verdict in ("pass", "inconclusive")
        rv = verify_vertical_law((2, 3, 5, 7, 101)[i % 5], f, g, config=cfg)
        assert rv.verdict == "pass"
        rh = verify_horizontal_law(curves[i % 5], f, g, config=cfg)
        assert rh.verdict in ("pass", "inconclusive")
        if rh.verdict == "pass":
            assert abs(mp.mpf(rh.numeric_sum)) <= cfg.tolerance


def test_swap_f_g_still_sums_to_zero():
    rng = random.Random(5150)
    for _ in range(10):
        f, g = random_pair(rng)
        pt = random_point(rng)
        a = verify_point_law(pt, f, g)
        b = verify_point_law(pt, g, f)
        if a.verdict == "pass" and b.verdict == "pass":
            assert a.exact_sum == 0 and b.exact_sum == 0
