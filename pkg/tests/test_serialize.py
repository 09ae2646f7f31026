"""Deterministic text output: float formatting, sentinels, line endings."""
import json

import pytest

from isingcusp.serialize import DIVERGENT, fmt_float, render, render_csv, render_json


def test_float_round_trip():
    for x in (0.1, 1.1507282898071237, -0.13081203594113696, 1e-300, 3.0):
        assert float(fmt_float(x)) == x


def test_negative_zero_normalized():
    assert fmt_float(-0.0) == "0"
    assert fmt_float(0.0) == "0"


def test_csv_shape():
    rows = [[1.0, None, "x", True, 7]]
    out = render_csv(["a", "b", "c", "d", "e"], rows)
    assert out == "a,b,c,d,e\n1,,x,1,7\n"


def test_csv_uses_lf_only():
    out = render_csv(["a"], [[1.0], [2.0]])
    assert "\r" not in out
    assert out.endswith("\n")


def test_json_records():
    out = render_json(["m", "chi"], [[0.5, None], [0.1, 2.0]])
    data = json.loads(out)
    assert data == [{"m": 0.5, "chi": None}, {"m": 0.1, "chi": 2.0}]
    assert out.endswith("\n")


def test_render_dispatch():
    assert render("csv", ["a"], [[1.0]]).startswith("a\n")
    assert json.loads(render("json", ["a"], [[1.0]])) == [{"a": 1.0}]
    with pytest.raises(ValueError):
        render("xml", ["a"], [[1.0]])


def test_divergent_sentinel_exported():
    assert DIVERGENT == "divergent"


def test_determinism():
    rows = [[0.1 * i, -0.0, None] for i in range(50)]
    a = render_csv(["x", "y", "z"], rows)
    b = render_csv(["x", "y", "z"], rows)
    assert a == b
