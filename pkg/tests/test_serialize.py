"""JSON/JSONL/CSV round-trips and the reader's failure diagnostics."""

import json
from fractions import Fraction

import numpy as np
import pytest

from jetlab import (
    DerivativeOracle,
    JetPoint,
    ParseError,
    Polynomial,
    SplitConfig,
    StructureError,
    cantor_axis_set,
    dyadic_plan,
    estimate_dimension,
    estimate_from_json,
    estimate_to_json,
    oracle,
    point_from_json,
    point_to_json,
    read_counts_csv,
    read_set,
    smoothfn_from_json,
    smoothfn_to_json,
    splitconfig_from_json,
    splitconfig_to_json,
    write_counts_csv,
    write_set,
)


def _round_trip(obj, to_json, from_json):
    return from_json(json.loads(json.dumps(to_json(obj))))


# ---------------------------------------------------------------------------
# scalar-exact round-trips


def test_rational_point_round_trip_is_exact():
    p = JetPoint(2, (Fraction(10**12, 10**12 + 1), Fraction(-7, 3), 0, Fraction(1, 9)))
    assert _round_trip(p, point_to_json, point_from_json) == p


def test_float_point_round_trip_is_exact():
    p = JetPoint(1, (0.1, -1e-300, 3.0000000000000004))
    q = _round_trip(p, point_to_json, point_from_json)
    assert q.coords == p.coords
    assert q.mode == "float"


def test_point_json_rejects_garbage():
    with pytest.raises(ParseError):
        point_from_json({"k": 1, "mode": "rational", "coords": ["sideways", 0, 0]})
    with pytest.raises(ParseError):
        point_from_json({"k": 1, "mode": "imaginary", "coords": [0, 0, 0]})
    with pytest.raises(ParseError):
        point_from_json({"k": 1})


def test_polynomial_round_trip():
    f = Polynomial((Fraction(1, 3), 2, Fraction(-5, 7)))
    g = _round_trip(f, smoothfn_to_json, smoothfn_from_json)
    assert g == f


def test_oracle_round_trip_reproduces_values():
    f = oracle("cos", scale=2.0, shift=0.5)
    g = _round_trip(f, smoothfn_to_json, smoothfn_from_json)
    assert g == f
    xs = np.linspace(-1, 1, 11)
    assert np.array_equal(f.deriv(3, xs), g.deriv(3, xs))


def test_adhoc_oracle_refuses_serialization():
    f = DerivativeOracle("mystery", lambda j, x: 0.0 * np.asarray(x))
    with pytest.raises(StructureError):
        smoothfn_to_json(f)


def test_splitconfig_round_trip():
    cfg = SplitConfig(Polynomial((0, 0, 1)), Fraction(1, 2), 3)
    back = _round_trip(cfg, splitconfig_to_json, splitconfig_from_json)
    assert back == cfg
    assert isinstance(back.t, Fraction)


# ---------------------------------------------------------------------------
# point-cloud files


def test_set_file_round_trip(tmp_path):
    s = cantor_axis_set(1, 0.631, 8, axis="u0", t=0.5)
    path = tmp_path / "set.jsonl"
    write_set(s, path)
    back = read_set(path)
    assert back.k == s.k
    assert np.array_equal(back.coords, s.coords)
    assert back.meta["construction"] == s.meta["construction"]
    assert back.meta["nominal_dim"] == s.meta["nominal_dim"]


def test_set_reader_reports_bad_header(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"format": "something-else"}\n')
    with pytest.raises(ParseError, match="line 1"):
        read_set(path)
    path.write_text("not json\n")
    with pytest.raises(ParseError, match="line 1"):
        read_set(path)


def test_set_reader_reports_truncation(tmp_path):
    s = cantor_axis_set(1, 0.5, 4)
    path = tmp_path / "set.jsonl"
    write_set(s, path)
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[:9]) + "\n")
    with pytest.raises(ParseError, match="line 10: truncated"):
        read_set(path)


def test_set_reader_reports_malformed_row(tmp_path):
    s = cantor_axis_set(1, 0.5, 4)
    path = tmp_path / "set.jsonl"
    write_set(s, path)
    lines = path.read_text().splitlines()
    lines[2] = '[0.0, "x", 0.0]'
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ParseError, match="line 3"):
        read_set(path)


def test_set_reader_reports_trailing_data(tmp_path):
    s = cantor_axis_set(1, 0.5, 4)
    path = tmp_path / "set.jsonl"
    write_set(s, path)
    with open(path, "a") as fh:
        fh.write("[0.0, 0.0, 0.0]\n")
    with pytest.raises(ParseError, match="trailing data"):
        read_set(path)


# ---------------------------------------------------------------------------
# estimates and counts


def test_estimate_round_trip():
    s = cantor_axis_set(1, 0.631, 12)
    est = estimate_dimension(s, dyadic_plan(2, 8))
    back = estimate_from_json(json.loads(json.dumps(estimate_to_json(est))))
    assert back == est


def test_counts_csv_round_trip(tmp_path):
    counts = [(0.25, 12), (0.125, 31), (2.0 ** -13, 1021)]
    path = tmp_path / "counts.csv"
    write_counts_csv(counts, path)
    assert read_counts_csv(path) == counts


def test_counts_csv_bad_header(tmp_path):
    path = tmp_path / "counts.csv"
    path.write_text("a,b\n0.5,3\n")
    with pytest.raises(ParseError, match="header"):
        read_counts_csv(path)
    path.write_text("epsilon,count\n0.5,three\n")
    with pytest.raises(ParseError, match="line 2"):
        read_counts_csv(path)
