import json

import pytest

from superschur import catalog
from superschur.algebra_file import (
    AlgebraFileError,
    algebra_from_dict,
    dumps,
    parse_algebra_file,
    parse_rational,
    write_algebra_file,
)
from superschur.cli import main
from superschur.core import GradedSubspace


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


@pytest.fixture
def h11(tmp_path, capsys):
    path = tmp_path / "h11.json"
    assert main(["catalog", "heisenberg_even", "--m", "1", "--n", "1", "-o", str(path)]) == 0
    capsys.readouterr()
    return path


@pytest.fixture
def heis(tmp_path):
    data = json.loads(dumps(catalog.heisenberg_lie(1), "H(1)"))
    data["ideal"] = ["z"]
    return write(tmp_path, "heis.json", data)


# -- file format ------------------------------------------------------------

def test_rationals():
    assert parse_rational("-3/6") == parse_rational("-1/2")
    for bad in ["1.5", "x", 2, "1/0", ""]:
        with pytest.raises(AlgebraFileError):
            parse_rational(bad)


def test_round_trip(h11):
    A, pair, name = parse_algebra_file(h11)
    assert A == catalog.heisenberg_even(1, 1)
    assert pair is None and name


def test_round_trip_with_pair(tmp_path):
    A = catalog.heisenberg_odd(2)
    N = GradedSubspace.of_labels(A, ["z"])
    path = tmp_path / "hodd.json"
    write_algebra_file(path, A, "Hodd(2)", ideal=N)
    B, pair, _ = parse_algebra_file(path)
    assert B == A and pair.N == GradedSubspace.of_labels(B, ["z"])


def test_file_is_utf8_with_string_rationals(tmp_path):
    A = algebra_from_dict({"name": "q", "even": ["a", "b", "c"], "odd": [],
                           "brackets": [{"left": "a", "right": "b", "value": {"c": "2/3"}}]})[0]
    text = dumps(A, "été")
    data = json.loads(text)
    assert data["brackets"] == [{"left": "a", "right": "b", "value": {"c": "2/3"}}]
    assert "été" in text


def test_ideal_field_lifts_to_pair(heis):
    _, pair, _ = parse_algebra_file(heis)
    assert pair.N.sdim == (1, 0)


@pytest.mark.parametrize("data", [
    [],
    {"even": ["a"]},
    {"even": ["a", "a"], "odd": []},
    {"even": ["a"], "odd": [], "brackets": [{"left": "a", "right": "q", "value": {}}]},
    {"even": ["a"], "odd": [], "brackets": [{"left": "a", "right": "a", "value": {"a": 1}}]},
    {"even": ["a"], "odd": [], "ideal": ["b"]},
    {"even": ["a"], "odd": [], "complement": ["a"]},
])
def test_malformed_files(data):
    with pytest.raises(AlgebraFileError):
        algebra_from_dict(data)


# -- commands ---------------------------------------------------------------

def test_multiplier_json(capsys, h11):
    code, out, _ = run(capsys, "multiplier", h11, "--json")
    assert code == 0
    data = json.loads(out)
    assert (data["dim_M"], data["bound"], data["t"]) == (3, 7, 4)
    assert data["bounds"]["nayak"] == 7
    for key in ["rank_d2", "rank_d3", "checks"]:
        assert key in data


def test_json_output_is_stable(capsys, h11):
    _, first, _ = run(capsys, "--json", "multiplier", h11)
    _, second, _ = run(capsys, "multiplier", h11, "--json")
    assert first == second


def test_human_output(capsys, h11):
    code, out, _ = run(capsys, "multiplier", h11)
    assert code == 0 and "dim M(L)   3" in out
    code, out, _ = run(capsys, "--quiet", "multiplier", h11)
    assert code == 0 and out == ""


def test_validate_command(capsys, h11, tmp_path):
    assert run(capsys, "validate", h11)[0] == 0
    bad = write(tmp_path, "jac.json", {
        "name": "jac", "even": ["e1", "e2", "e3"], "odd": [],
        "brackets": [{"left": "e1", "right": "e2", "value": {"e3": "1"}},
                     {"left": "e1", "right": "e3", "value": {"e1": "1"}}]})
    code, out, _ = run(capsys, "validate", bad, "--json")
    assert code == 1
    assert json.loads(out)["violations"][0]["witness"] == ["e1", "e2", "e3"]
    assert run(capsys, "multiplier", bad)[0] == 1


def test_conflicting_orientations_exit_2_with_both_locations(capsys, tmp_path):
    path = write(tmp_path, "bad.json", {
        "name": "bad", "even": ["a", "b", "c"], "odd": [],
        "brackets": [{"left": "a", "right": "b", "value": {"c": "1"}},
                     {"left": "b", "right": "a", "value": {"c": "1"}}]})
    code, _, err = run(capsys, "validate", path)
    assert code == 2
    assert "brackets[0]" in err and "brackets[1]" in err


def test_input_errors_exit_2(capsys, tmp_path, h11):
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "analyze", broken)[0] == 2
    assert run(capsys, "pair", h11)[0] == 2          # no ideal in the file
    assert run(capsys, "nonsense")[0] == 2


def test_analyze(capsys, heis):
    code, out, _ = run(capsys, "analyze", heis, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["center"]["dim"] == [1, 0]
    assert data["lower_central_series"] == [[3, 0], [1, 0], [0, 0]]
    assert data["nilpotency_class"] == 2
    assert data["pair"] == {"N": [1, 0], "Z_NL": [1, 0], "NL": [0, 0]}


def test_pair_without_complement_exits_3(capsys, heis):
    assert run(capsys, "pair", heis)[0] == 3


def test_non_ideal_exits_1(capsys, tmp_path):
    data = json.loads(dumps(catalog.heisenberg_lie(1)))
    data["ideal"] = ["x1"]
    assert run(capsys, "pair", write(tmp_path, "ni.json", data))[0] == 1


def test_pair_command(capsys, tmp_path):
    data = json.loads(dumps(catalog.abelian(2, 1), "ab"))
    data["ideal"] = ["x1", "y1"]
    path = write(tmp_path, "ab.json", data)
    code, out, _ = run(capsys, "pair", path, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["dim_M"] == 4 and rep["t"] == 0
    assert rep["bounds"]["multiplier"] == 4
    assert run(capsys, "pair", path, "--complement", "x2")[0] == 0
    assert run(capsys, "pair", path, "--complement", "x1")[0] == 3
    assert run(capsys, "pair", path, "--complement", "q")[0] == 2


def test_catalog_to_stdout(capsys):
    code, out, _ = run(capsys, "catalog", "heisenberg_odd", "--n", "2")
    assert code == 0
    assert algebra_from_dict(json.loads(out))[0] == catalog.heisenberg_odd(2)
    assert run(capsys, "catalog", "heisenberg_even")[0] == 2   # m = n = 0


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-dim", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert [c["number"] for c in data["criteria"]] == list(range(1, 10))
