import io
import json
import math
from fractions import Fraction

import pandas as pd
import pytest

from src.cli import main
from src.data.entities import InputDocument
from src.data.generators import jordan_block


def _write(tmp_path, document: dict, name: str = "set.json") -> str:
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def _csv(text: str) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)


def test_bound_jordan_main(capsys):
    code, out = _run(capsys, "bound", "--example", "jordan_block", "--n-max", "6", "--method", "main",
                     "--output", "csv")
    df = _csv(out)

    assert code == 0
    assert list(df["n"]) == [str(n) for n in range(1, 7)]
    assert set(df["lower_radicand"]) == {"1/4"}
    assert set(df["upper_radicand"]) == {"2/1"}
    assert set(df["lower_rounding"]) == {"down"} and set(df["upper_rounding"]) == {"up"}
    for n, lower, upper in zip(range(1, 7), df["lower"], df["upper"]):
        assert math.isclose(float(lower), 0.25 ** (1 / n), rel_tol=1e-9)
        assert math.isclose(float(upper), 2 ** (1 / n), rel_tol=1e-9)


def test_bound_table_output(capsys):
    code, out = _run(capsys, "bound", "--example", "jordan_block", "--n-max", "3", "--method", "main")

    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["method", "n", "lower", "upper", "width_n"]
    assert len([line for line in lines if line.split()[0] == "main"]) == 3
    assert lines[4].startswith("best: ")


def test_bound_zero_matrix_file(tmp_path, capsys):
    path = _write(tmp_path, {"dimension": 2, "matrices": [[[0, 0], [0, 0]]]})
    code, out = _run(capsys, "bound", "--input", path, "--output", "csv")
    df = _csv(out)

    assert code == 0
    assert len(df) == 1
    assert (df["lower"][0], df["upper"][0]) == ("0", "0")


def test_bound_scaled_pair_traditional(tmp_path, capsys):
    path = _write(tmp_path, {"dimension": 2, "matrices": [[["1", "1/10"], ["10", "1"]]]})
    code, out = _run(capsys, "bound", "--input", path, "--n-max", "1", "--method", "traditional", "--output", "csv")
    df = _csv(out)

    assert code == 0
    assert math.isclose(float(df["lower"][0]), 2, rel_tol=1e-9)
    assert df["upper"][0] == "20"


def test_bound_decimal_encoding(tmp_path, capsys):
    path = _write(tmp_path, {"dimension": 1, "matrices": [[["0.5"]]], "encoding": "decimal"})
    code, out = _run(capsys, "bound", "--input", path, "--n-max", "2", "--method", "main", "--output", "csv")
    df = _csv(out)

    assert code == 0
    assert set(df["lower"]) == {"0.5"} and set(df["upper"]) == {"0.5"}


@pytest.mark.parametrize("document", [
    {"dimension": 2, "matrices": [[[1, -1], [0, 1]]]},
    {"dimension": 2, "matrices": [[[1, 1], [0]]]},
    {"dimension": 2, "matrices": []},
    {"dimension": 1, "matrices": [[["1/2"]]], "encoding": "decimal"},
    {"dimension": 1, "matrices": [[["one"]]]},
])
def test_bound_rejects_bad_input(tmp_path, capsys, document):
    code, out = _run(capsys, "bound", "--input", _write(tmp_path, document))

    assert code == 2
    assert out == ""


def test_bound_rejects_unreadable_input(tmp_path, capsys):
    (tmp_path / "broken.json").write_text("{not json")

    assert _run(capsys, "bound", "--input", str(tmp_path / "broken.json"))[0] == 2
    assert _run(capsys, "bound", "--input", str(tmp_path / "missing.json"))[0] == 2


def test_bound_rejects_unknown_method(capsys):
    assert _run(capsys, "bound", "--example", "jordan_block", "--method", "spectral")[0] == 2


def test_bound_budget_exceeded_emits_partial_rows(tmp_path, capsys):
    path = _write(tmp_path, {"dimension": 2, "matrices": [[[1, 2], [0, 1]], [[1, 0], [3, 1]], [[0, 1], [1, 1]]]})
    code, out = _run(capsys, "bound", "--input", path, "--n-max", "6", "--budget", "5", "--prune", "off",
                     "--method", "main", "--output", "csv")
    df = _csv(out)

    assert code == 3
    assert list(df["n"]) == ["1"]
    assert set(df["partial"]) == {"True"}


def test_bound_json_is_deterministic_and_exact(capsys):
    argv = ("bound", "--example", "scaled_pair", "--n-max", "4", "--output", "json")
    first = _run(capsys, *argv)[1]
    second = _run(capsys, *argv)[1]
    report = json.loads(first)

    assert first == second
    assert report["constants"] == {"dimension": 2, "size": 1, "all_zero": False, "U": "10/1", "V": "1/10",
                                   "K": "1/40000"}
    assert report["condensation"]["strongly_connected"]
    main_rows = [row for row in report["bounds"] if row["method"] == "main"]
    assert [Fraction(row["upper_radicand"]) for row in main_rows] == [10 * 2 ** n for n in range(1, 5)]
    assert float(report["best"]["lower"]) <= 2 <= float(report["best"]["upper"])


def test_bound_float_arithmetic_is_marked(capsys):
    code, out = _run(capsys, "bound", "--example", "jordan_block", "--n-max", "3", "--arithmetic", "float",
                     "--output", "json")
    report = json.loads(out)

    assert code == 0
    assert report["arithmetic"] == "float"
    assert not report["certified"]


def test_converge_gap_times_n_approaches_ln_8(capsys):
    code, out = _run(capsys, "converge", "--example", "jordan_block", "--n-max", "12", "--method", "main")
    df = _csv(out)
    gap_n = [float(v) for v in df["gap_n"]]

    assert code == 0
    assert list(df.columns[:10]) == ["n", "lower", "lower_rounding", "upper", "upper_rounding", "gap", "gap_n",
                                     "norm_root", "upper_fekete", "lower_fekete"]
    assert all(a < b for a, b in zip(gap_n, gap_n[1:]))
    assert abs(gap_n[-1] - math.log(8)) < 0.06
    assert math.isclose(float(df["norm_root"][11]), 12 ** (1 / 12), rel_tol=1e-9)


def test_converge_ratio_columns(capsys):
    code, out = _run(capsys, "converge", "--example", "jordan_block", "--n-max", "12", "--method",
                     "main,traditional")
    df = _csv(out)

    assert code == 0
    for n in range(5, 13):
        assert float(df["ratio_main"][n - 1]) < float(df["ratio_traditional"][n - 1])
    # the traditional lower end is exactly 1 from n = 1 on
    assert set(df["lower"]) == {"1"}


def test_converge_zero_matrix(tmp_path, capsys):
    path = _write(tmp_path, {"dimension": 2, "matrices": [[[0, 0], [0, 0]]]})
    code, out = _run(capsys, "converge", "--input", path, "--n-max", "4")
    df = _csv(out)

    assert code == 0
    assert set(df["gap"]) == {"0"}


def test_converge_ptilde(capsys):
    code, out = _run(capsys, "converge", "--example", "scaled_pair", "--n-max", "4", "--method", "main,ptilde")
    df = _csv(out)

    assert code == 0
    assert "lower_ptilde" in df.columns
    for value, lower, upper in zip(df["lower_ptilde"], df["lower"], df["upper"]):
        assert math.isclose(float(value), 2, rel_tol=1e-8)
        assert float(lower) <= 2 <= float(upper)
    assert set(df["lower_fekete"]) != {""}


def test_growth_jordan(capsys):
    code, out = _run(capsys, "growth", "--example", "jordan_block", "--n-max", "12", "--n-lo", "2",
                     "--output", "json")
    growth = json.loads(out)["growth"]

    assert code == 0
    assert growth["r"] == 1
    assert growth["witness_chain"] == [0, 1]
    assert set(growth["verification"]["q"]) == {"1"}
    assert growth["verification"]["n"] == list(range(2, 13))


def test_growth_identity_csv(capsys):
    code, out = _run(capsys, "growth", "--example", "identity", "--output", "csv")
    df = _csv(out)

    assert code == 0
    assert list(df.columns) == ["n", "q", "q_at_lower", "q_at_upper", "partial"]
    assert set(df["q"]) == {"1"}


def test_growth_diagonal_table(capsys):
    code, out = _run(capsys, "growth", "--example", "diagonal_2_1")

    assert code == 0
    assert "r = 0" in out
    assert "witness chain [0]" in out


def test_growth_wide_enclosure_exits_5(capsys):
    code, out = _run(capsys, "growth", "--example", "scaled_pair", "--n-max", "6", "--n-cls", "6",
                     "--output", "json")
    growth = json.loads(out)["growth"]

    assert code == 5
    assert growth["verification"] is None
    assert "--n-cls" in growth["message"]


def test_growth_zero_set(capsys):
    code, out = _run(capsys, "growth", "--example", "zero", "--output", "json")

    assert code == 0
    assert json.loads(out)["growth"] is None


def test_selftest_passes(capsys):
    code, out = _run(capsys, "selftest", "--scale", "1")

    assert code == 0
    assert out.strip().endswith("PASSED")


@pytest.mark.parametrize("flag", [("--break-pruning",), ("--r-offset", "1")])
def test_selftest_negative_controls(capsys, flag):
    code, out = _run(capsys, "selftest", "--scale", "1", *flag)

    assert code == 1
    assert "FAILED" in out


def test_input_document_round_trip():
    document = InputDocument.from_matrix_set(jordan_block())

    assert document.matrices == [[["1/1", "1/1"], ["0/1", "1/1"]]]
    assert InputDocument.parse(document.model_dump_json()).to_matrix_set() == jordan_block()


def test_bound_connected_alone_on_disconnected_graph_fails(capsys):
    code, out = _run(capsys, "bound", "--example", "jordan_block", "--method", "connected", "--output", "csv")

    assert code == 1
    assert out == ""


def test_bound_skipped_connected_gets_a_note_row(capsys):
    code, out = _run(capsys, "bound", "--example", "jordan_block", "--n-max", "3", "--method", "main,connected",
                     "--output", "csv")
    df = _csv(out)

    assert code == 0
    assert list(df["method"]) == ["main"] * 3 + ["connected"]
    skipped = df.iloc[-1]
    assert (skipped["lower"], skipped["upper"]) == ("", "")
    assert skipped["note"].startswith("skipped")


def test_converge_ptilde_over_budget_emits_partial_rows(capsys):
    code, out = _run(capsys, "converge", "--example", "shear_pair", "--n-max", "6", "--method", "main,ptilde",
                     "--budget", "8")
    df = _csv(out)

    assert code == 3
    assert list(df["n"]) == ["1", "2", "3"]
    assert set(df["partial"]) == {"True"}
    assert "" not in set(df["lower_ptilde"])


def test_growth_over_budget_emits_partial_report(tmp_path, capsys):
    path = _write(tmp_path, {"dimension": 1, "matrices": [[[1]], [[2]]]})
    code, out = _run(capsys, "growth", "--input", path, "--n-max", "6", "--budget", "5", "--prune", "off",
                     "--output", "json")
    report = json.loads(out)

    assert code == 3
    assert report["partial"] and report["partial_length"] == 2
    assert report["growth"]["r"] == 0
    assert report["growth"]["verification"]["n"] == [1, 2]
    assert set(report["growth"]["verification"]["q"]) == {"1"}


def test_growth_over_budget_table_is_marked(tmp_path, capsys):
    path = _write(tmp_path, {"dimension": 1, "matrices": [[[1]], [[2]]]})
    code, out = _run(capsys, "growth", "--input", path, "--n-max", "6", "--budget", "5", "--prune", "off")

    assert code == 3
    assert out.splitlines()[-1] == "PARTIAL: frontier budget exceeded after length 2"
