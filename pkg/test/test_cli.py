import json
from os import path

import numpy as np
from tempfile import TemporaryDirectory
from pandas import read_csv
from pytest import mark

from cvfaithful import State
from cvfaithful.cli import main, build_parser
from cvfaithful.container import FORMAT
from cvfaithful.phasespace import CSV_COLUMNS
from cvfaithful.tomography import STUDY_COLUMNS

def run_json(capsys, argv):
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)

###################################################################################################

def test_state_command_saves_a_loadable_state():
    with TemporaryDirectory() as tmp_dir:
        target = path.join(tmp_dir, "twin.json")
        assert main(["state", "twinbeam://?lambda=0.5&dim=4", "--out", target]) == 0
        R = State("file://" + target)
    assert R.dim == 4
    assert R.spec == {"family": "twinbeam", "lambda": 0.5, "dim": 4}

def test_state_command_prints_container(capsys):
    document = run_json(capsys, ["state", '{"family": "correlatedfock", "lambda": 0.4, "dim": 3}'])
    assert document["format"] == "cvfaithful-matrix"
    assert document["dim"] == 3

def test_check_command(capsys):
    report = run_json(capsys, ["check", "twinbeam://?lambda=0.5", "--dim", "4"])
    assert report["rank"] == 16 and report["full_rank"]
    assert abs(report["sigma_min"] - 0.01171875) <= 1e-15

def test_check_command_on_saved_state(capsys):
    with TemporaryDirectory() as tmp_dir:
        target = path.join(tmp_dir, "product.json")
        assert main(["state", "product://?a=thermal:0.5&b=vacuum&dim=3", "--out", target]) == 0
        report = run_json(capsys, ["check", target])
    assert report["rank"] == 1 and not report["full_rank"]
    assert report["cond"] is None or report["cond"] > 1e10

def test_check_command_sweep(capsys):
    reports = run_json(capsys, ["check", "twinbeam://?lambda=0.5", "--sweep", "2,3,4"])
    assert [report["dim"] for report in reports] == [2, 3, 4]

def test_chi_command(capsys):
    result = run_json(capsys, ["chi", "twinbeam://?lambda=0.5&dim=20"])
    assert abs(result["chi"] - 4 / 9) <= 1e-9
    assert abs(result["chi_quadrature"] - 4 / 9) <= 1e-9

def test_chi_command_gaussian_method(capsys):
    result = run_json(capsys, ["chi", "splitthermal://?sigma2=0.5&dim=25", "--method", "gaussian"])
    assert abs(result["B"][0] + 0.5) <= 1e-6
    assert result["gaussian_faithful"]

###################################################################################################

def test_wigner_command_writes_analytic_column():
    with TemporaryDirectory() as tmp_dir:
        target = path.join(tmp_dir, "wigner.csv")
        assert main(["wigner", "twinbeam://?lambda=0.5&dim=20", "--grid-points", "3", "--out", target]) == 0
        frame = read_csv(target, float_precision="round_trip")
    assert list(frame.columns) == CSV_COLUMNS + ["analytic"]
    assert len(frame) == 81
    assert np.max(np.abs(frame["value_re"] - frame["analytic"])) <= 1e-10

def test_char_command_prints_csv(capsys):
    assert main(["char", "twinbeam://?lambda=0.5&dim=10", "--grid-points", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 2

###################################################################################################

def test_tomo_command_is_deterministic():
    argv = ["tomo", "twinbeam://?lambda=0.5", "--channel", "attenuation", "--epsilons", "0,1e-6", "--trials", "10", "--seed", "1"]
    with TemporaryDirectory() as tmp_dir:
        first, second = path.join(tmp_dir, "first"), path.join(tmp_dir, "second")
        assert main(argv + ["--out", first]) == 0
        assert main(argv + ["--out", second]) == 0
        with open(first + ".csv") as stream:
            first_csv = stream.read()
        with open(second + ".csv") as stream:
            second_csv = stream.read()
        with open(first + ".json") as stream:
            summary = json.load(stream)
    assert first_csv == second_csv
    assert first_csv.splitlines()[0] == ",".join(STUDY_COLUMNS)
    assert summary["recovered"]
    assert summary["channel"] == "attenuation"
    assert summary["d"] == 3
    assert summary["max_entry_error"] <= 1e-9

def test_sweep_command():
    with TemporaryDirectory() as tmp_dir:
        target = path.join(tmp_dir, "sweep.csv")
        assert main(["sweep", "--lambdas", "0.2,0.8", "--trials", "10", "--threads", "2", "--out", target]) == 0
        frame = read_csv(target)
    assert list(frame["lambda"]) == [0.2, 0.8]
    assert frame["mean_error"][0] > frame["mean_error"][1]

###################################################################################################

@mark.parametrize("argv", [
    [],
    ["state"],
    ["check", "squeezed://?r=0.5"],
    ["check", "twinbeam://?lambda=1.5&dim=4"],
    ["check", "twinbeam://?lambda=0.5", "--dim", "abc"],
    ["check", "twinbeam://?lambda=0.5", "--tol", "2"],
    ["chi", "twinbeam://?lambda=0.5&dim=4", "--method", "guess"],
    ["tomo", "twinbeam://?lambda=0.5", "--channel", "amplifier"],
])
def test_usage_and_parameter_errors_exit_with_one(argv, capsys):
    assert main(argv) == 1
    assert "error" in capsys.readouterr().err

def test_dim_cannot_change_a_saved_state():
    with TemporaryDirectory() as tmp_dir:
        target = path.join(tmp_dir, "twin.json")
        assert main(["state", "twinbeam://?lambda=0.5&dim=3", "--out", target]) == 0
        assert main(["check", target, "--dim", "4"]) == 1

def test_unreadable_state_file_exits_with_one():
    with TemporaryDirectory() as tmp_dir:
        target = path.join(tmp_dir, "broken.json")
        with open(target, "w") as stream:
            stream.write("{")
        assert main(["check", target]) == 1

def test_memory_budget_exits_with_two(capsys):
    assert main(["tomo", "twinbeam://?lambda=0.5", "--dim", "7", "--trials", "1"]) == 2
    assert "budget" in capsys.readouterr().err

def test_parser_lists_every_command():
    parser = build_parser()
    for command in ("state", "wigner", "char", "check", "chi", "tomo", "sweep"):
        assert parser.parse_args([command] + ([] if command == "sweep" else ["vacuum"])).command == command

###################################################################################################

def test_readme_documents_formats_and_exit_codes():
    with open(path.join(path.dirname(__file__), "..", "README.md")) as readme:
        text = readme.read()
    assert '"format": "%s"' % FORMAT in text
    assert ", ".join(CSV_COLUMNS) in text
    assert ", ".join(STUDY_COLUMNS) in text
    for code in ("| 0 | success", "| 1 | usage error", "| 2 | numerical failure"):
        assert code in text
