"""End-to-end tests of the command-line surface, run in-process."""

import json

import mpmath
import pytest

from numaxis import cli
from numaxis.emitters import read_curves_csv


def run_json(capsys, argv):
    code = cli.run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


class TestZeta:
    def test_minus_one(self, capsys):
        out = run_json(capsys, ["zeta", "--s", "-1"])
        assert out["method"] == "em"
        assert abs(out["value"] + 1 / 12) < 1e-10

    def test_zero(self, capsys):
        assert abs(run_json(capsys, ["zeta", "--s", "0"])["value"] + 0.5) < 1e-10

    def test_methods_agree(self, capsys):
        em = run_json(capsys, ["zeta", "--s", "-1"])["value"]
        reflected = run_json(capsys, ["zeta", "--s", "-1", "--method", "reflect"])
        assert reflected["method"] == "reflect"
        assert abs(em - reflected["value"]) < 1e-9

    def test_direct(self, capsys):
        out = run_json(capsys, ["zeta", "--s", "2", "--method", "direct", "--n", "100000"])
        assert out["value"] == pytest.approx(1.6449340668482264, abs=1e-10)

    def test_far_left_argument(self, capsys):
        out = run_json(capsys, ["zeta", "--s", "-15.5"])
        assert abs(out["value"] - float(mpmath.zeta(-15.5))) < 1e-9

    def test_pole_is_domain_error(self, capsys):
        assert cli.run(["zeta", "--s", "1"]) == 3
        assert "pole" in capsys.readouterr().err

    def test_strip_violation_is_argument_error(self, capsys):
        assert cli.run(["zeta", "--s", "-30", "--m", "5"]) == 2


class TestSum:
    def test_partial(self, capsys):
        out = run_json(capsys, ["sum", "--series", "naturals", "--method", "partial:4"])
        assert out["value"] == 10

    def test_cesaro_grandi(self, capsys):
        out = run_json(capsys, ["sum", "--series", "grandi", "--method", "cesaro"])
        assert out["assigned"] is True
        assert abs(out["value"] - 0.5) < 1e-6

    def test_abel_naturals_unassigned(self, capsys):
        out = run_json(capsys, ["sum", "--series", "naturals", "--method", "abel"])
        assert out["assigned"] is False
        assert out["value"] is None

    def test_zeta_reg(self, capsys):
        out = run_json(capsys, ["sum", "--series", "power:1", "--method", "zeta-reg"])
        assert abs(out["value"] + 1 / 12) < 1e-10

    @pytest.mark.parametrize(
        "argv",
        [
            ["sum", "--series", "squares", "--method", "abel"],
            ["sum", "--series", "naturals", "--method", "borel"],
            ["sum", "--series", "naturals", "--method", "partial:x"],
            ["sum", "--series", "grandi", "--method", "zeta-reg"],
        ],
    )
    def test_argument_errors(self, capsys, argv):
        assert cli.run(argv) == 2


class TestMetric:
    def test_interval(self, capsys):
        out = run_json(capsys, ["metric", "--xc", "1", "interval", "--dt", "1", "--dx", "0", "--x", "0"])
        assert out == {"ds2": 1.0, "classification": "timelike"}

    def test_length(self, capsys):
        out = run_json(capsys, ["metric", "--xc", "1", "length", "--from", "0", "--to", "3"])
        assert out["length"] == pytest.approx(2.0, abs=1e-12)

    def test_classify(self, capsys):
        assert run_json(capsys, ["metric", "--xc", "2", "classify", "--x", "-3"])["side"] == "interior"

    def test_horizon_error_names_location(self, capsys):
        assert cli.run(["metric", "--xc", "2", "interval", "--dt", "1", "--dx", "0", "--x", "-2"]) == 3
        assert "-x_c = -2" in capsys.readouterr().err

    def test_invalid_params(self):
        assert cli.run(["metric", "--xc", "-1", "classify", "--x", "0"]) == 2


class TestGeodesic:
    def test_summary_and_csv(self, capsys, tmp_path):
        out = run_json(
            capsys,
            ["geodesic", "--x0", "0", "--ux0", "0", "--tau-max", "3", "--dtau", "1e-3", "--out", str(tmp_path / "traj.csv")],
        )
        assert out["termination"] == "horizon-reached"
        assert out["tau_horizon"] == pytest.approx(2.0)
        assert out["t_end"] > 20.0
        assert (tmp_path / "traj.csv").exists()

    def test_svg(self, capsys, tmp_path):
        run_json(capsys, ["geodesic", "--x0", "0", "--ux0", "0.5", "--tau-max", "1", "--dtau", "0.01", "--out", str(tmp_path / "traj.svg")])
        assert (tmp_path / "traj.svg").read_text().lstrip().startswith("<?xml")

    def test_start_behind_horizon(self, capsys):
        assert cli.run(["geodesic", "--x0", "-2", "--ux0", "0", "--tau-max", "1", "--dtau", "0.01"]) == 3
        assert "-x_c = -1" in capsys.readouterr().err


class TestEmbed:
    def test_region_three_csv(self, capsys, tmp_path):
        path = tmp_path / "iii.csv"
        out = run_json(capsys, ["embed", "--region", "III", "--from", "-0.999", "--to", "-0.001", "--samples", "50", "--out", str(path)])
        assert out["branches"] == [1, -1]
        curves = read_curves_csv(path)
        assert [(c.region.value, c.branch) for c in curves] == [("III", 1), ("III", -1)]

    def test_single_branch_svg(self, capsys, tmp_path):
        out = run_json(capsys, ["embed", "--from", "0", "--to", "2", "--branch", "-", "--out", str(tmp_path / "ii.svg")])
        assert out["region"] == "II"
        assert out["branches"] == [-1]

    def test_outside_region(self, capsys, tmp_path):
        assert cli.run(["embed", "--region", "III", "--from", "-0.5", "--to", "0.5", "--out", str(tmp_path / "x.csv")]) == 3

    def test_bad_output_suffix(self, tmp_path):
        assert cli.run(["embed", "--from", "0", "--to", "1", "--out", str(tmp_path / "x.png")]) == 2

    def test_unwritable_output(self, tmp_path):
        assert cli.run(["embed", "--from", "0", "--to", "1", "--out", str(tmp_path / "missing" / "x.csv")]) == 4


class TestFigure1:
    def test_csv_has_six_branch_groups(self, capsys, tmp_path):
        path = tmp_path / "fig1.csv"
        out = run_json(capsys, ["figure1", "--xc", "1", "--out", str(path)])
        assert out["curves"] == ["I+", "I-", "II+", "II-", "III+", "III-"]
        assert len(read_curves_csv(path)) == 6

    def test_svg(self, capsys, tmp_path):
        run_json(capsys, ["figure1", "--samples", "20", "--out", str(tmp_path / "fig1.svg")])
        assert (tmp_path / "fig1.svg").exists()

    def test_bad_margin(self, tmp_path):
        assert cli.run(["figure1", "--margin", "0.5", "--out", str(tmp_path / "f.svg")]) == 2


class TestParser:
    @pytest.mark.parametrize("command", ["zeta", "sum", "metric", "geodesic", "embed", "figure1"])
    def test_help(self, capsys, command):
        assert cli.run([command, "--help"]) == 0
        assert "usage" in capsys.readouterr().out

    def test_unknown_flag(self):
        assert cli.run(["zeta", "--s", "0", "--bogus"]) == 2

    def test_missing_subcommand(self):
        assert cli.run([]) == 2

    def test_verbose_logging(self, capsys):
        assert cli.run(["-v", "zeta", "--s", "-1"]) == 0
        assert "zeta_continued" in capsys.readouterr().err
