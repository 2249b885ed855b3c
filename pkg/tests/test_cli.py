"""Config parsing, artifact provenance, scenario execution and exit codes."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirac_cyclotron import ModelParams, derived_scales
from dirac_cyclotron.cli import (
    ConfigError,
    Scenario,
    fmt,
    main,
    parse_config,
    parse_provenance,
    resolve_time,
    run_scenario,
    validation_report,
)

GOOD_CONFIG = """\
# sweep of the packet velocity
[velocity]
lambda_over_a = 0.1
qa = 5
alpha = 1
beta = 1
t_end = 2*T_cl
n_samples = 16
"""


class TestFmt:
    def test_integers_stay_integers(self):
        assert fmt(3) == "3"
        assert fmt(np.int64(7)) == "7"

    @given(st.floats(allow_nan=False, allow_infinity=False))
    @settings(max_examples=200, deadline=None)
    def test_floats_round_trip(self, x):
        assert float(fmt(x)) == x


class TestParseConfig:
    def test_good_config(self):
        scns = parse_config(GOOD_CONFIG)
        assert len(scns) == 1
        assert scns[0].name == "velocity"
        assert scns[0].values["t_end"] == "2*T_cl"

    def test_multiple_sections(self):
        text = GOOD_CONFIG + "\n[timescales]\nlambda_over_a=0.5\nqa=10\nalpha=1\nbeta=1\n"
        assert [s.name for s in parse_config(text)] == ["velocity", "timescales"]

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "no scenario"),
            ("[warp-drive]\n", "unknown scenario"),
            ("[velocity\nqa = 5\n", "malformed section"),
            ("qa = 5\n", "outside of a"),
            ("[velocity]\nqa\n", "expected 'key = value'"),
            (GOOD_CONFIG + "color = red\n", "unknown key 'color'"),
            (GOOD_CONFIG + "qa = 6\n", "duplicate key 'qa'"),
            ("[velocity]\nqa = 5\n", "missing required"),
        ],
    )
    def test_errors_name_the_problem(self, text, fragment):
        with pytest.raises(ConfigError, match=fragment):
            parse_config(text)


class TestResolveTime:
    def test_symbolic_anchors(self, set1):
        sc = derived_scales(set1)
        assert resolve_time("T_cl", sc) == sc.T_cl
        assert resolve_time("2*T_R", sc) == 2 * sc.T_R
        assert resolve_time("0.5 * T_D", sc) == 0.5 * sc.T_D
        assert resolve_time("1e-2*T_cl", sc) == pytest.approx(0.01 * sc.T_cl)

    def test_plain_numbers(self, set1):
        sc = derived_scales(set1)
        assert resolve_time("123.5", sc) == 123.5

    def test_garbage_rejected(self, set1):
        sc = derived_scales(set1)
        with pytest.raises(ConfigError):
            resolve_time("two periods", sc)


class TestProvenance:
    def test_round_trip(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(GOOD_CONFIG)
        assert main(["run", str(cfg), "--out", str(tmp_path), "--no-timestamp"]) == 0
        text = (tmp_path / "velocity.csv").read_text()
        meta = parse_provenance(text)
        assert meta["scenario"] == "velocity"
        assert float(meta["qa"]) == 5.0
        assert float(meta["t_end"]) == pytest.approx(
            2 * derived_scales(ModelParams(lambda_over_a=0.1, qa=5.0)).T_cl
        )
        # resolved window is part of the provenance
        assert int(meta["window_n_max"]) > int(meta["window_n_min"]) > 0

    def test_artifacts_are_reproducible(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(GOOD_CONFIG)
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        assert main(["run", str(cfg), "--out", str(out_a), "--no-timestamp"]) == 0
        assert main(["run", str(cfg), "--out", str(out_b), "--no-timestamp"]) == 0
        assert (out_a / "velocity.csv").read_bytes() == (out_b / "velocity.csv").read_bytes()

    def test_timestamp_header_present_by_default(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(GOOD_CONFIG)
        assert main(["run", str(cfg), "--out", str(tmp_path)]) == 0
        head = (tmp_path / "velocity.csv").read_text().splitlines()[1]
        assert head.startswith("# generated =")


class TestScenarios:
    def test_timescales_values(self, tmp_path, set2):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("[timescales]\nlambda_over_a=0.5\nqa=10\nalpha=1\nbeta=1\n")
        assert main(["run", str(cfg), "--out", str(tmp_path), "--no-timestamp"]) == 0
        lines = [
            l for l in (tmp_path / "timescales.csv").read_text().splitlines()
            if not l.startswith("#")
        ]
        cols = lines[0].split(",")
        vals = dict(zip(cols, lines[1].split(",")))
        sc = derived_scales(set2)
        assert float(vals["T_cl_lambda_over_c"]) == sc.T_cl
        assert float(vals["T_R_lambda_over_c"]) == sc.T_R
        assert int(vals["n0"]) == 50

    def test_map_scenario_row_count(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "[density-map]\nlambda_over_a=0.1\nqa=5\nalpha=1\nbeta=1\n"
            "t = 0.0\nn_rho = 20\nn_theta = 16\n"
        )
        assert main(["run", str(cfg), "--out", str(tmp_path), "--no-timestamp"]) == 0
        rows = [
            l for l in (tmp_path / "density-map.csv").read_text().splitlines()
            if not l.startswith("#")
        ]
        assert len(rows) == 1 + 20 * 16

    def test_density_map_total_probability(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "[density-map]\nlambda_over_a=0.1\nqa=5\nalpha=1\nbeta=1\nt = T_cl\n"
        )
        assert main(["run", str(cfg), "--out", str(tmp_path), "--no-timestamp"]) == 0
        lines = (tmp_path / "density-map.csv").read_text().splitlines()
        body = [l for l in lines if not l.startswith("#")][1:]  # drop column row
        data = np.array([[float(v) for v in l.split(",")] for l in body])
        rho, dens = data[:, 0], data[:, 2]
        d_theta = 2 * math.pi / 256
        d_rho = rho.max() / (120 - 1)
        total = float(np.sum(dens * rho) * d_theta * d_rho)
        assert total == pytest.approx(1.0, abs=0.01)

    def test_threads_give_identical_payload(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(GOOD_CONFIG)
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        assert main(["run", str(cfg), "--out", str(out_a), "--no-timestamp"]) == 0
        assert main(
            ["run", str(cfg), "--out", str(out_b), "--no-timestamp", "--threads", "4"]
        ) == 0
        assert (out_a / "velocity.csv").read_bytes() == (out_b / "velocity.csv").read_bytes()

    def test_fractional_scenario_runs(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "[fractional]\nlambda_over_a=0.1\nqa=5\nalpha=1\nbeta=1\n"
            "m = 1\nn = 2\nn_rho = 20\nn_theta = 16\n"
        )
        assert main(["run", str(cfg), "--out", str(tmp_path), "--no-timestamp"]) == 0


class TestExitCodes:
    def test_bad_config_is_one(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("[velocity]\nwarp = 9\n")
        assert main(["run", str(cfg), "--out", str(tmp_path)]) == 1
        assert "unknown key" in capsys.readouterr().err

    def test_numeric_failure_is_two(self, tmp_path):
        # reducible revival fraction trips the numeric layer, not the parser
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "[fractional]\nlambda_over_a=0.1\nqa=5\nalpha=1\nbeta=1\n"
            "m = 2\nn = 4\nn_rho = 10\nn_theta = 8\n"
        )
        assert main(["run", str(cfg), "--out", str(tmp_path)]) == 2

    def test_io_failure_is_three(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(GOOD_CONFIG)
        blocker = tmp_path / "not-a-dir"
        blocker.write_text("")
        assert main(["run", str(cfg), "--out", str(blocker)]) == 3


class TestValidation:
    def test_quick_report_passes(self, tmp_path):
        rows, ok = validation_report(quick=True)
        assert ok
        names = {r[0] for r in rows}
        assert "field_positive_vs_modesum" in names
        assert "kernel_quadrature_vs_closed_form" in names
        assert all(r[3] == "pass" for r in rows)

    def test_validate_subcommand(self, tmp_path, capsys):
        assert main(["validate", "--quick", "--out", str(tmp_path), "--no-timestamp"]) == 0
        out = capsys.readouterr().out
        assert "pass" in out
        assert (tmp_path / "validate.csv").exists()

    def test_validate_scenario_in_config(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("[validate]\nquick = true\n")
        assert main(["run", str(cfg), "--out", str(tmp_path), "--no-timestamp"]) == 0
        text = (tmp_path / "validate.csv").read_text()
        assert "FAIL" not in text


class TestRunScenarioDirect:
    def test_unknown_packet_rejected(self, tmp_path):
        scn = Scenario(name="density-map", line=1, values={
            "lambda_over_a": "0.1", "qa": "5", "alpha": "1", "beta": "1",
            "t": "0", "packet": "tachyonic",
        })
        with pytest.raises(ConfigError, match="packet"):
            run_scenario(scn, tmp_path, threads=1, timestamp=False)

    def test_bad_time_axis_rejected(self, tmp_path):
        scn = Scenario(name="velocity", line=1, values={
            "lambda_over_a": "0.1", "qa": "5", "alpha": "1", "beta": "1",
            "t_end": "0.0",
        })
        with pytest.raises(ConfigError, match="t_end"):
            run_scenario(scn, tmp_path, threads=1, timestamp=False)
