"""CLI contract tests: subcommands, formats, exit codes."""

import json

import numpy as np
import pytest

from ncgauge import hopf
from ncgauge.cli import main, parse_q_token, parse_theta, ConfigError


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestPell:
    def test_delta_5(self, capsys):
        code, out = run(capsys, ["pell", "--delta", "5"])
        assert code == 0
        data = json.loads(out)
        assert (data["u"], data["v"]) == (3, 1)
        assert data["phi"] == [[2, 1], [1, 1]]

    def test_delta_8(self, capsys):
        code, out = run(capsys, ["pell", "--delta", "8"])
        data = json.loads(out)
        assert (data["u"], data["v"]) == (6, 2)
        assert data["epsilon"] == pytest.approx(3 + 2 * np.sqrt(2))

    def test_square_delta_is_config_error(self, capsys):
        assert main(["pell", "--delta", "9"]) == 2


class TestStabilizer:
    def test_golden(self, capsys):
        code, out = run(capsys, ["stabilizer", "--theta", "1/2,1/2,5", "--grades", "6"])
        assert code == 0
        data = json.loads(out)
        assert data["phi"] == [2, 1, 1, 1]
        assert data["checks"]["power_homomorphism"]
        assert data["checks"]["c_cocycle"]

    def test_bad_theta(self):
        assert main(["stabilizer", "--theta", "0,0,5"]) == 2
        assert main(["stabilizer", "--theta", "0,1,4"]) == 2


class TestTorusCheck:
    def test_passes(self, capsys):
        code, out = run(capsys, ["torus-check", "--theta", "1/2,1/2,5"])
        assert code == 0
        assert json.loads(out)["pass"]

    def test_deterministic_given_seed(self, capsys):
        _, out1 = run(capsys, ["torus-check", "--theta", "0,1,2", "--seed", "7"])
        _, out2 = run(capsys, ["torus-check", "--theta", "0,1,2", "--seed", "7"])
        assert out1 == out2


class TestMonopole:
    def test_sweep(self, capsys):
        code, out = run(
            capsys,
            ["monopole", "--theta", "1/2,1/2,5", "--q-sweep", "1,eps,eps^2,2"],
        )
        assert code == 0
        data = json.loads(out)
        byq = {row["token"]: row for row in data["q_sweep"]}
        assert byq["eps^2"]["adapted"] and not byq["eps^2"]["relative_adapted"]
        assert byq["eps"]["relative_adapted"] and not byq["eps"]["adapted"]
        assert not byq["1"]["adapted"] and not byq["2"]["adapted"]
        assert byq["eps^2"]["constant"]["im"] == pytest.approx(-data["epsilon"])

    def test_csv_schema_stable(self, capsys):
        args = ["monopole", "--theta", "1/2,1/2,5", "--q-sweep", "1,eps^2",
                "--format", "csv"]
        _, out1 = run(capsys, args)
        _, out2 = run(capsys, args)
        assert out1 == out2
        keys = [line.split(",")[0] for line in out1.strip().splitlines()[1:]]
        assert "q_sweep.1.adapted" in keys


class TestCohomology:
    def test_builtin_cycle(self, capsys):
        code, out = run(capsys, ["cohomology", "--builtin", "cycle:4"])
        assert code == 0
        data = json.loads(out)
        assert data["hochschild"]["dim_Z"] == data["hochschild"]["brute_force_Z"]

    def test_corrupted_antipode_gate_failure(self, capsys, tmp_path):
        inst = hopf.jet_instance(2)
        inst.H.antipode[1, 1] = 0.7  # corrupt S
        path = tmp_path / "bad.json"
        path.write_text(hopf.dump_instance(inst))
        code, out = run(capsys, ["cohomology", "--instance", str(path)])
        assert code == 1
        assert not json.loads(out)["pass"]

    def test_instance_round_trip(self, capsys, tmp_path):
        inst = hopf.function_instance(3)
        path = tmp_path / "fn3.json"
        path.write_text(hopf.dump_instance(inst))
        code, out = run(capsys, ["cohomology", "--instance", str(path)])
        assert code == 0
        assert json.loads(out)["hochschild"]["dim_Z"] == 2

    def test_bad_builtin(self):
        assert main(["cohomology", "--builtin", "nope:3"]) == 2


class TestConfigFile:
    def test_config_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"theta": "1/2,1/2,5", "grades": 3}))
        code, out = run(capsys, ["stabilizer", "--config", str(cfg), "--theta", "0,1,2"])
        assert code == 0
        data = json.loads(out)
        # flag overrides config for theta; grades comes from config
        assert data["theta"]["delta"] == 8
        assert "3" in data["powers"] and "4" not in data["powers"]

    def test_missing_config(self):
        assert main(["pell", "--delta", "5", "--config", "/nonexistent.json"]) == 2


class TestParsers:
    def test_q_tokens(self):
        ctx = parse_theta("1/2,1/2,5")
        assert parse_q_token("eps^2", ctx) == ctx.eps**2
        assert parse_q_token("1/2", ctx).r == 0.5
        assert float(parse_q_token("2.718", ctx)) == pytest.approx(2.718)
        with pytest.raises(ConfigError):
            parse_q_token("nope", ctx)

    def test_out_file(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = main(["pell", "--delta", "12", "--out", str(out)])
        assert code == 0
        assert json.loads(out.read_text())["u"] == 4


class TestQTokenEdges:
    def test_zero_rejected(self):
        assert main(["monopole", "--theta", "1/2,1/2,5", "--q-sweep", "0,eps"]) == 2

    def test_bad_eps_power(self):
        assert main(["monopole", "--theta", "1/2,1/2,5", "--q-sweep", "eps^x"]) == 2
