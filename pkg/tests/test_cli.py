import json
import math

import pytest

from orlnorm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_norm_sum_type(capsys):
    code, out, _ = run(capsys, "norm", "--phi", "power:2", "--p", "l1", "--values", "3,4")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "1"
    assert payload["value"] == pytest.approx(10.0, rel=1e-9)
    assert payload["k_star"] == pytest.approx(0.2, rel=1e-6)
    assert payload["attained"] is True
    assert isinstance(payload["evaluations"], int)


def test_norm_max_type_is_luxemburg(capsys):
    code, out, _ = run(capsys, "norm", "--phi", "power:2", "--p", "linf", "--values", "3,4")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(5.0, abs=1e-8)


def test_norm_zero(capsys):
    code, out, _ = run(capsys, "norm", "--values", "0,0")
    assert code == 0
    assert json.loads(out)["value"] == 0.0


def test_norm_with_space_descriptor(capsys):
    code, out, _ = run(capsys, "norm", "--phi", "flat_then_power:1,2", "--p", "lq:2",
                       "--values", "1", "--space", '{"atoms":[{"w":"inf"}]}')
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(1.0, abs=1e-9)


def test_input_errors_exit_2(capsys):
    assert run(capsys, "norm", "--phi", "nosuch:1", "--values", "1,2")[0] == 2
    assert run(capsys, "norm", "--values", "a,b")[0] == 2
    assert run(capsys, "norm")[0] == 2  # missing --values
    assert run(capsys, "modulus", "--grid", "1.5")[0] == 2
    assert run(capsys, "verify", "T99")[0] == 2


def test_modulus_csv_identity_column(capsys):
    code, out, _ = run(capsys, "modulus", "--p", "l1", "--grid", "0.1:0.9:9")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "epsilon,delta"
    assert len(lines) == 10
    for line in lines[1:]:
        e, d = (float(t) for t in line.split(","))
        assert d == pytest.approx(e, abs=1e-6)


def test_modulus_csv_zero_column_for_max_norm(capsys):
    code, out, _ = run(capsys, "modulus", "--p", "linf", "--grid", "0.2:0.8:4")
    assert code == 0
    for line in out.strip().split("\n")[1:]:
        assert float(line.split(",")[1]) == pytest.approx(0.0, abs=1e-9)


def test_modulus_single_point_closed_form(capsys):
    code, out, _ = run(capsys, "modulus", "--p", "lq:2", "--grid", "0.6")
    assert code == 0
    d = float(out.strip().split("\n")[1].split(",")[1])
    assert d == pytest.approx(0.2, abs=1e-3)


def test_verify_all_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--phi", "power:2", "--p", "l1",
                       "--budget", "30")
    assert code == 0
    assert "T7" in out and "passed" in out


def test_verify_expected_counterexample_passes(capsys):
    code, out, _ = run(capsys, "verify", "T6", "--phi", "flat_then_power:1,2",
                       "--p", "lq:2", "--json")
    assert code == 0
    rep = json.loads(out)["reports"][0]
    assert rep["status"] == "passed"
    pair = rep["details"]["constructed_flat_pair"]
    assert abs(pair["norm_z"] - pair["norm_y"]) <= 1e-9


def test_verify_hypothesis_gate_status(capsys):
    code, out, _ = run(capsys, "verify", "T5", "--phi", "pwl:0,0;1,0;2,1", "--p", "l1",
                       "--json")
    assert code == 0
    assert json.loads(out)["reports"][0]["status"] == "hypothesis-not-met"


def test_verify_json_is_deterministic(capsys):
    args = ("verify", "T1", "T2", "--phi", "exp_minus", "--p", "lq:2",
            "--seed", "7", "--budget", "20", "--json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_config_file_merges_under_flags(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"phi": "power:2", "p": "l1", "values": "3,4"}))
    code, out, _ = run(capsys, "norm", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(10.0, rel=1e-9)
    # explicit flag wins over the config value
    code, out, _ = run(capsys, "norm", "--config", str(cfg), "--p", "linf")
    assert json.loads(out)["value"] == pytest.approx(5.0, abs=1e-8)


def test_out_file_writing(tmp_path, capsys):
    target = tmp_path / "modulus.csv"
    code, out, _ = run(capsys, "modulus", "--p", "l1", "--grid", "0.5", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.startswith("epsilon,delta\n")
    assert "\r" not in text


def test_space_file_loading(tmp_path, capsys):
    sp = tmp_path / "space.json"
    sp.write_text(json.dumps({"atoms": [{"w": 1}, {"w": 1}]}))
    code, out, _ = run(capsys, "norm", "--phi", "power:2", "--p", "l1",
                       "--values", "3,4", "--space", str(sp))
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(10.0, rel=1e-9)
