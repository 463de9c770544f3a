import json

import pytest

from qutritxxz.cli import main
from qutritxxz.sweeps import CSV_COLUMNS


def test_negativity_point(capsys):
    assert main(["negativity", "--R", "0.5", "--Dz", "1", "--B", "0", "--T", "0.04"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == ",".join(CSV_COLUMNS)
    row = dict(zip(out[0].split(","), out[1].split(",")))
    assert float(row["negativity"]) == pytest.approx(0.96596, abs=1e-4)


def test_negativity_json(capsys):
    assert main(["negativity", "--J", "1.0", "--T", "0.5", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["J"] == 1.0
    assert 0.0 <= payload["negativity"] <= 1.0


def test_spectrum(capsys):
    assert main(["spectrum", "--R", "1", "--Dz", "1", "--B", "1",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["eigenvalues"]["eps1"] == pytest.approx(2.024393, abs=1e-5)
    assert payload["max_gap_vs_numeric"] < 1e-10
    assert payload["chi1"] * payload["chi2"] == pytest.approx(8.0, abs=1e-12)


def test_sweep_writes_csv(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    rc = main(["sweep", "--vary", "T", "--from", "0.1", "--to", "1.0",
               "--steps", "10", "--R", "0.5", "--Dz", "1", "--out", str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 11
    assert (tmp_path / "sweep.csv.meta.json").exists()


def test_sweep_point_reproducible(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    main(["sweep", "--vary", "B", "--from", "0.0", "--to", "1.0", "--steps", "5",
          "--R", "0.5", "--Dz", "1", "--T", "0.2", "--out", str(out)])
    capsys.readouterr()
    lines = out.read_text().splitlines()
    row = dict(zip(lines[0].split(","), lines[3].split(",")))
    assert main(["negativity", "--R", row["R"], "--Dz", row["Dz"], "--B", row["B"],
                 "--gamma", row["gamma"], "--T", row["T"]]) == 0
    out2 = capsys.readouterr().out.splitlines()
    row2 = dict(zip(out2[0].split(","), out2[1].split(",")))
    assert row2["negativity"] == row["negativity"]


def test_figure_preset_with_svg(tmp_path):
    out, svg = tmp_path / "fig4c.csv", tmp_path / "fig4c.svg"
    assert main(["figure", "fig4c", "--out", str(out), "--svg", str(svg)]) == 0
    assert out.read_text().splitlines()[0] == ",".join(CSV_COLUMNS)
    assert svg.read_text().startswith("<svg")


def test_critical_field(capsys):
    assert main(["critical", "--axis", "B", "--R", "1", "--Dz", "1",
                 "--max", "2"]) == 0
    points = json.loads(capsys.readouterr().out)
    assert len(points) == 2
    assert points[0]["value"] == pytest.approx(0.539683, abs=1e-5)
    assert points[1]["value"] == pytest.approx(1.246614, abs=1e-5)


def test_critical_dz(capsys):
    assert main(["critical", "--axis", "Dz", "--R", "0.5", "--B", "0.5",
                 "--T", "0.08"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "NegativityOnset"
    assert 0.0 < payload["value"] < 1.0


def test_mutually_exclusive_r_and_j(capsys):
    assert main(["negativity", "--R", "0.5", "--J", "1.0", "--T", "1"]) == 2


def test_invalid_temperature(capsys):
    assert main(["negativity", "--R", "0.5", "--T", "-1"]) == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_unknown_figure_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["figure", "fig9"])
    assert exc.value.code == 2


def test_config_file_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"R": 0.5, "Dz": 1.0, "B": 0.0, "T": 0.04}))
    assert main(["negativity", "--config", str(cfg)]) == 0
    base = capsys.readouterr().out.splitlines()
    row = dict(zip(base[0].split(","), base[1].split(",")))
    assert float(row["negativity"]) == pytest.approx(0.96596, abs=1e-4)
    # a flag beats the config value
    assert main(["negativity", "--config", str(cfg), "--T", "5.0"]) == 0
    hot = capsys.readouterr().out.splitlines()
    row_hot = dict(zip(hot[0].split(","), hot[1].split(",")))
    assert float(row_hot["T"]) == 5.0
    assert float(row_hot["negativity"]) == 0.0


def test_config_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"R": 0.5, "banana": 1}))
    assert main(["negativity", "--config", str(cfg)]) == 2


def test_r_outside_window_warns(capsys):
    assert main(["negativity", "--R", "7.5", "--T", "1"]) == 0
    assert "outside the HF validity window" in capsys.readouterr().err


def test_validate_fast(capsys):
    assert main(["validate", "--fast"]) == 0
    out = capsys.readouterr().out
    assert "ALL CHECKS PASSED" in out
    assert "FAIL" not in out
