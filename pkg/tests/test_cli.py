"""Command-line surface: output formats, round-trips, scenarios, exit codes."""

import dataclasses
import io
import json
import math
import shutil
import subprocess

import pytest

from hubbard_ed.cli import (
    CSV_HEADER,
    SCENARIOS,
    main,
    read_sweep_csv,
    write_sweep_csv,
    _round9,
)
from hubbard_ed.sweep import Axis, SweepSpec, run_sweep


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_point(out: str) -> dict:
    record = {}
    for line in out.strip().splitlines():
        key, _, value = line.partition(" = ")
        record[key] = value
    return record


def test_point_two_site_maximum(capsys):
    code, out, _ = run_cli(capsys, "point", "--L", "2", "--geometry", "chain", "--u0", "0")
    assert code == 0
    record = parse_point(out)
    assert float(record["E"]) == pytest.approx(2.0, abs=1e-9)
    assert float(record["ground_energy"]) == pytest.approx(-2.0, abs=1e-9)
    assert record["degenerate"] == "false"
    assert float(record["gap"]) == pytest.approx(2.0, abs=1e-9)


def test_point_plateau(capsys):
    code, out, _ = run_cli(capsys, "point", "--u", "80", "--u0", "200")
    assert code == 0
    assert float(parse_point(out)["E"]) == pytest.approx(math.log2(3), abs=0.02)


def test_point_frozen_pair_region(capsys):
    code, out, _ = run_cli(capsys, "point", "--u", "-80", "--u0", "0")
    assert code == 0
    # both electrons sit on the attractive site; the residual site-1
    # entropy is second order in t/|u|
    assert float(parse_point(out)["E"]) == pytest.approx(0.004505205, abs=1e-8)


def test_point_u_site_override(capsys):
    _, via_knobs, _ = run_cli(capsys, "point", "--u0", "5", "--u", "-3")
    _, via_list, _ = run_cli(capsys, "point", "--u-site", "5,5,-3")
    assert via_knobs == via_list


def test_spectrum_two_site(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--L", "2", "--geometry", "chain")
    assert code == 0
    lines = out.strip().splitlines()
    values = [float(v) for v in lines[1:-1]]
    assert values == pytest.approx([-2.0, 0.0, 0.0, 2.0], abs=1e-9)
    assert lines[-1].startswith("gap = ")


def test_spectrum_ring_sector(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--u-site", "0,0,0")
    assert code == 0
    values = [float(v) for v in out.strip().splitlines()[1:-1]]
    assert len(values) == 9
    assert values[0] == pytest.approx(-4.0, abs=1e-9)


def test_sweep_tiny_grid_stdout(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--axis1", "u0:-10:10:3", "--u", "0", "--kT", "0"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4
    assert out.endswith("\n")
    first = lines[1].split(",")
    assert first[0] == "ring"
    assert float(first[1]) == -10.0


def test_csv_round_trip_exact(tmp_path):
    spec = SweepSpec(
        axis1=Axis("u0", -7.0, 7.0, 5), geometries=("ring", "chain"), u=3.3, kT=0.25
    )
    result = run_sweep(spec)
    buffer = io.StringIO()
    write_sweep_csv(result, buffer)
    buffer.seek(0)
    parsed = read_sweep_csv(buffer)
    expected = tuple(
        dataclasses.replace(
            row,
            u0_over_t=_round9(row.u0_over_t),
            u_over_t=_round9(row.u_over_t),
            kT_over_t=_round9(row.kT_over_t),
            entropy_bits=_round9(row.entropy_bits),
            ground_energy=_round9(row.ground_energy),
            gap=_round9(row.gap),
        )
        for row in result.rows
    )
    assert parsed == expected


def test_csv_reader_rejects_bad_input(tmp_path):
    bad_header = io.StringIO("geometry,u0\nring,0\n")
    with pytest.raises(ValueError, match="header"):
        read_sweep_csv(bad_header)
    missing_field = io.StringIO(CSV_HEADER + "\nring,0,0,0,1\n")
    with pytest.raises(ValueError, match="line 2"):
        read_sweep_csv(missing_field)
    bad_flag = io.StringIO(CSV_HEADER + "\nring,0,0,0,1,-2,maybe,1\n")
    with pytest.raises(ValueError, match="degenerate"):
        read_sweep_csv(bad_flag)
    bad_number = io.StringIO(CSV_HEADER + "\nring,zero,0,0,1,-2,true,1\n")
    with pytest.raises(ValueError, match="line 2"):
        read_sweep_csv(bad_number)


def test_sweep_csv_file_output(tmp_path, capsys):
    target = tmp_path / "grid.csv"
    code, out, _ = run_cli(
        capsys, "sweep", "--axis1", "u0:-1:1:3", "--output", str(target)
    )
    assert code == 0
    assert out == ""
    text = target.read_text()
    assert text.startswith(CSV_HEADER + "\n")
    assert text.endswith("\n")
    assert len(text.splitlines()) == 4


def test_sweep_json_output(tmp_path):
    target = tmp_path / "grid.json"
    code = main(
        [
            "sweep", "--axis1", "u0:-1:1:3", "--geometries", "chain",
            "--u", "2", "--kT", "0.5", "--format", "json",
            "--output", str(target),
        ]
    )
    assert code == 0
    payload = json.loads(target.read_text())
    assert set(payload) == {"config", "rows"}
    config = payload["config"]
    assert config["L"] == 3
    assert config["geometries"] == ["chain"]
    assert config["kT"] == 0.5
    assert config["axis1"] == {"name": "u0", "start": -1.0, "stop": 1.0, "count": 3}
    assert config["axis2"] is None
    assert len(payload["rows"]) == 3
    row = payload["rows"][0]
    assert row["geometry"] == "chain"
    assert isinstance(row["degenerate"], bool)
    assert set(row) == {
        "geometry", "u0_over_t", "u_over_t", "kT_over_t",
        "entropy_bits", "ground_energy", "degenerate", "gap",
    }


def test_scenario_table():
    assert set(SCENARIOS) == {"fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c"}
    assert SCENARIOS["fig2a"].L == 2
    assert SCENARIOS["fig2a"].geometries == ("chain",)
    assert SCENARIOS["fig2b"].num_rows() == 242
    assert SCENARIOS["fig2c"].u == -80.0
    assert SCENARIOS["fig3a"].num_rows() == 81 * 81
    # the three surface scenarios differ only in temperature
    assert dataclasses.replace(SCENARIOS["fig3a"], kT=10.0) == SCENARIOS["fig3b"]
    assert dataclasses.replace(SCENARIOS["fig3a"], kT=80.0) == SCENARIOS["fig3c"]


def test_scenario_json_config_echo(tmp_path):
    target = tmp_path / "fig2a.json"
    # a scenario overrides the manual axis flags
    code = main(
        [
            "sweep", "--scenario", "fig2a", "--axis1", "u:0:1:2",
            "--format", "json", "--output", str(target),
        ]
    )
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["config"]["scenario"] == "fig2a"
    assert payload["config"]["L"] == 2
    assert payload["config"]["axis1"]["name"] == "u0"
    assert len(payload["rows"]) == 121


def test_usage_errors_exit_2(capsys):
    assert main(["warp"]) == 2
    assert main(["point", "--geometry", "torus"]) == 2
    assert main(["sweep"]) == 2  # no axis and no scenario
    assert main(["sweep", "--axis1", "u8:0:1:5"]) == 2
    assert main(["sweep", "--axis1", "u0:0:1"]) == 2
    assert main(["point", "--L", "2", "--geometry", "ring"]) == 2
    assert main(["point", "--u-site", "1,2"]) == 2  # length mismatch for L=3
    assert main(["point", "--kT", "-1"]) == 2
    capsys.readouterr()


def test_io_failure_exits_1(capsys):
    code = main(
        ["sweep", "--axis1", "u0:0:1:2", "--output", "/nonexistent-dir/out.csv"]
    )
    assert code == 1
    assert "i/o" in capsys.readouterr().err


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    assert main(["sweep", "--help"]) == 0
    capsys.readouterr()


def test_installed_entry_point():
    exe = shutil.which("hubbard-ed")
    assert exe is not None
    proc = subprocess.run(
        [exe, "point", "--L", "2", "--geometry", "chain"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("E = 2")
