"""Command-line surface: table schemas, determinism, exit codes."""

import json
import math

import numpy as np
import pytest

from cvsqueeze.cli import main


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSweep:
    def test_table_values(self, capsys):
        code, out, _ = run(["sweep", "--alphas", "0.25,0.5,0.75"], capsys)
        assert code == 0
        lines = [line for line in out.splitlines() if not line.startswith("#")]
        header = lines[0].split(",")
        assert header[0] == "mode"
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == 6
        by_key = {(row[0], row[1]): row for row in rows}
        # separately squeezed states stay separable with zero negativity
        for alpha in ("0.25", "0.5", "0.75"):
            row = by_key[("1", alpha)]
            assert row[5] == "SEPARABLE"
            assert abs(float(row[6])) < 1e-12
        # jointly squeezed states: negativity ln 4, ln 2, ln(4/3)
        expected = {"0.25": math.log(4), "0.5": math.log(2), "0.75": math.log(4 / 3)}
        for alpha, value in expected.items():
            row = by_key[("2", alpha)]
            assert row[5] == "ENTANGLED"
            assert float(row[6]) == pytest.approx(value, rel=1e-12)
            assert float(row[8]) < 1e-12  # residual column

    def test_deterministic_output(self, capsys):
        _, first, _ = run(["sweep", "--alphas", "0.3,0.6"], capsys)
        _, second, _ = run(["sweep", "--alphas", "0.3,0.6"], capsys)
        assert first == second

    def test_json_format(self, capsys):
        code, out, _ = run(["sweep", "--alphas", "0.5", "--format", "json"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["columns"][0] == "mode"
        assert len(payload["rows"]) == 2

    def test_invalid_alpha_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["sweep", "--alphas", "0.5,1.5"])
        assert excinfo.value.code == 2

    def test_writes_file(self, tmp_path, capsys):
        target = tmp_path / "sweep.csv"
        code, out, _ = run(["sweep", "--alphas", "0.5", "--out", str(target)], capsys)
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("# command = sweep")

    def test_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("CVSQUEEZE_HBAR", "2.0")
        code, out, _ = run(["sweep", "--alphas", "0.5"], capsys)
        assert code == 0
        assert "# hbar = 2" in out
        # lambda entries scale with hbar
        rows = [l.split(",") for l in out.splitlines() if l and not l.startswith("#")][1:]
        mode2 = [r for r in rows if r[0] == "2"][0]
        assert float(mode2[3]) == pytest.approx(2.0 * 0.5 / 2, rel=1e-12)


class TestWigner:
    def test_centered_peak_at_origin(self, capsys):
        code, out, _ = run(
            ["wigner", "--alpha", "0.5", "--n1", "5", "--n2", "5",
             "--range1=-2:2", "--range2=-2:2"],
            capsys,
        )
        assert code == 0
        rows = [l.split(",") for l in out.splitlines() if l and not l.startswith("#")][1:]
        values = {(float(r[0]), float(r[1])): float(r[2]) for r in rows}
        peak = max(values, key=values.get)
        assert peak == (0.0, 0.0)
        assert values[peak] == pytest.approx(math.pi**-2, rel=1e-12)

    def test_shifted_peak_moves(self, capsys):
        from cvsqueeze import states

        labels = states.DisplacementLabels(0.8 + 0.0j, 0.4 + 0.0j)
        shift = states.shift_params(2, 0.5, states.OscillatorGeometry(1, 1), labels)
        code, out, _ = run(
            ["wigner", "--alpha", "0.5", "--z1", "0.8", "--z2", "0.4",
             "--n1", "81", "--n2", "81", "--range1=-3:3", "--range2=-3:3"],
            capsys,
        )
        assert code == 0
        rows = [l.split(",") for l in out.splitlines() if l and not l.startswith("#")][1:]
        values = {(float(r[0]), float(r[1])): float(r[2]) for r in rows}
        peak = max(values, key=values.get)
        assert peak[0] == pytest.approx(shift.y1, abs=0.08)
        assert peak[1] == pytest.approx(shift.y2, abs=0.08)

    def test_grid_sum_matches_marginal(self, capsys):
        # summing the position slice at p = 0 times the cell area
        # approximates the momentum-space density at the origin
        code, out, _ = run(
            ["wigner", "--alpha", "0.5", "--n1", "161", "--n2", "161",
             "--range1=-8:8", "--range2=-8:8"],
            capsys,
        )
        assert code == 0
        rows = [l.split(",") for l in out.splitlines() if l and not l.startswith("#")][1:]
        values = np.array([float(r[2]) for r in rows])
        cell = (16 / 160) ** 2
        total = values.sum() * cell
        # integral of W over x at p = 0 equals (pi hbar^2 det M^(1/2))^-1
        assert total == pytest.approx(1 / math.pi, rel=1e-4)

    def test_momentum_slice(self, capsys):
        code, out, _ = run(
            ["wigner", "--alpha", "0.5", "--axes", "p1,p2", "--n1", "3", "--n2", "3",
             "--range1=-1:1", "--range2=-1:1", "--fix", "x1=0.5"],
            capsys,
        )
        assert code == 0
        assert "# fixed_x1 = 0.5" in out
        assert "# fixed_x2 = 0" in out

    def test_rejects_bad_axes(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["wigner", "--alpha", "0.5", "--axes", "x1,q9"])
        assert excinfo.value.code == 2


class TestVerifyCommand:
    def test_phase_space_suite_passes(self, capsys):
        code, out, _ = run(["verify", "phase_space"], capsys)
        assert code == 0
        assert "[PASS]" in out
        assert "[FAIL]" not in out
        assert "symplectic spectrum" in out

    def test_model_suite_passes(self, capsys):
        code, out, _ = run(["verify", "model"], capsys)
        assert code == 0

    def test_unknown_suite_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "everything"])
        assert excinfo.value.code == 2


class TestHamiltonianCommand:
    def test_no_squeezing_zero_coupling(self, capsys):
        code, out, _ = run(
            ["hamiltonian", "--alpha", "0.999999999999", "--omega1", "1", "--omega2", "1"],
            capsys,
        )
        assert code == 0
        payload = json.loads(out)
        q = payload["quadratic"]["q"]
        assert abs(q[0][1]) < 1e-11
        assert abs(q[2][3]) < 1e-11

    def test_symmetric_coupling_and_energy(self, capsys, tmp_path):
        target = tmp_path / "ham.json"
        code, _, _ = run(
            ["hamiltonian", "--alpha", "0.5", "--omega1", "1", "--omega2", "1",
             "--out", str(target)],
            capsys,
        )
        assert code == 0
        payload = json.loads(target.read_text())
        q = payload["quadratic"]["q"]
        strength = (1 - 0.25) / 0.5
        assert abs(q[0][1]) == pytest.approx(strength * 0.5, rel=1e-12)
        assert abs(q[2][3]) == pytest.approx(strength * 0.5, rel=1e-12)
        ground = payload["ground_state"]
        assert ground["within_tolerance"]
        assert ground["expected"] == pytest.approx(1.0, rel=1e-15)
        assert abs(ground["energy"] - ground["expected"]) < 1e-6
