import csv
import io
import json
import subprocess
import sys

import pytest

from jacobi_ellipse.cli import main

from conftest import GOLDEN


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCoeffs:
    def test_csv(self, capsys):
        code, out, _ = run(["coeffs", "--alpha", "0", "--beta", "0", "--n", "2"], capsys)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and [float(r["d_k"]) for r in rows] == pytest.approx([0.25, 0.0, 0.375])

    @pytest.mark.parametrize("method", ["explicit-3F2", "recurrence", "transform-oracle"])
    def test_json_methods(self, capsys, method):
        code, out, _ = run(["coeffs", "--alpha", "1", "--beta", "0.5", "--n", "4", "--method", method, "--format", "json"], capsys)
        obj = json.loads(out)
        assert code == 0 and obj["method"] == method and len(obj["d"]) == 5

    def test_domain_error_exit_code(self, capsys):
        code, out, err = run(["coeffs", "--alpha", "-1", "--beta", "0", "--n", "2"], capsys)
        assert code == 2 and out == "" and "alpha must exceed -1" in err

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "d.json"
        code, out, _ = run(["coeffs", "--alpha", "0", "--beta", "0", "--n", "3", "--format", "json", "--out", str(path)], capsys)
        assert code == 0 and out == "" and json.loads(path.read_text())["n"] == 3


class TestEval:
    def test_series_matches_direct(self, capsys):
        code, out, _ = run(["eval", "--alpha", "0.3", "--beta", "-0.2", "--n", "7", "--rho", "1.5", "--grid", "32"], capsys)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 32
        assert max(float(r["abs_diff_recurrence"]) for r in rows) < 1e-12

    def test_explicit_angles(self, capsys):
        code, out, _ = run(["eval", "--alpha", "0", "--beta", "0", "--n", "1", "--rho", "2", "--theta", "0", "--format", "json"], capsys)
        assert code == 0 and json.loads(out)["rows"][0]["re"] == pytest.approx(1.25)


class TestExtrema:
    def test_jacobi_max(self, capsys):
        code, out, _ = run(["extrema", "max", "--alpha", "1", "--beta", "0", "--n", "3", "--rho", "1", "--grid", "4096"], capsys)
        obj = json.loads(out)
        assert code == 0 and obj["value"] == pytest.approx(4.0) and obj["theorem_tag"] == "max-right-endpoint"

    def test_chebyshev_U_min(self, capsys):
        code, out, _ = run(["extrema", "min", "--cheb", "U", "--n", "3", "--rho", "2", "--grid", "4096"], capsys)
        obj = json.loads(out)
        assert code == 0 and obj["theta_locations"] == pytest.approx([1.5707963267948966, 4.71238898038469])
        assert obj["discrepancy"] < 1e-9

    def test_rational(self, capsys):
        code, out, _ = run(["extrema", "max", "--rational", "0.5", "0.25", "--rho", "2", "--grid", "4096", "--format", "csv"], capsys)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and len(rows) == 2 and rows[0]["theorem_tag"] == "rational-factor-minor-axis"

    def test_gegenbauer_with_estimate(self, capsys):
        code, out, _ = run(["extrema", "min", "--lambda", "1", "--n", "4", "--rho", "2", "--critical-radius", "--grid", "4096"], capsys)
        obj = json.loads(out)
        assert code == 0 and obj["critical_radius_estimate"]["certified"] is False

    def test_needs_one_family(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["extrema", "max", "--cheb", "T", "--lambda", "1", "--n", "3", "--rho", "2"])
        assert exc.value.code == 2

    def test_tight_ellipse_is_domain_error(self, capsys):
        code, _, err = run(["extrema", "min", "--cheb", "T", "--n", "3", "--rho", "1"], capsys)
        assert code == 2 and err.startswith("error:")


class TestOtherCommands:
    def test_rho_star(self, capsys):
        code, out, _ = run(["rho-star", "--n-max", "100"], capsys)
        assert code == 0 and out == (GOLDEN / "fig4.csv").read_text()

    def test_rho_star_odd_rejected(self, capsys):
        code, _, err = run(["rho-star", "--n-max", "7"], capsys)
        assert code == 2 and "even" in err

    def test_asymptotic(self, capsys):
        code, out, _ = run(["asymptotic", "--alpha", "0", "--beta", "0", "--n", "64", "--rho", "2", "--grid", "1024"], capsys)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and float(rows[0]["n_times_error"]) <= 1.5 * float(rows[0]["Lambda"])

    def test_lower_bound(self, capsys):
        code, out, _ = run(["lower-bound", "--alpha", "0.5", "--beta", "0.5", "--n", "64", "--rho", "2", "--sample-min", "--grid", "2048"], capsys)
        obj = json.loads(out)
        assert code == 0 and obj["min_abs_sampled"] >= obj["lower_bound"]
        assert obj["circle_max_method"] == "closed-form"

    @pytest.mark.parametrize("fid", [1, 2, 3])
    def test_figure_matches_golden(self, capsys, fid):
        code, out, _ = run(["figure", "--id", str(fid)], capsys)
        assert code == 0 and out == (GOLDEN / f"fig{fid}.csv").read_text()

    def test_interp_bound_warns(self, capsys):
        code, out, err = run(["interp-bound", "--alpha", "0", "--beta", "0", "--n", "4", "--rho", "1.005", "--M", "1", "--grid", "4096"], capsys)
        assert code == 0 and "warning: near-degenerate" in err and json.loads(out)["bound"] > 0

    def test_interp_bound_rejects_interval(self, capsys):
        code, _, err = run(["interp-bound", "--alpha", "0", "--beta", "0", "--n", "4", "--rho", "1", "--M", "1"], capsys)
        assert code == 2 and "rho must exceed 1" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "jacobi_ellipse", "coeffs", "--alpha", "0", "--beta", "0", "--n", "1"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout.splitlines() == ["k,d_k", "0,0.0", "1,0.5"]
