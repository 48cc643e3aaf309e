"""
End-to-end tests for the dragon-hull command line
"""

import io
import json
import math

import pandas as pd
import pytest

from dragon_hull.cli import main
from dragon_hull.cli.commands import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, run_sweep
from dragon_hull.core import make_params
from dragon_hull.export import UPPER_REGION_WARNING
from dragon_hull.export.tables import SWEEP_COLUMNS
from dragon_hull.theory import eta_root, predicted_hull

QUARTER_TURN = "0.7853981633974483"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.unit
class TestParams:
    def test_text(self, capsys):
        code, out = run(capsys, "params", "--eta", QUARTER_TURN)
        assert code == EXIT_OK
        assert "k=4" in out
        assert "WARNING" not in out

    def test_upper_region_warning(self, capsys):
        code, out = run(capsys, "params", "--eta", "1.0")
        assert code == EXIT_OK
        assert f"WARNING: {UPPER_REGION_WARNING}" in out

    def test_json_in_degrees(self, capsys):
        code, out = run(capsys, "params", "--eta", "45", "--degrees", "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload['cell']['k'] == 4
        assert payload['a']['re'] == pytest.approx(0.5)
        assert payload['c'] == pytest.approx(4 / 3)
        assert payload['warnings'] == []

    def test_csv_splits_complex_values(self, capsys):
        code, out = run(capsys, "params", "--eta", QUARTER_TURN, "--format", "csv")
        frame = pd.read_csv(io.StringIO(out))
        assert code == EXIT_OK
        assert {'a_re', 'a_im', 'z0_re', 'z0_im'} <= set(frame.columns)

    @pytest.mark.parametrize("eta", ["2.0", "0", "-0.3"])
    def test_out_of_domain(self, capsys, eta):
        code, out = run(capsys, "params", f"--eta={eta}")
        assert code == EXIT_USAGE
        assert out == ""

    def test_svg_not_supported(self, capsys):
        code, _ = run(capsys, "params", "--eta", QUARTER_TURN, "--format", "svg")
        assert code == EXIT_USAGE


@pytest.mark.unit
class TestEtaTable:
    def test_k_max_too_small(self, capsys):
        code, _ = run(capsys, "eta-table", "--k-max", "3")
        assert code == EXIT_USAGE

    def test_csv(self, capsys):
        code, out = run(capsys, "eta-table", "--k-max", "6", "--format", "csv")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "k,eta_k,pi_over_k,pi_over_k_minus_1"
        assert [line.split(",")[0] for line in lines[1:]] == ["4", "5", "6"]

    def test_json(self, capsys):
        code, out = run(capsys, "eta-table", "--k-max", "5", "--format", "json")
        rows = json.loads(out)
        assert code == EXIT_OK
        assert [row['k'] for row in rows] == [4, 5]

    def test_tol_sets_bisection_width(self, capsys):
        code, out = run(
            capsys, "eta-table", "--k-max", "5", "--tol", "1e-3", "--format", "json"
        )
        rows = json.loads(out)
        assert code == EXIT_OK
        assert rows[0]['eta_k'] == eta_root(4, 1e-3)
        assert rows[0]['eta_k'] == pytest.approx(math.acos(2.0**-0.75), abs=1e-3)

    def test_non_positive_tol(self, capsys):
        code, _ = run(capsys, "eta-table", "--k-max", "5", "--tol", "0")
        assert code == EXIT_USAGE


@pytest.mark.unit
class TestHull:
    def test_json_quarter_turn(self, capsys):
        code, out = run(
            capsys, "hull", "--eta", "45", "--degrees", "--depth", "10", "--format", "json"
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert len(payload['vertices']) == 10
        assert payload['depth'] == 10
        assert payload['report']['passed'] is True

    def test_upper_region_reports_empirical_only(self, capsys):
        code, out = run(capsys, "hull", "--eta", "1.0", "--depth", "8", "--format", "json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload['open_region'] is True
        assert payload['report'] is None
        assert len(payload['empirical_vertices']) >= 3

    def test_json_floats_round_trip(self, capsys):
        code, out = run(
            capsys, "hull", "--eta", QUARTER_TURN, "--depth", "8", "--format", "json"
        )
        payload = json.loads(out)
        hull = predicted_hull(make_params(float(QUARTER_TURN)))
        assert code == EXIT_OK
        assert payload['eta'] == float(QUARTER_TURN)
        labels = [str(lp.label) for lp in hull.vertices]
        assert [v['label'] for v in payload['vertices']] == labels
        assert [complex(v['re'], v['im']) for v in payload['vertices']] == [
            lp.value for lp in hull.vertices
        ]

    def test_text_mentions_upper_region(self, capsys):
        code, out = run(capsys, "hull", "--eta", "1.0", "--depth", "8")
        assert code == EXIT_OK
        assert UPPER_REGION_WARNING in out

    def test_csv_sources(self, capsys):
        code, out = run(capsys, "hull", "--eta", QUARTER_TURN, "--depth", "8", "--format", "csv")
        frame = pd.read_csv(io.StringIO(out))
        assert code == EXIT_OK
        assert list(frame.columns) == ["source", "label", "re", "im"]
        assert (frame['source'] == "predicted").sum() == 10

    def test_svg_to_file(self, capsys, tmp_path):
        target = tmp_path / "hull.svg"
        code, out = run(
            capsys, "hull", "--eta", QUARTER_TURN, "--depth", "8", "--format", "svg",
            "--out", str(target),
        )
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text(encoding="utf-8").startswith("<?xml")

    def test_range_needs_single_eta(self, capsys):
        code, _ = run(capsys, "hull", "--eta-range", "0.3:0.6:3")
        assert code == EXIT_USAGE

    def test_svg_with_range_rejected(self, capsys):
        code, _ = run(capsys, "hull", "--eta-range", "0.3:0.6:3", "--format", "svg")
        assert code == EXIT_USAGE

    def test_bad_range_syntax(self, capsys):
        code, _ = run(capsys, "hull", "--eta-range", "0.3:0.6")
        assert code == EXIT_USAGE

    def test_depth_out_of_bounds(self, capsys):
        code, _ = run(capsys, "hull", "--eta", QUARTER_TURN, "--depth", "40")
        assert code == EXIT_USAGE


@pytest.mark.unit
class TestCodingCheck:
    def test_vertex_period_passes(self, capsys):
        code, out = run(
            capsys, "coding-check", "--dragon", "--eta", QUARTER_TURN, "--period", "2211"
        )
        assert code == EXIT_OK
        assert "PASSES" in out

    def test_dragon_takes_eta_value(self, capsys):
        code, out = run(
            capsys, "coding-check", "--dragon", "0.785398", "--period", "2211", "--format", "json"
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload['verdict'] == "PASSES"
        assert payload['eta'] == 0.785398
        assert payload['product']['re'] == pytest.approx(0.25, abs=1e-6)

    def test_dragon_value_in_degrees(self, capsys):
        code, out = run(
            capsys, "coding-check", "--dragon", "45", "--degrees", "--period", "1",
            "--format", "json",
        )
        payload = json.loads(out)
        assert code == EXIT_CHECK_FAILED
        assert payload['alpha'] == pytest.approx(7 * math.pi / 4)

    def test_dragon_value_conflicts_with_eta(self, capsys):
        code, _ = run(
            capsys, "coding-check", "--dragon", "0.5", "--eta", "0.6", "--period", "2211"
        )
        assert code == EXIT_USAGE

    def test_single_map_period_fails(self, capsys):
        code, out = run(
            capsys, "coding-check", "--dragon", "--eta", QUARTER_TURN, "--period", "1",
            "--format", "json",
        )
        payload = json.loads(out)
        assert code == EXIT_CHECK_FAILED
        assert payload['verdict'] == "FAILS"
        assert payload['alpha'] == pytest.approx(7 * math.pi / 4)

    def test_empty_period(self, capsys):
        code, _ = run(
            capsys, "coding-check", "--dragon", "--eta", QUARTER_TURN, "--period", ""
        )
        assert code == EXIT_USAGE

    def test_dragon_needs_eta(self, capsys):
        code, _ = run(capsys, "coding-check", "--dragon", "--period", "2211")
        assert code == EXIT_USAGE

    def test_explicit_maps(self, capsys):
        code, out = run(
            capsys, "coding-check", "--map", "0.5,0,0,0", "--map", "0.5,0,1,0",
            "--prefix", "2", "--period", "12", "--format", "json",
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload['coding'] == "2(12)^inf"
        assert len(payload['ifs']) == 2

    def test_rotating_map_fails(self, capsys):
        code, _ = run(
            capsys, "coding-check", "--map", "0.5,0.5,0,0", "--map", "0.5,0,1,0",
            "--period", "12",
        )
        assert code == EXIT_CHECK_FAILED

    def test_symbol_without_map(self, capsys):
        code, _ = run(
            capsys, "coding-check", "--map", "0.5,0,0,0", "--map", "0.5,0,1,0",
            "--period", "3",
        )
        assert code == EXIT_USAGE

    def test_malformed_map(self, capsys):
        code, _ = run(capsys, "coding-check", "--map", "0.5,0", "--period", "1")
        assert code == EXIT_USAGE


@pytest.mark.unit
class TestVerify:
    def test_list(self, capsys):
        code, out = run(capsys, "verify", "--list")
        assert code == EXIT_OK
        assert json.loads(out)['total_suites'] == 12

    def test_unknown_suite(self, capsys):
        code, _ = run(capsys, "verify", "--suite", "no-such-suite")
        assert code == EXIT_USAGE

    def test_selected_suites(self, capsys):
        code, out = run(capsys, "verify", "--suite", "roots,angles")
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "2 suites, 0 failed"

    def test_text_reports_measured_values(self, capsys):
        code, out = run(capsys, "verify", "--suite", "angles", "--eta", "0.5")
        assert code == EXIT_OK
        assert out.splitlines()[0].startswith("PASS")
        assert "max_deviation=" in out
        assert "worst_eta=0.5" in out

    def test_escape_suite_by_alias(self, capsys):
        code, out = run(capsys, "verify", "--suite", "remark62", "--eta", "1.037")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0].startswith("ADVISORY z6-escape")
        assert "orientation=" in out
        assert "polynomial_value=" in out
        assert lines[-1] == "1 suites, 0 failed"

    def test_json_with_cells(self, capsys):
        code, out = run(
            capsys, "verify", "--suite", "boundary-angles", "--cells", "4..5", "--format", "json"
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload['boundary-angles']['metadata']['cells'] == [4, 5]

    def test_bad_cells(self, capsys):
        code, _ = run(capsys, "verify", "--cells", "four")
        assert code == EXIT_USAGE


@pytest.mark.unit
class TestSweep:
    def test_csv(self, capsys):
        code, out = run(
            capsys, "sweep", "--eta-range", "0.6:0.7:3", "--depth", "8", "--format", "csv"
        )
        frame = pd.read_csv(io.StringIO(out))
        assert code == EXIT_OK
        assert list(frame.columns) == SWEEP_COLUMNS
        assert len(frame) == 3
        assert frame['match'].all()

    def test_needs_etas(self, capsys):
        code, _ = run(capsys, "sweep")
        assert code == EXIT_USAGE

    @pytest.mark.asyncio
    async def test_rows_keep_eta_order(self):
        rows = await run_sweep([0.7, 0.5, 1.0], 8, 1e-9)
        assert [row['eta'] for row in rows] == [0.7, 0.5, 1.0]
        assert rows[2]['cell'] == "upper_region"
        assert rows[2]['match'] is None
        assert rows[2]['empirical_count'] >= 3
        assert rows[0]['match'] is True


@pytest.mark.unit
class TestConfigOverride:
    def test_depth_from_file(self, capsys, tmp_path):
        config = tmp_path / "settings.yaml"
        config.write_text("defaults:\n  depth: 9\n", encoding="utf-8")
        code, out = run(
            capsys, "hull", "--eta", QUARTER_TURN, "--format", "json", "--config", str(config)
        )
        assert code == EXIT_OK
        assert json.loads(out)['depth'] == 9

    def test_missing_file(self, capsys, tmp_path):
        code, _ = run(
            capsys, "params", "--eta", QUARTER_TURN, "--config", str(tmp_path / "nope.yaml")
        )
        assert code == EXIT_USAGE
