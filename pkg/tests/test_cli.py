import csv
import json
import math
from pathlib import Path

import numpy as np
import pytest
from scipy.integrate import simpson

from gaussedge import tw_cdf, tw_quantile
from gaussedge.cli import main

from paper_tables import TABLE2


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


class TestTwCommand:
    def test_cdf_grid_round_trips_at_full_precision(self, tmp_path):
        out = tmp_path / "tw.csv"
        assert main(["tw", "--beta", "2", "--s0=-2,0,2", "--out", str(out)]) == 0
        header, rows = _read_csv(out)
        assert header == ["s", "F2"]
        for s, v in rows:
            assert float(v) == tw_cdf(2, float(s))

    def test_quantile_round_trip(self, tmp_path):
        out = tmp_path / "q.csv"
        assert main(["tw", "--beta", "2", "--alpha", "0.99", "--out", str(out)]) == 0
        _, rows = _read_csv(out)
        q = float(rows[0][1])
        assert tw_cdf(2, q) == pytest.approx(0.99, abs=1e-8)

    def test_beta1_grid_strictly_increasing(self, tmp_path):
        out = tmp_path / "f1.csv"
        assert main(["tw", "--beta", "1", "--s0=-6:4:0.5", "--out", str(out)]) == 0
        _, rows = _read_csv(out)
        vals = [float(v) for _, v in rows]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_turning_point_quantile(self, tmp_path):
        out = tmp_path / "q83.csv"
        assert main(["tw", "--beta", "1", "--alpha", "0.83", "--out", str(out)]) == 0
        _, rows = _read_csv(out)
        assert abs(float(rows[0][1])) <= 0.15

    def test_bracket_violation_exit_code(self, tmp_path):
        out = tmp_path / "bad.csv"
        assert main(["tw", "--beta", "2", "--s0=-20", "--out", str(out)]) == 2

    def test_reps_cap_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--table", "3", "--reps", str(2 * 10**8)])
        assert exc.value.code == 2


class TestTableCommand:
    def test_table2_reproduces_published_cell(self, tmp_path):
        out = tmp_path / "table2.csv"
        assert main(["table", "--table", "2", "--out", str(out)]) == 0
        header, rows = _read_csv(out)
        assert header[0] == "N" and header[1] == "mu_N"
        row50 = next(r for r in rows if r[0] == "50")
        col = header.index("0.3")
        assert float(row50[col]) == pytest.approx(0.306, abs=2e-3)
        # every published row agrees with the paper at 2e-3
        for r in rows:
            cells = TABLE2[int(r[0])][1]
            for got, want in zip(r[2:], cells):
                assert float(got) == pytest.approx(want, abs=2e-3)

    def test_rerun_is_byte_identical(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        assert main(["table", "--table", "2", "--nodes", "64", "--out", str(a)]) == 0
        assert main(["table", "--table", "2", "--nodes", "64", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_table4_monte_carlo_path(self, tmp_path):
        out = tmp_path / "table4.csv"
        assert main(["table", "--table", "4", "--reps", "20000", "--seed", "3", "--out", str(out)]) == 0
        header, rows = _read_csv(out)
        assert header[0] == "N_plus_1"
        assert [r[0] for r in rows] == ["2", "3", "4", "5", "10", "25", "50", "75", "100", "200", "500"]
        vals = np.array([[float(v) for v in r[1:]] for r in rows])
        assert np.all((vals >= 0.0) & (vals <= 1.0))

    def test_table1_published_cell(self, tmp_path):
        out = tmp_path / "table1.csv"
        assert main(["table", "--table", "1", "--out", str(out)]) == 0
        header, rows = _read_csv(out)
        row100 = next(r for r in rows if r[0] == "100")
        assert float(row100[header.index("0.95")]) == pytest.approx(0.951, abs=2e-3)

    def test_unconverged_determinant_is_accuracy_failure(self, tmp_path):
        out = tmp_path / "bad.csv"
        assert main(["table", "--table", "1", "--nodes", "16", "--out", str(out)]) == 3

    def test_manifest_written_and_references_output(self, tmp_path):
        out = tmp_path / "t2.csv"
        main(["table", "--table", "2", "--nodes", "64", "--out", str(out)])
        manifest = json.loads((tmp_path / "t2.csv.manifest.json").read_text())
        assert manifest["outputs"] == [str(out)]
        assert manifest["command"] == "table"
        assert "nodes" in manifest and manifest["nodes"] == 64


class TestRatesCommand:
    def test_empty_n_list_gives_header_only(self, tmp_path):
        out = tmp_path / "rates.csv"
        assert main(["rates", "--beta", "2", "--out", str(out)]) == 0
        header, rows = _read_csv(out)
        assert header == ["kind", "N", "s", "raw_error", "scaled_error", "scaled_error_third"]
        assert rows == []

    def test_gue_rate_report(self, tmp_path):
        out = tmp_path / "rates.csv"
        assert main(["rates", "--beta", "2", "--N", "10,40", "--s0=0,1", "--out", str(out)]) == 0
        header, rows = _read_csv(out)
        cdf_rows = [r for r in rows if r[0] == "cdf"]
        assert len(cdf_rows) == 4
        for r in cdf_rows:
            n, s, raw, scaled = int(r[1]), float(r[2]), float(r[3]), float(r[4])
            assert scaled == pytest.approx(n ** (2.0 / 3.0) * math.exp(s) * raw, rel=1e-12)
        kinds = {r[0] for r in rows}
        assert {"lg_wave", "lg_deriv"} <= kinds
        assert (tmp_path / "rates.png").exists()

    def test_goe_parity_usage_error(self, tmp_path):
        out = tmp_path / "rates.csv"
        assert main(["rates", "--beta", "1", "--N", "10", "--s0=0", "--out", str(out)]) == 2


class TestFigureCommand:
    def test_outputs_and_figure_quality(self, tmp_path):
        stem = tmp_path / "fig"
        assert main(["figure1", "--reps", "100000", "--seed", "21", "--bins", "40", "--out", str(stem)]) == 0
        density = tmp_path / "fig_density.csv"
        pplot = tmp_path / "fig_pplot.csv"
        png = tmp_path / "fig.png"
        assert density.exists() and pplot.exists() and png.exists()

        header, rows = _read_csv(density)
        assert header == ["kind", "s", "value"]
        f1 = np.array([[float(r[1]), float(r[2])] for r in rows if r[0] == "f1"])
        assert simpson(f1[:, 1], x=f1[:, 0]) == pytest.approx(1.0, abs=1e-3)
        markers = [float(r[1]) for r in rows if r[0] == "quantile_marker"]
        assert len(markers) == 3
        assert markers[0] == pytest.approx(tw_quantile(1, 0.01), abs=1e-9)

        _, prows = _read_csv(pplot)
        pairs = np.array([[float(a), float(b)] for a, b in prows])
        assert len(pairs) <= 10000
        # least-squares slope; band frozen from the first tuned-centering run
        a = np.vstack([pairs[:, 0], np.ones(len(pairs))]).T
        slope = np.linalg.lstsq(a, pairs[:, 1], rcond=None)[0][0]
        assert 0.95 <= slope <= 1.15
