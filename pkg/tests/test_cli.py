"""CLI tests: subcommands, exit codes, determinism, atomic output."""
import os

import numpy as np
import pytest

from dynls.bench import parse_results
from dynls.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBenchSynthetic:
    def test_single_kalman_record(self, capsys, tmp_path):
        out = tmp_path / "results.csv"
        code, _, _ = run_cli(capsys, "bench-synthetic", "--T", "500", "--d", "8",
                             "--methods", "kalman", "--seed", "7",
                             "--out", str(out))
        assert code == 0
        records = parse_results(out.read_text())
        assert len(records) == 1
        assert records[0].method == "Kalman"
        assert records[0].error_ratio == pytest.approx(1.0, abs=1e-6)

    def test_missing_required_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bench-synthetic", "--d", "8"])
        assert exc.value.code == 2
        assert "usage" in capsys.readouterr().err.lower()

    def test_four_method_sweep_record_count(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        code, _, _ = run_cli(capsys, "bench-synthetic", "--T", "800", "--d", "6",
                             "--seed", "3", "--out", str(out))
        assert code == 0
        records = parse_results(out.read_text())
        # kalman x1 + (ours + rowsampling) x4 + uniform x4
        assert len(records) >= 12

    def test_deterministic_output_modulo_timing(self, capsys, tmp_path):
        outs = []
        for name in ("a.csv", "b.csv"):
            out = tmp_path / name
            code, _, _ = run_cli(capsys, "bench-synthetic", "--T", "400", "--d",
                                 "5", "--methods", "ours", "--params", "0.5",
                                 "--seed", "11", "--out", str(out))
            assert code == 0
            outs.append(out.read_text())

        def strip_time(text):
            rows = []
            for line in text.strip().splitlines()[1:]:
                parts = line.split(",")
                del parts[4]  # wall_time_s varies between runs
                rows.append(",".join(parts))
            return rows

        assert strip_time(outs[0]) == strip_time(outs[1])

    def test_stdout_when_no_out(self, capsys):
        code, out, _ = run_cli(capsys, "bench-synthetic", "--T", "300", "--d", "5",
                               "--methods", "kalman", "--seed", "0")
        assert code == 0
        assert out.startswith("dataset,method,")

    def test_adaptive_adversary_demo(self, capsys, tmp_path):
        out = tmp_path / "adaptive.csv"
        code, _, _ = run_cli(capsys, "bench-synthetic", "--T", "150", "--d", "6",
                             "--adversary", "adaptive", "--epsilon", "0.25",
                             "--seed", "2", "--out", str(out))
        assert code == 0
        records = parse_results(out.read_text())
        assert records[0].dataset == "adaptive"
        assert records[0].error_ratio <= 1.25

    def test_plot_and_plot_data(self, capsys, tmp_path):
        out = tmp_path / "r.csv"
        plot = tmp_path / "fig.png"
        pdata = tmp_path / "plot.csv"
        code, _, _ = run_cli(capsys, "bench-synthetic", "--T", "300", "--d", "5",
                             "--methods", "kalman,uniform", "--params", "0.5",
                             "--seed", "1", "--out", str(out),
                             "--plot", str(plot), "--plot-data", str(pdata))
        assert code == 0
        assert plot.stat().st_size > 1000  # a real image was rendered
        assert pdata.read_text().startswith("dataset,method,parameter,wall_time_s,rel_error")

    def test_jobs_parallel_matches_serial(self, capsys, tmp_path):
        texts = []
        for jobs, name in (("1", "s.csv"), ("2", "p.csv")):
            out = tmp_path / name
            code, _, _ = run_cli(capsys, "bench-synthetic", "--T", "400", "--d",
                                 "5", "--methods", "ours,uniform", "--params",
                                 "0.5", "--seed", "4", "--jobs", jobs,
                                 "--out", str(out))
            assert code == 0
            texts.append(out.read_text())

        def strip_time(text):
            return [",".join(p for i, p in enumerate(ln.split(",")) if i != 4)
                    for ln in text.strip().splitlines()]

        assert strip_time(texts[0]) == strip_time(texts[1])

    def test_no_partial_file_on_failure(self, capsys, tmp_path):
        out = tmp_path / "never.csv"
        # T too small for init fraction: runtime failure -> exit 1
        code, _, err = run_cli(capsys, "bench-synthetic", "--T", "5", "--d", "8",
                               "--methods", "kalman", "--out", str(out))
        assert code == 1
        assert "error:" in err
        assert not out.exists()
        assert not [p for p in os.listdir(tmp_path) if p.startswith(".dynls-")]


class TestBenchCsv:
    def make_csv(self, tmp_path, rows=120, d=3, seed=0, header=False):
        rng = np.random.default_rng(seed)
        a = rng.normal(size=(rows, d))
        b = a @ np.arange(1.0, d + 1) + 0.01 * rng.normal(size=rows)
        lines = []
        if header:
            lines.append(",".join(f"x{i}" for i in range(d)) + ",y")
        for i in range(rows):
            lines.append(",".join(f"{v:.8g}" for v in a[i]) + f",{b[i]:.8g}")
        path = tmp_path / "data.csv"
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_kalman_on_fixture(self, capsys, tmp_path):
        path = self.make_csv(tmp_path)
        code, out, _ = run_cli(capsys, "bench-csv", "--csv", str(path),
                               "--methods", "kalman", "--seed", "0")
        assert code == 0
        rec = parse_results(out)[0]
        assert rec.error_ratio == pytest.approx(1.0, abs=1e-6)
        assert rec.dataset == "data"

    def test_malformed_cell_exit_1_with_location(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,2,3\n4,bogus,6\n")
        code, _, err = run_cli(capsys, "bench-csv", "--csv", str(path),
                               "--methods", "kalman")
        assert code == 1
        assert "row 2" in err and "column 2" in err

    def test_label_column_by_name_matches_positional(self, capsys, tmp_path):
        path = self.make_csv(tmp_path, header=True)
        results = []
        for label in ("last", "y"):
            code, out, _ = run_cli(capsys, "bench-csv", "--csv", str(path),
                                   "--methods", "kalman", "--label-column",
                                   label, "--seed", "0")
            assert code == 0
            results.append(parse_results(out)[0].error_ratio)
        assert results[0] == results[1]


class TestVerifyReductions:
    def test_boolean_omv_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify-reductions", "--construction",
                               "boolean-omv", "--d", "32")
        assert code == 0
        assert "PASS" in out

    def test_amplify_two_dimensions(self, capsys):
        code, out, _ = run_cli(capsys, "verify-reductions", "--construction",
                               "amplify", "--d", "64,128")
        assert code == 0
        assert out.count("PASS") == 2

    def test_unknown_construction_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify-reductions", "--construction", "bogus"])
        assert exc.value.code == 2

    def test_all_constructions_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify-reductions", "--construction", "all")
        assert code == 0
        assert "FAIL" not in out
