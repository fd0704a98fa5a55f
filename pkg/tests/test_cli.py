from __future__ import annotations

import json

import pytest

from degseq.cli import run
from degseq.graph import graph_from_edge_text
from degseq.graphicality import check_graphical
from degseq.sequence import parse_sequence


@pytest.fixture
def d1_file(tmp_path):
    path = tmp_path / "d1.txt"
    path.write_text("3 3 2 2 2\n")
    return path


@pytest.fixture
def d2_file(tmp_path):
    path = tmp_path / "d2.txt"
    path.write_text("4 3 2 1\n")
    return path


class TestCheck:
    def test_d1_graphical_exit_0(self, d1_file, capsys):
        assert run(["check", str(d1_file)]) == 0
        assert "graphical" in capsys.readouterr().out

    def test_d2_not_graphical_exit_1(self, d2_file, capsys):
        assert run(["check", str(d2_file)]) == 1
        out = capsys.readouterr().out
        assert "not graphical" in out

    def test_verbose(self, d2_file, capsys):
        run(["check", str(d2_file), "--verbose"])
        out = capsys.readouterr().out
        assert "durfee 3" in out
        assert "failing_k 1" in out

    def test_parity_message(self, tmp_path, capsys):
        p = tmp_path / "odd.txt"
        p.write_text("1 0 0\n")
        assert run(["check", str(p)]) == 1
        assert "odd degree sum" in capsys.readouterr().out

    def test_input_error_exit_2(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("3 x 1\n")
        assert run(["check", str(p)]) == 2

    def test_missing_file_exit_2(self, tmp_path):
        assert run(["check", str(tmp_path / "nope.txt")]) == 2


class TestGenerate:
    def test_generate_and_metrics_roundtrip(self, d1_file, tmp_path, capsys):
        out = tmp_path / "g.txt"
        record = tmp_path / "record.json"
        assert run([
            "generate", str(d1_file), "--seed", "7",
            "--out", str(out), "--record", str(record),
        ]) == 0
        g = graph_from_edge_text(out.read_text())
        assert sorted(g.degrees().tolist(), reverse=True) == [3, 3, 2, 2, 2]
        payload = json.loads(record.read_text())
        assert payload["seed"] == 7
        assert payload["n"] == 5 and payload["m"] == 6
        assert payload["log_prob"] <= 0.0
        assert "shortcut_batches" in payload

    def test_generate_not_graphical_exit_1(self, d2_file, tmp_path):
        assert run(["generate", str(d2_file), "--seed", "0"]) == 1

    def test_edge_lines_normalized(self, d1_file, tmp_path):
        out = tmp_path / "g.txt"
        run(["generate", str(d1_file), "--seed", "3", "--out", str(out)])
        for line in out.read_text().splitlines():
            u, v = map(int, line.split())
            assert u < v

    def test_seed_reproducible(self, d1_file, tmp_path, capsys):
        outs = []
        for _ in range(2):
            out = tmp_path / "g.txt"
            run(["generate", str(d1_file), "--seed", "9", "--out", str(out)])
            outs.append(out.read_text())
        assert outs[0] == outs[1]


class TestRoundTrip:
    def test_generate_fromgraph_check(self, d1_file, tmp_path, capsys):
        edge_file = tmp_path / "g.txt"
        seq_file = tmp_path / "seq.txt"
        assert run(["generate", str(d1_file), "--seed", "4", "--out", str(edge_file)]) == 0
        assert run(["synth", "from-graph", str(edge_file), "--out", str(seq_file)]) == 0
        assert seq_file.read_text() == "3 3 2 2 2\n"
        assert run(["check", str(seq_file)]) == 0


class TestSwap:
    def test_swap_cli(self, d1_file, tmp_path, capsys):
        edge_file = tmp_path / "g.txt"
        run(["generate", str(d1_file), "--seed", "1", "--out", str(edge_file)])
        swapped = tmp_path / "s.txt"
        assert run(["swap", str(edge_file), "--seed", "5", "--out", str(swapped)]) == 0
        err = capsys.readouterr().err
        assert "accepted" in err and "attempted" in err
        g0 = graph_from_edge_text(edge_file.read_text())
        g1 = graph_from_edge_text(swapped.read_text())
        assert sorted(g0.degrees().tolist()) == sorted(g1.degrees().tolist())


class TestMetricsCli:
    def test_report_and_histogram(self, d1_file, tmp_path, capsys):
        edge_file = tmp_path / "g.txt"
        run(["generate", str(d1_file), "--seed", "2", "--out", str(edge_file)])
        hist = tmp_path / "hist.csv"
        assert run(["metrics", str(edge_file), "--hist", str(hist)]) == 0
        out = capsys.readouterr().out
        for key in ("triangles", "components", "avg_clustering", "diameter"):
            assert key in out
        lines = hist.read_text().splitlines()
        assert len(lines) == 100
        first_bin = lines[0].split(",")
        assert first_bin[0] == "0.00"
        assert sum(int(l.split(",")[1]) for l in lines) == 5

    def test_skip_cliques(self, d1_file, tmp_path, capsys):
        edge_file = tmp_path / "g.txt"
        run(["generate", str(d1_file), "--seed", "2", "--out", str(edge_file)])
        assert run(["metrics", str(edge_file), "--skip", "cliques"]) == 0
        assert "maximal_cliques    na" in capsys.readouterr().out


class TestSynth:
    def test_regular(self, tmp_path, capsys):
        out = tmp_path / "r.txt"
        assert run(["synth", "regular", "--n", "4", "--degree", "2", "--out", str(out)]) == 0
        assert out.read_text() == "2 2 2 2\n"

    def test_powerlaw_deterministic_and_graphical(self, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        for path in (a, b):
            assert run([
                "synth", "powerlaw", "--n", "1000", "--gamma", "2.5",
                "--seed", "42", "--out", str(path),
            ]) == 0
        assert a.read_text() == b.read_text()
        seq = parse_sequence(a.read_text())
        assert check_graphical(seq).graphical
        assert seq.degree_sum % 2 == 0

    def test_regular_odd_product_parity_fixed(self, tmp_path, capsys):
        out = tmp_path / "r.txt"
        assert run(["synth", "regular", "--n", "5", "--degree", "3", "--out", str(out)]) == 0
        seq = parse_sequence(out.read_text())
        assert seq.degree_sum % 2 == 0
        assert check_graphical(seq).graphical


class TestBenchCli:
    def test_bench_eg_csv(self, tmp_path, capsys):
        seq_file = tmp_path / "s.txt"
        run(["synth", "powerlaw", "--n", "5000", "--seed", "1", "--out", str(seq_file)])
        out = tmp_path / "bench.csv"
        assert run([
            "bench-eg", str(seq_file), "--workers", "1,2", "--reps", "5",
            "--out", str(out), "--header",
        ]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "workers,median_seconds,speedup"
        first = lines[1].split(",")
        assert first[0] == "1" and float(first[2]) == 1.0
        assert lines[2].split(",")[0] == "2"

    def test_bench_gen_equivalence_and_rows(self, tmp_path):
        seq_file = tmp_path / "s.txt"
        seq_file.write_text("3 3 2 2 2 2 2 2\n")
        out = tmp_path / "bench.csv"
        assert run([
            "bench-gen", str(seq_file), "--workers", "1,2,4", "--reps", "5",
            "--seed", "3", "--out", str(out),
        ]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 3

    def test_bad_worker_list(self, tmp_path):
        seq_file = tmp_path / "s.txt"
        seq_file.write_text("2 2 2\n")
        assert run(["bench-eg", str(seq_file), "--workers", "2,4"]) == 2
        assert run(["bench-eg", str(seq_file), "--workers", "1,nope"]) == 2

    def test_too_few_reps(self, tmp_path):
        seq_file = tmp_path / "s.txt"
        seq_file.write_text("2 2 2\n")
        assert run(["bench-eg", str(seq_file), "--reps", "2"]) == 2

    def test_equivalence_breach_exit_3(self, tmp_path, monkeypatch):
        from degseq import cli
        from degseq.errors import EquivalenceBreach

        def boom(*args, **kwargs):
            raise EquivalenceBreach("synthetic breach")

        monkeypatch.setattr(cli, "bench", boom)
        seq_file = tmp_path / "s.txt"
        seq_file.write_text("2 2 2\n")
        assert run(["bench-eg", str(seq_file)]) == 3


class TestWorkersDefault:
    def test_env_var_default(self, monkeypatch):
        from degseq.runtime import default_workers

        monkeypatch.setenv("DEGSEQ_WORKERS", "3")
        assert default_workers() == 3
        monkeypatch.delenv("DEGSEQ_WORKERS")
        assert default_workers() >= 1

    def test_env_var_invalid(self, monkeypatch):
        from degseq.runtime import default_workers

        monkeypatch.setenv("DEGSEQ_WORKERS", "0")
        with pytest.raises(ValueError):
            default_workers()


class TestParseBytes:
    def test_bytes_accepted(self):
        seq = parse_sequence(b"1 1\n")
        assert seq.degrees == (1, 1)


class TestRunConfig:
    def test_seed_must_fit_64_bits(self, d1_file, tmp_path):
        big = str(2**64)
        assert run(["generate", str(d1_file), "--seed", big]) == 2

    def test_workers_must_be_positive(self, d1_file):
        assert run(["check", str(d1_file), "--workers", "0"]) == 2
