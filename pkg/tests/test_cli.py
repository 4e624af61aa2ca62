import csv
import json

import pytest

from affectix import resources
from affectix.cli import main

from conftest import write_corpus

HIGH = str(resources.fixture_manifest_path("high"))
NEUTRAL = str(resources.fixture_manifest_path("neutral"))
ALL = str(resources.fixture_manifest_path("all"))


def run_cli(*argv):
    return main([str(a) for a in argv])


class TestScore:
    def test_fixture_corpus(self, tmp_path, capsys):
        out = tmp_path / "out"
        assert run_cli("score", "--out", out, HIGH) == 0
        assert {p.name for p in out.iterdir()} == {
            "profiles.csv",
            "profiles.json",
            "histogram.csv",
        }
        with (out / "histogram.csv").open(newline="") as fh:
            header = next(csv.reader(fh))
        assert header == ["bin_lo", "bin_hi", "high"]
        assert "scored 10 documents, skipped 0" in capsys.readouterr().out

    def test_missing_manifest_writes_nothing(self, tmp_path, capsys):
        out = tmp_path / "out"
        code = run_cli("score", "--out", out, tmp_path / "missing.csv")
        assert code == 2
        assert not out.exists()
        assert "error" in capsys.readouterr().err

    def test_unreadable_doc_is_reported_as_skipped(self, tmp_path, capsys):
        manifest = write_corpus(tmp_path / "c", {"ok": "Joy and love. Grief."})
        (tmp_path / "c" / "bad.txt").write_bytes(b"\xff\xfe broken")
        with manifest.open("a", encoding="utf-8") as fh:
            fh.write("bad,bad.txt,x\n")
        assert run_cli("score", "--out", tmp_path / "out", manifest) == 0
        assert "skipped 1" in capsys.readouterr().out

    def test_two_label_manifest_gets_two_histogram_columns(self, tmp_path):
        out = tmp_path / "out"
        assert run_cli("score", "--out", out, ALL) == 0
        with (out / "histogram.csv").open(newline="") as fh:
            header = next(csv.reader(fh))
        assert header == ["bin_lo", "bin_hi", "high", "neutral"]

    def test_no_writes_outside_output_dir(self, tmp_path, monkeypatch):
        workdir = tmp_path / "cwd"
        workdir.mkdir()
        monkeypatch.chdir(workdir)
        out = tmp_path / "only_here"
        assert run_cli("score", "--out", out, HIGH) == 0
        assert list(workdir.iterdir()) == []


class TestCompare:
    def test_identical_corpora(self, tmp_path):
        out = tmp_path / "out"
        assert run_cli("compare", "--out", out, HIGH, HIGH) == 0
        payload = json.loads((out / "compare.json").read_text())
        for block in payload["comparisons"]:
            assert block["ttest"]["t"] == 0.0
            assert block["ttest"]["p_two_sided"] == 1.0

    def test_fixture_dissociation(self, tmp_path):
        out = tmp_path / "out"
        assert run_cli("compare", "--out", out, HIGH, NEUTRAL) == 0
        payload = json.loads((out / "compare.json").read_text())
        by_measure = {b["measure"]: b for b in payload["comparisons"]}
        assert by_measure["mean_ei"]["ttest"]["p_two_sided"] < 0.01
        assert by_measure["mean_ei"]["group_a"]["mean"] > by_measure["mean_ei"][
            "group_b"
        ]["mean"]
        assert by_measure["adjective_rate"]["ttest"]["p_two_sided"] > 0.05

    def test_single_document_group(self, tmp_path, capsys):
        manifest = write_corpus(tmp_path / "single", {"only": "Joy. Grief. Love."})
        code = run_cli("compare", "--out", tmp_path / "out", manifest, HIGH)
        assert code == 2

    def test_degenerate_comparison(self, tmp_path, capsys):
        text = "The table stood by the door. The window closed."
        manifest_a = write_corpus(tmp_path / "a", {"x": text, "y": text})
        manifest_b = write_corpus(tmp_path / "b", {"x": text, "y": text})
        code = run_cli("compare", "--out", tmp_path / "out", manifest_a, manifest_b)
        assert code == 3
        assert "degenerate" in capsys.readouterr().err


class TestClassify:
    def test_fixture_corpus_table(self, tmp_path):
        out = tmp_path / "out"
        assert run_cli("classify", "--out", out, ALL) == 0
        with (out / "table1.csv").open(newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == [
            "classifier",
            "perf_mean",
            "perf_std",
            "auc_mean",
            "auc_std",
            "f1_mean",
            "f1_std",
        ]
        assert [r[0] for r in rows[1:]] == ["logreg", "lda", "gnb", "knn", "dtree"]
        report = json.loads((out / "report.json").read_text())
        assert report["seed"] == 42
        assert report["class_names"] == ["high", "neutral"]

    def test_rerun_is_byte_identical(self, tmp_path):
        out1, out2 = tmp_path / "r1", tmp_path / "r2"
        assert run_cli("classify", "--out", out1, "--seed", 9, ALL) == 0
        assert run_cli("classify", "--out", out2, "--seed", 9, ALL) == 0
        assert (out1 / "table1.csv").read_bytes() == (out2 / "table1.csv").read_bytes()
        assert (out1 / "report.json").read_bytes() == (out2 / "report.json").read_bytes()

    def test_explicit_unimplemented_classifier(self, tmp_path, capsys):
        code = run_cli("classify", "--out", tmp_path / "o", "--classifier", "svc", ALL)
        assert code == 4
        assert "svc" in capsys.readouterr().err

    def test_unknown_classifier(self, tmp_path):
        code = run_cli(
            "classify", "--out", tmp_path / "o", "--classifier", "nope", ALL
        )
        assert code == 2

    def test_too_few_members_for_k(self, tmp_path):
        code = run_cli("classify", "--out", tmp_path / "o", "--k", 11, ALL)
        assert code == 2

    def test_seed_env_var_used_when_flag_absent(self, tmp_path, monkeypatch):
        monkeypatch.setenv("AFFECTIX_SEED", "123")
        out = tmp_path / "out"
        assert run_cli("classify", "--out", out, "--classifier", "gnb", ALL) == 0
        assert json.loads((out / "report.json").read_text())["seed"] == 123

    def test_seed_flag_beats_env_var(self, tmp_path, monkeypatch):
        monkeypatch.setenv("AFFECTIX_SEED", "123")
        out = tmp_path / "out"
        assert run_cli(
            "classify", "--out", out, "--seed", 7, "--classifier", "gnb", ALL
        ) == 0
        assert json.loads((out / "report.json").read_text())["seed"] == 7

    def test_bad_env_seed(self, tmp_path, monkeypatch):
        monkeypatch.setenv("AFFECTIX_SEED", "not-a-number")
        assert run_cli("classify", "--out", tmp_path / "o", ALL) == 2


class TestLexiconInfo:
    def test_fixture_lexicon(self, capsys):
        assert run_cli("lexicon-info") == 0
        out = capsys.readouterr().out
        assert "50 entries" in out
        assert "negative tail (0.2): 10 words" in out
        assert "positive tail (0.2): 10 words" in out

    def test_out_of_range_fraction(self, capsys):
        assert run_cli("lexicon-info", "--lower-frac", "0.6") == 2

    def test_parse_failure_names_line(self, tmp_path, capsys):
        bad = tmp_path / "lex.tsv"
        bad.write_text("word\tNaN\t1\t1\n", encoding="utf-8")
        assert run_cli("lexicon-info", "--lexicon", bad) == 2
        assert "line 1" in capsys.readouterr().err


class TestReplicate:
    def test_full_chain(self, tmp_path, capsys):
        out = tmp_path / "out"
        assert run_cli("replicate", "--out", out) == 0
        assert (out / "score_high" / "profiles.csv").is_file()
        assert (out / "score_neutral" / "profiles.csv").is_file()
        assert (out / "compare" / "compare.json").is_file()
        assert (out / "classify" / "table1.csv").is_file()
        stdout = capsys.readouterr().out
        assert "classify" in stdout
