"""End-to-end CLI flows on a tiny corpus: generate, train, score, report."""
from __future__ import annotations

import json

import pytest

from aiwash.checkpoint import load_model
from aiwash.cli import main
from aiwash.ingest import read_corpus
from aiwash.service import read_reports

GEN = ["generate", "--firms", "6", "--quarters", "2", "--seed", "3"]


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    """Corpus plus a quickly trained checkpoint shared by the flow tests."""
    root = tmp_path_factory.mktemp("cli")
    corpus = root / "corpus.jsonl"
    assert main(GEN + ["--out", str(corpus)]) == 0
    model = root / "model.json"
    rc = main(
        [
            "train",
            "--corpus",
            str(corpus),
            "--out",
            str(model),
            "--dim",
            "16",
            "--epochs",
            "2",
            "--batch-size",
            "8",
        ]
    )
    assert rc == 0
    return root


class TestGenerate:
    def test_writes_corpus_and_manifest(self, workdir, capsys):
        corpus = workdir / "corpus.jsonl"
        manifest = json.loads((workdir / "corpus.jsonl.manifest.json").read_text())
        bundles = list(read_corpus(corpus))
        assert len(bundles) == 12
        assert manifest["n_bundles"] == 12
        assert manifest["n_firms"] == 6
        assert manifest["seed"] == 3

    def test_generation_is_reproducible(self, tmp_path, workdir):
        again = tmp_path / "again.jsonl"
        assert main(GEN + ["--out", str(again)]) == 0
        assert again.read_bytes() == (workdir / "corpus.jsonl").read_bytes()

    def test_explicit_manifest_path(self, tmp_path):
        out = tmp_path / "c.jsonl"
        manifest = tmp_path / "m.json"
        args = GEN + ["--out", str(out), "--manifest", str(manifest)]
        assert main(args) == 0
        assert json.loads(manifest.read_text())["n_firms"] == 6


class TestIngest:
    def test_valid_corpus_passes(self, workdir, capsys):
        rc = main(["ingest", "--in", str(workdir / "corpus.jsonl")])
        assert rc == 0
        assert "0 invalid" in capsys.readouterr().out

    def test_invalid_bundle_fails_with_violation(self, workdir, tmp_path, capsys):
        lines = (workdir / "corpus.jsonl").read_text().splitlines()
        record = json.loads(lines[0])
        record["quarter"] = "2023Z9"
        bad = tmp_path / "bad.jsonl"
        bad.write_text("\n".join([json.dumps(record)] + lines[1:]) + "\n")
        rc = main(["ingest", "--in", str(bad)])
        out = capsys.readouterr().out
        assert rc == 1
        assert "QUARTER_MALFORMED" in out
        assert "1 invalid" in out


class TestTrainAndScore:
    def test_checkpoint_loads(self, workdir):
        model = load_model(workdir / "model.json")
        assert model.config.shared_dim == 16

    def test_score_writes_predictions(self, workdir, tmp_path):
        out = tmp_path / "scores.jsonl"
        rc = main(
            [
                "score",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--model",
                str(workdir / "model.json"),
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert len(records) == 12
        assert all(50.0 <= r["awrs"] < 100.0 for r in records)
        assert all(r["ablation"] == "full" for r in records)

    def test_score_ablation_flag_propagates(self, workdir, tmp_path):
        out = tmp_path / "scores.jsonl"
        rc = main(
            [
                "score",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--model",
                str(workdir / "model.json"),
                "--ablation",
                "text-only",
                "--out",
                str(out),
            ]
        )
        assert rc == 0
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert all(r["ablation"] == "text-only" for r in records)

    def test_score_can_emit_report_records(self, workdir, tmp_path):
        out = tmp_path / "scores.jsonl"
        reports_path = tmp_path / "reports.jsonl"
        rc = main(
            [
                "score",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--model",
                str(workdir / "model.json"),
                "--out",
                str(out),
                "--reports",
                str(reports_path),
            ]
        )
        assert rc == 0
        reports = read_reports(reports_path)
        assert len(reports) == 12
        scores = {
            (r["firm_id"], r["quarter"]): r["awrs"]
            for r in map(json.loads, out.read_text().splitlines())
        }
        for report in reports:
            assert report.awrs == pytest.approx(scores[report.firm_id, report.quarter])


class TestReportCommand:
    def test_text_rendering(self, workdir, capsys):
        bundle = next(iter(read_corpus(workdir / "corpus.jsonl")))
        rc = main(
            [
                "report",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--model",
                str(workdir / "model.json"),
                "--firm",
                bundle.firm_id,
                "--quarter",
                bundle.quarter,
            ]
        )
        out = capsys.readouterr().out
        assert rc == 0
        assert bundle.firm_id in out
        assert "score" in out
        assert "signals:" in out

    def test_json_rendering(self, workdir, capsys):
        bundle = next(iter(read_corpus(workdir / "corpus.jsonl")))
        rc = main(
            [
                "report",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--model",
                str(workdir / "model.json"),
                "--firm",
                bundle.firm_id,
                "--quarter",
                bundle.quarter,
                "--json",
            ]
        )
        record = json.loads(capsys.readouterr().out)
        assert rc == 0
        assert record["firm_id"] == bundle.firm_id

    def test_unknown_firm_is_domain_error(self, workdir, capsys):
        rc = main(
            [
                "report",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--model",
                str(workdir / "model.json"),
                "--firm",
                "ghost",
                "--quarter",
                "2023Q1",
            ]
        )
        assert rc == 1
        assert "NOT_FOUND" in capsys.readouterr().err


class TestOtherCommands:
    def test_prelabel_payload(self, workdir, tmp_path):
        out = tmp_path / "prelabel.json"
        rc = main(
            ["prelabel", "--corpus", str(workdir / "corpus.jsonl"), "--out", str(out)]
        )
        assert rc == 0
        payload = json.loads(out.read_text())
        assert set(payload) == {"flagged", "cells", "skipped_cells"}
        assert isinstance(payload["flagged"], list)

    def test_perturb_adds_decoys(self, workdir, tmp_path):
        out = tmp_path / "decoyed.jsonl"
        rc = main(
            [
                "perturb",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--out",
                str(out),
                "--kind",
                "decoy_diagrams",
                "--magnitude",
                "2",
            ]
        )
        assert rc == 0
        originals = list(read_corpus(workdir / "corpus.jsonl"))
        perturbed = list(read_corpus(out))
        assert len(perturbed) == len(originals)
        added = [
            e
            for b in perturbed
            for e in b.evidence_items
            if "decoy" in e.evidence_id
        ]
        assert added
        assert all(e.modality == "image" for e in added)

    def test_perturb_rejects_unknown_kind(self, workdir, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(
                [
                    "perturb",
                    "--corpus",
                    str(workdir / "corpus.jsonl"),
                    "--out",
                    str(tmp_path / "x.jsonl"),
                    "--kind",
                    "confetti",
                ]
            )
        assert excinfo.value.code == 2

    def test_gradcheck_passes_on_fresh_model(self, workdir, capsys):
        rc = main(
            [
                "gradcheck",
                "--corpus",
                str(workdir / "corpus.jsonl"),
                "--dim",
                "16",
                "--sample",
                "40",
                "--bundles",
                "2",
            ]
        )
        assert rc == 0
        assert "max relative error" in capsys.readouterr().out

    def test_serve_without_sources_is_config_error(self, capsys):
        rc = main(["serve"])
        assert rc == 1
        assert "CONFIG_ERROR" in capsys.readouterr().err


class TestConfigMerge:
    def test_config_file_overrides_builtin_defaults(self, tmp_path):
        config = tmp_path / "conf.json"
        config.write_text(json.dumps({"generate": {"firms": 4, "quarters": 1, "seed": 9}}))
        out = tmp_path / "c.jsonl"
        rc = main(["--config", str(config), "generate", "--out", str(out)])
        assert rc == 0
        manifest = json.loads((tmp_path / "c.jsonl.manifest.json").read_text())
        assert manifest["n_firms"] == 4
        assert manifest["seed"] == 9

    def test_explicit_flag_beats_config_file(self, tmp_path):
        config = tmp_path / "conf.json"
        config.write_text(json.dumps({"generate": {"firms": 4, "quarters": 1}}))
        out = tmp_path / "c.jsonl"
        rc = main(
            ["--config", str(config), "generate", "--out", str(out), "--firms", "5"]
        )
        assert rc == 0
        manifest = json.loads((tmp_path / "c.jsonl.manifest.json").read_text())
        assert manifest["n_firms"] == 5
        assert manifest["n_quarters"] == 1

    def test_malformed_config_section_is_rejected(self, tmp_path):
        config = tmp_path / "conf.json"
        config.write_text(json.dumps({"generate": [1, 2]}))
        rc = main(
            ["--config", str(config), "generate", "--out", str(tmp_path / "c.jsonl")]
        )
        assert rc == 1

    def test_missing_corpus_is_reported_not_raised(self, tmp_path, capsys):
        rc = main(["ingest", "--in", str(tmp_path / "absent.jsonl")])
        assert rc == 1
        assert "error" in capsys.readouterr().err
