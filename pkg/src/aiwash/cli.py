"""Command-line interface.

Subcommands cover the whole desk workflow: generate a synthetic corpus,
validate and ingest disclosures, train and check a model, score bundles,
run the rule-based prelabeler, apply perturbations, render review reports,
and serve the review API. A JSON config file can supply per-command
defaults; explicit flags always win.

Exit codes: 0 success, 1 domain failure (validation, training, scoring),
2 usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import validate_bundle
from .errors import AiwashError
from .fusion import ABLATION_MODES, ModelConfig, init_model
from .ingest import read_corpus, record_to_bundle, write_corpus
from .checkpoint import load_model, save_model
from .pipeline import predict
from .prelabel import panel_from_corpus, stage1_prelabel
from .report import build_report, render_text, report_from_prediction
from .synth import PERTURBATION_KINDS, SyntheticConfig, generate_corpus, perturb_bundle
from .train import TrainConfig, fit, gradient_check, split_by_firm

_DEFAULTS: dict[str, dict] = {
    "generate": {"firms": 60, "quarters": 4, "rate": 0.124, "seed": 7, "base_quarter": "2023Q1"},
    "train": {
        "dim": 64,
        "seed": 0,
        "epochs": 40,
        "batch_size": 64,
        "learning_rate": 1e-3,
        "dev_fraction": 0.2,
        "ablation": "full",
        "patience": 8,
    },
    "score": {"ablation": "full"},
    "perturb": {"magnitude": 3},
    "gradcheck": {"sample": 500, "epsilon": 1e-5, "bundles": 4, "tolerance": 1e-4, "seed": 0, "dim": 64},
    "serve": {"host": "127.0.0.1", "port": 8000},
}


def _effective(args: argparse.Namespace, command: str) -> dict:
    """builtin defaults < config file < explicit flags."""
    merged = dict(_DEFAULTS.get(command, {}))
    if args.config:
        file_conf = json.loads(Path(args.config).read_text(encoding="utf-8"))
        section = file_conf.get(command, {})
        if not isinstance(section, dict):
            raise AiwashError(f"config section {command!r} must be an object", code="CONFIG_ERROR")
        merged.update(section)
    for key, value in vars(args).items():
        if key in ("command", "config"):
            continue
        if value is not None:
            merged[key] = value
    return merged


def _load_bundles(path: str) -> list:
    return list(read_corpus(path))


def _sectors(bundles) -> list[str]:
    return sorted({b.sector for b in bundles})


def cmd_generate(opt: dict) -> int:
    config = SyntheticConfig(
        n_firms=int(opt["firms"]),
        n_quarters=int(opt["quarters"]),
        washing_rate=float(opt["rate"]),
        seed=int(opt["seed"]),
        base_quarter=opt["base_quarter"],
    )
    bundles, manifest = generate_corpus(config)
    out = opt["out"]
    n = write_corpus(bundles, out)
    manifest_path = opt.get("manifest") or f"{out}.manifest.json"
    Path(manifest_path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {n} bundles to {out} ({manifest['washing_firms']} washing firms)")
    return 0


def cmd_ingest(opt: dict) -> int:
    # Parse leniently here so one bad line does not hide the rest of the file;
    # read_corpus itself refuses invalid bundles.
    n = 0
    bad = 0
    with open(opt["in_path"], "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            n += 1
            try:
                bundle = record_to_bundle(json.loads(line))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError, AiwashError) as exc:
                print(f"line {line_no}: unparseable record: {exc}")
                bad += 1
                continue
            violations = validate_bundle(bundle)
            for v in violations:
                print(f"{bundle.firm_id}/{bundle.quarter}: {v.code} at {v.path}: {v.message}")
            bad += bool(violations)
    print(f"checked {n} bundles, {bad} invalid")
    return 1 if bad else 0


def cmd_train(opt: dict) -> int:
    bundles = _load_bundles(opt["corpus"])
    dataset = split_by_firm(bundles, dev_fraction=float(opt["dev_fraction"]), seed=int(opt["seed"]))
    model = init_model(
        ModelConfig(shared_dim=int(opt["dim"])),
        sectors=_sectors(bundles),
        seed=int(opt["seed"]),
    )
    result = fit(
        dataset,
        model,
        TrainConfig(
            epochs=int(opt["epochs"]),
            batch_size=int(opt["batch_size"]),
            learning_rate=float(opt["learning_rate"]),
            seed=int(opt["seed"]),
            ablation=opt["ablation"],
            patience=int(opt["patience"]),
        ),
    )
    save_model(result.model, opt["out"])
    last = result.history[-1] if result.history else {}
    print(
        f"trained {len(result.history)} epochs (best {result.best_epoch}), "
        f"dev loss {last.get('dev_loss', float('nan')):.5f}, "
        f"threshold {result.threshold:.3f} -> {opt['out']}"
    )
    return 0


def cmd_score(opt: dict) -> int:
    model = load_model(opt["model"])
    ablation = opt["ablation"]
    if ablation not in ABLATION_MODES:
        raise AiwashError(f"unknown ablation mode {ablation!r}", code="CONFIG_ERROR")
    out_fh = open(opt["out"], "w", encoding="utf-8") if opt.get("out") else sys.stdout
    reports_fh = open(opt["reports"], "w", encoding="utf-8") if opt.get("reports") else None
    try:
        for bundle in read_corpus(opt["corpus"]):
            prediction = predict(bundle, model, ablation=ablation)
            out_fh.write(json.dumps(prediction.to_record(), sort_keys=True) + "\n")
            if reports_fh is not None:
                report = report_from_prediction(prediction, bundle, model)
                reports_fh.write(json.dumps(report.to_record(), sort_keys=True) + "\n")
    finally:
        if out_fh is not sys.stdout:
            out_fh.close()
        if reports_fh is not None:
            reports_fh.close()
    return 0


def cmd_prelabel(opt: dict) -> int:
    bundles = _load_bundles(opt["corpus"])
    panel = panel_from_corpus(bundles)
    result = stage1_prelabel(panel)
    payload = {
        "flagged": sorted(result.flagged_firms()),
        "cells": [
            {
                "industry": c.industry,
                "year": c.year,
                "n_obs": c.n_obs,
                "freq_p75": c.freq_p75,
                "invest_p25": c.invest_p25,
            }
            for c in result.cutoffs
        ],
        "skipped_cells": [
            {"industry": s[0], "year": s[1], "n_obs": s[2]} for s in result.skipped_cells
        ],
    }
    text = json.dumps(payload, indent=2, sort_keys=True)
    if opt.get("out"):
        Path(opt["out"]).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0


def cmd_perturb(opt: dict) -> int:
    kind = opt["kind"]
    if kind not in PERTURBATION_KINDS:
        raise AiwashError(f"unknown perturbation kind {kind!r}", code="CONFIG_ERROR")
    bundles = [
        perturb_bundle(b, kind, magnitude=int(opt["magnitude"]))
        for b in read_corpus(opt["corpus"])
    ]
    n = write_corpus(bundles, opt["out"])
    print(f"wrote {n} perturbed bundles to {opt['out']}")
    return 0


def cmd_gradcheck(opt: dict) -> int:
    bundles = _load_bundles(opt["corpus"])[: int(opt["bundles"])]
    if opt.get("model"):
        model = load_model(opt["model"])
    else:
        model = init_model(
            ModelConfig(shared_dim=int(opt["dim"])),
            sectors=_sectors(bundles),
            seed=int(opt["seed"]),
        )
        from .grounding import fit_panel_stats

        model.panel_stats = fit_panel_stats(
            (b.operational for b in bundles), model.config.layout_version
        )
    result = gradient_check(
        model,
        bundles,
        epsilon=float(opt["epsilon"]),
        sample=int(opt["sample"]),
        seed=int(opt["seed"]),
    )
    tolerance = float(opt["tolerance"])
    print(
        f"checked {result.checked} coordinates, max relative error "
        f"{result.max_relative_error:.3e} (worst {result.worst_parameter})"
    )
    if result.max_relative_error >= tolerance:
        print(f"FAIL: exceeds tolerance {tolerance:.1e}", file=sys.stderr)
        return 1
    return 0


def cmd_report(opt: dict) -> int:
    model = load_model(opt["model"])
    for bundle in read_corpus(opt["corpus"]):
        if bundle.firm_id == opt["firm"] and bundle.quarter == opt["quarter"]:
            report = build_report(bundle, model)
            if opt.get("as_json"):
                print(json.dumps(report.to_record(), indent=2, sort_keys=True))
            else:
                print(render_text(report))
            return 0
    raise AiwashError(
        f"no bundle {opt['firm']}/{opt['quarter']} in {opt['corpus']}", code="NOT_FOUND"
    )


def cmd_serve(opt: dict) -> int:
    from .service import create_app, read_reports, serve, write_reports

    if opt.get("reports"):
        reports = read_reports(opt["reports"])
    elif opt.get("corpus") and opt.get("model"):
        model = load_model(opt["model"])
        reports = [build_report(b, model) for b in read_corpus(opt["corpus"])]
        if opt.get("cache_reports"):
            write_reports(reports, opt["cache_reports"])
    else:
        raise AiwashError(
            "serve needs --reports, or --corpus with --model", code="CONFIG_ERROR"
        )
    app = create_app(
        reports,
        verdict_path=opt.get("verdicts") or "verdicts.jsonl",
        threshold=float(opt["threshold"]) if opt.get("threshold") is not None else None,
        token=opt.get("token"),
        console_dir=opt.get("console"),
    )
    print(f"serving {len(reports)} cases on {opt['host']}:{opt['port']}")
    serve(app, host=opt["host"], port=int(opt["port"]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aiwash", description=__doc__)
    parser.add_argument("--config", help="JSON file with per-command default options")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a labeled synthetic corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--firms", type=int)
    p.add_argument("--quarters", type=int)
    p.add_argument("--rate", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--base-quarter", dest="base_quarter")
    p.add_argument("--manifest")

    p = sub.add_parser("ingest", help="validate a corpus file")
    p.add_argument("--in", dest="in_path", required=True)

    p = sub.add_parser("train", help="train a model on a labeled corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--epochs", type=int)
    p.add_argument("--batch-size", dest="batch_size", type=int)
    p.add_argument("--learning-rate", dest="learning_rate", type=float)
    p.add_argument("--dev-fraction", dest="dev_fraction", type=float)
    p.add_argument("--patience", type=int)
    p.add_argument("--ablation", choices=ABLATION_MODES)

    p = sub.add_parser("score", help="score bundles with a trained model")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--ablation", choices=ABLATION_MODES)
    p.add_argument("--out")
    p.add_argument("--reports", help="also write full report records here")

    p = sub.add_parser("prelabel", help="rule-based panel prelabeling")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out")

    p = sub.add_parser("perturb", help="apply an adversarial perturbation")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--kind", required=True, choices=PERTURBATION_KINDS)
    p.add_argument("--magnitude", type=int)

    p = sub.add_parser("gradcheck", help="finite-difference gradient check")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model")
    p.add_argument("--dim", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--sample", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--bundles", type=int)
    p.add_argument("--tolerance", type=float)

    p = sub.add_parser("report", help="render one review report")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--firm", required=True)
    p.add_argument("--quarter", required=True)
    p.add_argument("--json", dest="as_json", action="store_true", default=None)

    p = sub.add_parser("serve", help="run the review API")
    p.add_argument("--reports")
    p.add_argument("--corpus")
    p.add_argument("--model")
    p.add_argument("--cache-reports", dest="cache_reports")
    p.add_argument("--verdicts")
    p.add_argument("--threshold", type=float)
    p.add_argument("--token")
    p.add_argument("--console")
    p.add_argument("--host")
    p.add_argument("--port", type=int)

    return parser


_COMMANDS = {
    "generate": cmd_generate,
    "ingest": cmd_ingest,
    "train": cmd_train,
    "score": cmd_score,
    "prelabel": cmd_prelabel,
    "perturb": cmd_perturb,
    "gradcheck": cmd_gradcheck,
    "report": cmd_report,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        opt = _effective(args, args.command)
        return _COMMANDS[args.command](opt)
    except AiwashError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
