"""Regenerate the review-console fixtures.

Produces two files from one small synthetic corpus:

  test/fixtures/reports.jsonl  -- two report records served by the live
                                  integration test via `aiwash serve --reports`
  src/fixture_data.ts          -- the same records embedded for the offline
                                  mock service and the renderer unit tests

The corpus and training are real; afterwards the two chosen reports are
adjusted to fixed display values (scores 87.3 and 12.1, one decisive
contradiction pair at 0.891) so tests can assert on stable numbers. The
Shapley attribution is rescaled by the same factor as the score shift, which
keeps the efficiency identity (contributions sum to score minus baseline)
intact. Run from the frontend/ directory:

    python3 scripts/make_fixture.py
"""

from __future__ import annotations

import json
from dataclasses import replace
from pathlib import Path

from aiwash.fusion import ModelConfig, init_model
from aiwash.report import build_report
from aiwash.service import write_reports
from aiwash.synth import SyntheticConfig, generate_corpus
from aiwash.train import Dataset, TrainConfig, fit

HERE = Path(__file__).resolve().parent.parent
HIGH_SCORE = 87.3
LOW_SCORE = 12.1
CONTRADICT_P = 0.891


def rescaled(report, target: float):
    """Move a report to a fixed score, rescaling its attribution to match."""
    factor = (target - report.attribution.baseline) / (
        report.awrs - report.attribution.baseline
    )
    shapley = tuple(v * factor for v in report.attribution.shapley)
    interactions = tuple(
        tuple(v * factor for v in row) for row in report.attribution.interactions
    )
    attribution = replace(
        report.attribution, awrs=target, shapley=shapley, interactions=interactions
    )
    return replace(
        report,
        awrs=target,
        p_wash=target / 100.0,
        threshold=50.0,
        flagged=target >= 50.0,
        attribution=attribution,
    )


def doctor_pair(report):
    """Force the strongest contradiction pair to the fixed display value."""
    best = None
    for ci, claim in enumerate(report.claims):
        for pi, pair in enumerate(claim.pairs):
            if best is None or pair.p_contradict > best[2].p_contradict:
                best = (ci, pi, pair)
    if best is None:
        raise SystemExit("chosen report has no claim-evidence pairs; reseed")
    ci, pi, pair = best
    rest = 1.0 - CONTRADICT_P
    pair = replace(
        pair,
        p_entail=round(rest * 0.4, 4),
        p_neutral=round(rest * 0.6, 4),
        p_contradict=CONTRADICT_P,
        label="contradict",
        decisive=True,
    )
    claims = list(report.claims)
    pairs = list(claims[ci].pairs)
    pairs[pi] = pair
    claims[ci] = replace(claims[ci], pairs=tuple(pairs))
    return replace(report, claims=tuple(claims))


def main() -> None:
    config = SyntheticConfig(n_firms=8, n_quarters=1, washing_rate=0.5, seed=17)
    bundles, _ = generate_corpus(config)
    washing = {b.firm_id for b in bundles if b.labels is not None and b.labels.y == 1}

    model = init_model(
        ModelConfig(shared_dim=32), sectors=sorted({b.sector for b in bundles}), seed=0
    )
    dataset = Dataset(train=bundles, dev=bundles)
    result = fit(dataset, model, TrainConfig(epochs=6, batch_size=8, seed=0))

    reports = [build_report(b, result.model) for b in bundles]

    def has_pairs(r):
        return any(c.pairs for c in r.claims)

    high = max(
        (r for r in reports if r.firm_id in washing and has_pairs(r)),
        key=lambda r: r.awrs,
    )
    # Prefer a clean firm from a different sector so the queue's sector
    # filter has something to distinguish in the fixture.
    low = min(
        (r for r in reports if r.firm_id not in washing and has_pairs(r)),
        key=lambda r: (r.sector == high.sector, r.awrs),
    )

    high = doctor_pair(rescaled(high, HIGH_SCORE))
    low = rescaled(low, LOW_SCORE)

    out_jsonl = HERE / "test" / "fixtures" / "reports.jsonl"
    write_reports([high, low], out_jsonl)
    print(f"wrote {out_jsonl}")

    records = [high.to_record(), low.to_record()]
    body = json.dumps(records, indent=2, sort_keys=True)
    out_ts = HERE / "src" / "fixture_data.ts"
    out_ts.write_text(
        "// Generated by scripts/make_fixture.py; do not edit by hand.\n"
        "import type { ReportRecord } from \"./types.js\";\n\n"
        f"export const FIXTURE_RECORDS: ReportRecord[] = {body};\n",
        encoding="utf-8",
    )
    print(f"wrote {out_ts}")


if __name__ == "__main__":
    main()
