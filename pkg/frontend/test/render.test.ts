import { describe, expect, it } from "vitest";

import { esc } from "../src/format.js";
import { FIXTURE_RECORDS } from "../src/fixture_data.js";
import {
  renderCalibrate,
  renderCase,
  renderErrorBanner,
  renderQueue,
  type CalibrateView,
  type CaseView,
  type QueueView,
} from "../src/render.js";
import type { CalibrationResponse, CaseSummary, ReportRecord } from "../src/types.js";

const high = FIXTURE_RECORDS.find((r) => r.awrs > 50) as ReportRecord;
const low = FIXTURE_RECORDS.find((r) => r.awrs < 50) as ReportRecord;

function summaryOf(record: ReportRecord, threshold: number): CaseSummary {
  return {
    firm_id: record.firm_id,
    quarter: record.quarter,
    sector: record.sector,
    awrs: record.awrs,
    flagged: record.awrs >= threshold,
    signals: record.signals,
    verdict: null,
  };
}

function queueView(overrides: Partial<QueueView> = {}): QueueView {
  return {
    cases: [summaryOf(high, 50), summaryOf(low, 50)],
    total: 2,
    threshold: 50,
    modelVersion: "aiwash-0.1.0",
    filters: {},
    sectors: [high.sector, low.sector].sort(),
    quarters: [high.quarter],
    ...overrides,
  };
}

describe("queue screen", () => {
  it("lists cases in the order the service returned them, high score first", () => {
    const html = renderQueue(queueView());
    const posHigh = html.indexOf("87.3");
    const posLow = html.indexOf("12.1");
    expect(posHigh).toBeGreaterThan(-1);
    expect(posLow).toBeGreaterThan(-1);
    expect(posHigh).toBeLessThan(posLow);
  });

  it("marks flagged and unflagged rows from the fetched flag, not the score", () => {
    // Deliberately contradictory input: the renderer must trust the service.
    const flipped = [
      { ...summaryOf(high, 50), flagged: false },
      { ...summaryOf(low, 50), flagged: true },
    ];
    const html = renderQueue(queueView({ cases: flipped }));
    const rows = html.split("<tr").filter((part) => part.includes("case-row"));
    expect(rows[0]).toContain("below threshold");
    expect(rows[1]).toContain(">flagged<");
  });

  it("shows threshold, model version, and case count in the header", () => {
    const html = renderQueue(queueView({ threshold: 62.5, total: 41 }));
    expect(html).toContain("threshold 62.5");
    expect(html).toContain("model aiwash-0.1.0");
    expect(html).toContain("41 cases");
  });

  it("renders an explanatory empty state when no cases match", () => {
    const html = renderQueue(queueView({ cases: [], total: 0 }));
    expect(html).toContain("empty-state");
    expect(html).toContain("No cases match the current filters");
    expect(html).not.toContain("<table");
  });

  it("keeps the last loaded rows next to a connectivity error banner", () => {
    const html = renderQueue(queueView({ error: "connection refused" }));
    expect(html).toContain("error-banner");
    expect(html).toContain("connection refused");
    expect(html).toContain('data-action="retry"');
    // The stale rows survive the error; nothing is torn down.
    expect(html).toContain("87.3");
    expect(html).toContain("12.1");
  });

  it("offers the sectors and quarters it was given as filter options", () => {
    const html = renderQueue(
      queueView({ filters: { sector: "energy" }, sectors: ["energy", "manufacturing"] }),
    );
    expect(html).toContain('<option value="energy" selected>');
    expect(html).toContain('<option value="manufacturing">');
  });

  it("escapes markup in service-provided text", () => {
    const hostile = { ...summaryOf(high, 50), firm_id: "<script>x</script>" };
    const html = renderQueue(queueView({ cases: [hostile] }));
    expect(html).not.toContain("<script>");
    expect(html).toContain("&lt;script&gt;");
  });
});

function caseView(overrides: Partial<CaseView> = {}): CaseView {
  return {
    report: high,
    verdict: null,
    modelVersion: high.model_version,
    expectedVersion: high.model_version,
    ...overrides,
  };
}

describe("case screen", () => {
  it("surfaces the decisive contradiction pair with its probability", () => {
    const html = renderCase(caseView());
    expect(html).toContain("0.891");
    expect(html).toContain(">decisive<");
    expect(html).toContain("label-contradict");
  });

  it("shows evidence snippets and formatted video timestamps", () => {
    const pairs = high.claims.flatMap((c) => c.pairs);
    const stamped = pairs.find((p) => p.timestamp !== null);
    expect(stamped).toBeDefined();
    const html = renderCase(caseView());
    const minutes = Math.floor((stamped as { timestamp: number }).timestamp / 60);
    expect(html).toContain(`at ${minutes}:`);
    // A snippet from the record appears (escaped for markup).
    expect(html).toContain(esc(pairs[0]!.surface_text).slice(0, 30));
  });

  it("omits the timestamp span when the service sent none", () => {
    const bare: ReportRecord = {
      ...high,
      claims: [
        {
          ...high.claims[0]!,
          pairs: [{ ...high.claims[0]!.pairs[0]!, timestamp: null }],
        },
      ],
    };
    const html = renderCase(caseView({ report: bare }));
    expect(html).not.toContain('class="timestamp"');
  });

  it("renders the four signals and the attribution bars", () => {
    const html = renderCase(caseView());
    expect(html).toContain("Operational grounding");
    expect(html).toContain("Contradicted claims");
    expect(html).toContain("Unsupported claims");
    expect(html).toContain(`baseline 50.0`);
    expect(html).toContain(`to score 87.3`);
  });

  it("lists operational gaps with direction and magnitude", () => {
    const html = renderCase(caseView());
    for (const note of high.operational_notes) {
      expect(html).toContain(note.group);
    }
    expect(html).toMatch(/[+-]\d+\.\d{2} sd/);
  });

  it("warns when the model version changed since the queue was loaded", () => {
    const html = renderCase(caseView({ expectedVersion: "aiwash-0.0.9" }));
    expect(html).toContain("version-banner");
    expect(html).toContain("aiwash-0.0.9");
    expect(html).toContain(high.model_version);
  });

  it("shows no version warning when versions agree or no queue was loaded", () => {
    expect(renderCase(caseView())).not.toContain("version-banner");
    expect(renderCase(caseView({ expectedVersion: null }))).not.toContain(
      "version-banner",
    );
  });

  it("disables verdict buttons while a submission is in flight", () => {
    const html = renderCase(caseView({ pending: true }));
    const buttons = html.match(/data-action="verdict"[^>]*/g) ?? [];
    expect(buttons).toHaveLength(3);
    for (const b of buttons) expect(b).toContain("disabled");
  });

  it("explains that resubmitting records an audit revision", () => {
    const verdict = {
      firm_id: high.firm_id,
      quarter: high.quarter,
      verdict: "escalate",
      analyst: "jp",
      note: "needs a second look",
      recorded_at: 1700000000,
      model_version: high.model_version,
    };
    const html = renderCase(caseView({ verdict }));
    expect(html).toContain("records a revision");
    expect(html).toContain("needs a second look");
    expect(html).toContain("jp");
  });
});

function calibration(overrides: Partial<CalibrationResponse> = {}): CalibrationResponse {
  return {
    points: [
      { threshold: 0, flagged: 2, f1: 2 / 3, precision: 0.5, recall: 1 },
      { threshold: 12.1, flagged: 2, f1: 2 / 3, precision: 0.5, recall: 1 },
      { threshold: 50, flagged: 1, f1: 1, precision: 1, recall: 1 },
      { threshold: 87.3, flagged: 1, f1: 1, precision: 1, recall: 1 },
      { threshold: 100, flagged: 0, f1: 0, precision: null, recall: 0 },
    ],
    current: 50,
    n_verdicts: 2,
    model_version: "aiwash-0.1.0",
    ...overrides,
  };
}

describe("calibration screen", () => {
  it("is disabled with an explanation when no verdicts exist", () => {
    const view: CalibrateView = { calibration: calibration({ n_verdicts: 0 }) };
    const html = renderCalibrate(view);
    expect(html).toContain("calibrate-disabled");
    expect(html).toContain("no analyst verdicts");
    expect(html).not.toContain("apply-threshold");
  });

  it("tabulates F1, precision, and recall per candidate threshold", () => {
    const html = renderCalibrate({ calibration: calibration() });
    expect(html).toContain("<th>F1</th>");
    expect(html).toContain("<th>Precision</th>");
    expect(html).toContain("<th>Recall</th>");
    expect(html).toContain("0.667");
    expect(html).toContain("1.000");
  });

  it("shows a threshold of 100 flagging zero cases", () => {
    const html = renderCalibrate({ calibration: calibration() });
    const row = html
      .split("<tr")
      .find((part) => part.includes("100.0") && part.includes("apply-threshold"));
    expect(row).toBeDefined();
    expect(row).toContain("<td>0</td>");
    // Precision is undefined when nothing is flagged; shown as n/a, never 0.
    expect(row).toContain("n/a");
  });

  it("marks the current threshold and reports the applied change", () => {
    const html = renderCalibrate({
      calibration: calibration(),
      applied: { threshold: 87.3, flagged: 1, total: 2, model_version: "aiwash-0.1.0" },
    });
    expect(html).toContain("current");
    expect(html).toContain("Threshold set to 87.3");
    expect(html).toContain("1 of 2 cases");
  });
});

describe("error banner", () => {
  it("escapes the message and offers a retry", () => {
    const html = renderErrorBanner('boom <img src="x">');
    expect(html).not.toContain("<img");
    expect(html).toContain("Retry");
  });
});
