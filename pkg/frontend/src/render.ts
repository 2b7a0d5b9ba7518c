import {
  esc,
  fmtMetric,
  fmtProb,
  fmtScore,
  fmtSigned,
  fmtTimestamp,
  fmtZ,
} from "./format.js";
import type {
  CalibrationResponse,
  CaseSummary,
  QueueFilters,
  ReportRecord,
  ThresholdResponse,
  VerdictRecord,
} from "./types.js";

// Every renderer is a pure function from fetched data to an HTML string.
// Nothing in here computes a score, a flag, or a metric; the only arithmetic
// is layout (bar widths) and number formatting.

export interface QueueView {
  cases: CaseSummary[];
  total: number;
  threshold: number;
  modelVersion: string;
  filters: QueueFilters;
  sectors: string[];
  quarters: string[];
  error?: string;
}

export interface CaseView {
  report: ReportRecord;
  verdict: VerdictRecord | null;
  modelVersion: string;
  expectedVersion: string | null;
  pending?: boolean;
  error?: string;
}

export interface CalibrateView {
  calibration: CalibrationResponse | null;
  applied?: ThresholdResponse | null;
  error?: string;
}

export function renderNav(active: "queue" | "case" | "calibrate"): string {
  const tab = (name: string, href: string, on: boolean) =>
    `<a class="tab${on ? " active" : ""}" href="${href}">${name}</a>`;
  return `<nav class="tabs">${tab("Queue", "#/queue", active === "queue")}${tab(
    "Calibration",
    "#/calibrate",
    active === "calibrate",
  )}</nav>`;
}

export function renderErrorBanner(message: string): string {
  return (
    `<div class="error-banner" role="alert">` +
    `<span>Could not reach the scoring service: ${esc(message)}.</span> ` +
    `<span>Showing the last loaded data.</span> ` +
    `<button type="button" data-action="retry">Retry</button></div>`
  );
}

function option(value: string, selected: boolean): string {
  return `<option value="${esc(value)}"${selected ? " selected" : ""}>${esc(value)}</option>`;
}

function filterControls(view: QueueView): string {
  const f = view.filters;
  return (
    `<form class="filters" data-role="filters">` +
    `<label>Sector <select name="sector" data-action="filter">` +
    option("", f.sector === undefined) +
    view.sectors.map((s) => option(s, f.sector === s)).join("") +
    `</select></label>` +
    `<label>Quarter <select name="quarter" data-action="filter">` +
    option("", f.quarter === undefined) +
    view.quarters.map((q) => option(q, f.quarter === q)).join("") +
    `</select></label>` +
    `<label>Min score <input name="min_awrs" type="number" min="0" max="100" step="0.1"` +
    ` value="${f.minAwrs === undefined ? "" : esc(String(f.minAwrs))}" data-action="filter"></label>` +
    `</form>`
  );
}

function verdictChip(verdict: string | null): string {
  if (verdict === null) return `<span class="chip open">unreviewed</span>`;
  return `<span class="chip verdict-${esc(verdict)}">${esc(verdict.replace("_", " "))}</span>`;
}

export function renderQueue(view: QueueView): string {
  const parts: string[] = [renderNav("queue")];
  if (view.error) parts.push(renderErrorBanner(view.error));
  parts.push(
    `<header class="bar"><h1>Disclosure review queue</h1>` +
      `<span class="meta">model ${esc(view.modelVersion)} · threshold ${fmtScore(view.threshold)}` +
      ` · ${view.total} case${view.total === 1 ? "" : "s"}</span></header>`,
  );
  parts.push(filterControls(view));
  if (view.cases.length === 0) {
    parts.push(
      `<p class="empty-state">No cases match the current filters.` +
        ` Clear a filter or lower the minimum score to see more.</p>`,
    );
    return parts.join("\n");
  }
  const rows = view.cases
    .map((c) => {
      const flag = c.flagged
        ? `<span class="badge flagged">flagged</span>`
        : `<span class="badge clear">below threshold</span>`;
      return (
        `<tr class="case-row" data-action="open-case" data-firm="${esc(c.firm_id)}"` +
        ` data-quarter="${esc(c.quarter)}">` +
        `<td class="score">${fmtScore(c.awrs)}</td>` +
        `<td>${flag}</td>` +
        `<td>${esc(c.firm_id)}</td>` +
        `<td>${esc(c.quarter)}</td>` +
        `<td>${esc(c.sector)}</td>` +
        `<td class="signals">${fmtProb(c.signals.cci)} / ${fmtProb(c.signals.ess)} / ` +
        `${fmtProb(c.signals.cii)} / ${fmtProb(c.signals.tgi)}</td>` +
        `<td>${verdictChip(c.verdict)}</td></tr>`
      );
    })
    .join("\n");
  parts.push(
    `<table class="queue"><thead><tr><th>Score</th><th>Status</th><th>Firm</th>` +
      `<th>Quarter</th><th>Sector</th><th>CCI / ESS / CII / TGI</th><th>Verdict</th>` +
      `</tr></thead><tbody>\n${rows}\n</tbody></table>`,
  );
  return parts.join("\n");
}

function shapleyBars(report: ReportRecord): string {
  const labels: Record<string, string> = {
    contradiction: "Contradicted claims",
    support_deficit: "Unsupported claims",
    intensity: "Claim intensity",
    grounding_deficit: "Operational grounding gap",
  };
  const entries = Object.entries(report.attribution.shapley).sort(
    (a, b) => Math.abs(b[1]) - Math.abs(a[1]),
  );
  const maxAbs = Math.max(...entries.map(([, v]) => Math.abs(v)), 1e-9);
  const rows = entries
    .map(([name, value]) => {
      const width = Math.round((Math.abs(value) / maxAbs) * 100);
      const dir = value >= 0 ? "up" : "down";
      return (
        `<div class="shapley-row"><span class="shapley-label">${esc(labels[name] ?? name)}</span>` +
        `<span class="shapley-bar ${dir}" style="width:${width}%"></span>` +
        `<span class="shapley-value">${fmtSigned(value)}</span></div>`
      );
    })
    .join("\n");
  return (
    `<section class="attribution"><h2>Score attribution</h2>` +
    `<p class="meta">baseline ${fmtScore(report.attribution.baseline)} ` +
    `to score ${fmtScore(report.attribution.awrs)}; bars are each signal's share of the move</p>` +
    `${rows}</section>`
  );
}

function pairRow(pair: ReportRecord["claims"][number]["pairs"][number]): string {
  const stamp =
    pair.timestamp === null
      ? ""
      : ` <span class="timestamp">at ${fmtTimestamp(pair.timestamp)}</span>`;
  const decisive = pair.decisive ? ` <span class="decisive">decisive</span>` : "";
  return (
    `<tr class="pair label-${esc(pair.label)}">` +
    `<td class="evidence">` +
    `<span class="modality">${esc(pair.modality)}</span> ${esc(pair.evidence_id)}${stamp}` +
    `<blockquote>${esc(pair.surface_text)}</blockquote></td>` +
    `<td class="p">${fmtProb(pair.p_entail)}</td>` +
    `<td class="p">${fmtProb(pair.p_neutral)}</td>` +
    `<td class="p">${fmtProb(pair.p_contradict)}</td>` +
    `<td>${esc(pair.label)}${decisive}</td></tr>`
  );
}

function claimSection(claim: ReportRecord["claims"][number]): string {
  const pairs =
    claim.pairs.length === 0
      ? `<p class="meta">no evidence retrieved for this claim</p>`
      : `<table class="pairs"><thead><tr><th>Evidence</th><th>entail</th>` +
        `<th>neutral</th><th>contradict</th><th>label</th></tr></thead>` +
        `<tbody>\n${claim.pairs.map(pairRow).join("\n")}\n</tbody></table>`;
  return (
    `<details class="claim" ${claim.pairs.some((p) => p.decisive) ? "open" : ""}>` +
    `<summary>"${esc(claim.text)}" <span class="meta">confidence ${fmtProb(claim.confidence)}` +
    ` · weight ${fmtProb(claim.weight)} · intensity ${fmtProb(claim.intensity)}</span></summary>` +
    `${pairs}</details>`
  );
}

function operationalSection(report: ReportRecord): string {
  if (report.operational_notes.length === 0) {
    return `<section class="operational"><h2>Operational footprint</h2><p class="meta">no notable gaps</p></section>`;
  }
  const items = report.operational_notes
    .map(
      (n) =>
        `<li class="gap ${esc(n.direction)}">${esc(n.group)}: ${fmtZ(n.mean_z)} ` +
        `${n.direction === "below" ? "below" : "above"} sector norm</li>`,
    )
    .join("\n");
  return `<section class="operational"><h2>Operational footprint</h2><ul>${items}</ul></section>`;
}

function verdictForm(view: CaseView): string {
  const current = view.verdict;
  const disabled = view.pending ? " disabled" : "";
  const existing = current
    ? `<p class="current-verdict">Current verdict: ${verdictChip(current.verdict)} ` +
      `by ${esc(current.analyst)} at ${esc(new Date(current.recorded_at * 1000).toISOString())}` +
      (current.note ? ` <q>${esc(current.note)}</q>` : "") +
      `</p><p class="meta">Submitting again records a revision; the audit log keeps every entry.</p>`
    : "";
  return (
    `<section class="verdict-form"><h2>Analyst verdict</h2>${existing}` +
    `<label>Analyst <input name="analyst" value="${current ? esc(current.analyst) : ""}"></label>` +
    `<label>Note <input name="note" value=""></label>` +
    `<div class="verdict-buttons">` +
    `<button type="button" data-action="verdict" data-verdict="confirm_washing"${disabled}>Confirm washing</button>` +
    `<button type="button" data-action="verdict" data-verdict="clear"${disabled}>Clear</button>` +
    `<button type="button" data-action="verdict" data-verdict="escalate"${disabled}>Escalate</button>` +
    `</div>${view.pending ? `<p class="meta">submitting…</p>` : ""}</section>`
  );
}

export function renderCase(view: CaseView): string {
  const r = view.report;
  const parts: string[] = [renderNav("case")];
  if (view.error) parts.push(renderErrorBanner(view.error));
  if (view.expectedVersion !== null && view.expectedVersion !== view.modelVersion) {
    parts.push(
      `<div class="version-banner" role="alert">Model version changed since the queue was ` +
        `loaded (${esc(view.expectedVersion)} is now ${esc(view.modelVersion)}). Scores may have ` +
        `moved; reload the queue before recording a verdict.</div>`,
    );
  }
  const flag = r.flagged
    ? `<span class="badge flagged">flagged</span>`
    : `<span class="badge clear">below threshold</span>`;
  parts.push(
    `<header class="bar"><a href="#/queue" class="back">back to queue</a>` +
      `<h1>${esc(r.firm_id)} ${esc(r.quarter)} <span class="meta">${esc(r.sector)}</span></h1>` +
      `<div class="score-big">${fmtScore(r.awrs)} ${flag}` +
      ` <span class="meta">threshold ${fmtScore(r.threshold)} · model ${esc(r.model_version)}</span></div>` +
      `</header>`,
  );
  parts.push(
    `<section class="signal-grid"><h2>Signals</h2>` +
      `<dl><dt>Claim contradiction</dt><dd>${fmtProb(r.signals.cci)}</dd>` +
      `<dt>Evidence support</dt><dd>${fmtProb(r.signals.ess)}</dd>` +
      `<dt>Claim intensity</dt><dd>${fmtProb(r.signals.cii)}</dd>` +
      `<dt>Operational grounding</dt><dd>${fmtProb(r.signals.tgi)}</dd></dl></section>`,
  );
  parts.push(shapleyBars(r));
  parts.push(
    `<section class="claims"><h2>Claims and evidence</h2>\n` +
      r.claims.map(claimSection).join("\n") +
      `</section>`,
  );
  parts.push(operationalSection(r));
  parts.push(verdictForm(view));
  return parts.join("\n");
}

export function renderCalibrate(view: CalibrateView): string {
  const parts: string[] = [renderNav("calibrate")];
  if (view.error) parts.push(renderErrorBanner(view.error));
  parts.push(`<header class="bar"><h1>Threshold calibration</h1></header>`);
  const cal = view.calibration;
  if (cal === null) {
    parts.push(`<p class="empty-state">Loading calibration…</p>`);
    return parts.join("\n");
  }
  if (cal.n_verdicts === 0) {
    parts.push(
      `<div class="calibrate-disabled"><p>Calibration is disabled: no analyst verdicts have ` +
        `been recorded yet, so there is nothing to score candidate thresholds against.</p>` +
        `<p>Review cases in the queue and record confirm or clear verdicts first; escalations ` +
        `are excluded from calibration.</p></div>`,
    );
    return parts.join("\n");
  }
  if (view.applied) {
    parts.push(
      `<p class="applied-note">Threshold set to ${fmtScore(view.applied.threshold)}; ` +
        `${view.applied.flagged} of ${view.applied.total} cases are now flagged.</p>`,
    );
  }
  const rows = cal.points
    .map((p) => {
      const current = p.threshold === cal.current;
      return (
        `<tr class="cal-point${current ? " current" : ""}">` +
        `<td>${fmtScore(p.threshold)}${current ? ` <span class="chip open">current</span>` : ""}</td>` +
        `<td>${p.flagged}</td>` +
        `<td>${fmtMetric(p.f1)}</td>` +
        `<td>${fmtMetric(p.precision)}</td>` +
        `<td>${fmtMetric(p.recall)}</td>` +
        `<td><button type="button" data-action="apply-threshold"` +
        ` data-threshold="${esc(String(p.threshold))}">Apply</button></td></tr>`
      );
    })
    .join("\n");
  parts.push(
    `<p class="meta">${cal.n_verdicts} verdict${cal.n_verdicts === 1 ? "" : "s"} in the ` +
      `calibration set · current threshold ${fmtScore(cal.current)}</p>` +
      `<button type="button" data-action="recalibrate">Recalibrate from verdicts</button>` +
      `<table class="calibration"><thead><tr><th>Candidate threshold</th><th>Flagged</th>` +
      `<th>F1</th><th>Precision</th><th>Recall</th><th></th></tr></thead>` +
      `<tbody>\n${rows}\n</tbody></table>`,
  );
  return parts.join("\n");
}
