// Display formatting only. Rounding for presentation is the one kind of
// arithmetic the console is allowed to do.

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Risk scores render with one decimal, e.g. 87.3. */
export function fmtScore(value: number): string {
  return value.toFixed(1);
}

/** Probabilities and signal values render with three decimals, e.g. 0.891. */
export function fmtProb(value: number): string {
  return value.toFixed(3);
}

/** Signed contribution, one decimal: +12.4 / -3.1. */
export function fmtSigned(value: number): string {
  const s = value.toFixed(1);
  return value >= 0 ? `+${s}` : s;
}

/** Z-scored operational gap, e.g. "-1.21 sd". */
export function fmtZ(value: number): string {
  const s = value.toFixed(2);
  return `${value >= 0 ? "+" + s : s} sd`;
}

/** Video timestamp in seconds -> m:ss. */
export function fmtTimestamp(seconds: number): string {
  const m = Math.floor(seconds / 60);
  const s = Math.floor(seconds % 60);
  return `${m}:${String(s).padStart(2, "0")}`;
}

/** Metric that may be undefined at a given threshold (no predictions). */
export function fmtMetric(value: number | null): string {
  return value === null ? "n/a" : value.toFixed(3);
}
