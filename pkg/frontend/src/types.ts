// Shapes of the scoring service's JSON responses. The console never computes
// scores, thresholds, or metrics itself; everything numeric on screen comes
// from one of these payloads.

export type Verdict = "confirm_washing" | "clear" | "escalate";

export const VERDICT_CHOICES: Verdict[] = ["confirm_washing", "clear", "escalate"];

export interface SignalSet {
  cci: number;
  ess: number;
  cii: number;
  tgi: number;
}

export interface PairRecord {
  evidence_id: string;
  modality: string;
  surface_text: string;
  timestamp: number | null;
  similarity: number;
  p_entail: number;
  p_neutral: number;
  p_contradict: number;
  label: string;
  decisive: boolean;
}

export interface ClaimRecord {
  claim_id: string;
  text: string;
  confidence: number;
  weight: number;
  support: number;
  contradiction: number;
  intensity: number;
  cci_share: number;
  pairs: PairRecord[];
}

export interface AttributionRecord {
  awrs: number;
  baseline: number;
  shapley: Record<string, number>;
  interactions: number[][];
}

export interface OperationalNote {
  group: string;
  mean_z: number;
  direction: "above" | "below";
}

export interface ReportRecord {
  format: string;
  firm_id: string;
  quarter: string;
  sector: string;
  model_version: string;
  ablation: string;
  awrs: number;
  p_wash: number;
  threshold: number;
  flagged: boolean;
  signals: SignalSet;
  gate: number[];
  motivation_probs: number[];
  claims: ClaimRecord[];
  attribution: AttributionRecord;
  operational_notes: OperationalNote[];
}

export interface HealthResponse {
  status: string;
  model_version: string;
  n_cases: number;
  threshold: number;
}

export interface CaseSummary {
  firm_id: string;
  quarter: string;
  sector: string;
  awrs: number;
  flagged: boolean;
  signals: SignalSet;
  verdict: string | null;
}

export interface CasesResponse {
  cases: CaseSummary[];
  total: number;
  limit: number;
  offset: number;
  threshold: number;
  model_version: string;
}

export interface VerdictRecord {
  firm_id: string;
  quarter: string;
  verdict: string;
  analyst: string;
  note: string;
  recorded_at: number;
  model_version: string;
}

export interface CaseResponse {
  report: ReportRecord;
  verdict: VerdictRecord | null;
  model_version: string;
}

export interface VerdictResponse {
  recorded: boolean;
  verdict: VerdictRecord;
  model_version: string;
}

export interface RecalibrateResponse {
  threshold: number;
  f1: number | null;
  n_verdicts: number;
  changed: boolean;
  model_version: string;
}

export interface ThresholdResponse {
  threshold: number;
  flagged: number;
  total: number;
  model_version: string;
}

export interface CalibrationPoint {
  threshold: number;
  flagged: number;
  f1: number | null;
  precision: number | null;
  recall: number | null;
}

export interface CalibrationResponse {
  points: CalibrationPoint[];
  current: number;
  n_verdicts: number;
  model_version: string;
}

export interface QueueFilters {
  sector?: string;
  quarter?: string;
  minAwrs?: number;
  limit?: number;
  offset?: number;
}
