import type {
  CalibrationResponse,
  CaseResponse,
  CasesResponse,
  HealthResponse,
  QueueFilters,
  RecalibrateResponse,
  ThresholdResponse,
  Verdict,
  VerdictResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly detail: string;

  constructor(status: number, detail: string) {
    super(`service replied ${status}: ${detail}`);
    this.name = "ApiError";
    this.status = status;
    this.detail = detail;
  }
}

export interface ClientOptions {
  baseUrl?: string;
  token?: string;
  fetchFn?: FetchLike;
}

/** Thin typed wrapper over the scoring service HTTP API. */
export class ApiClient {
  private readonly baseUrl: string;
  private readonly token: string | undefined;
  private readonly fetchFn: FetchLike;

  constructor(options: ClientOptions = {}) {
    this.baseUrl = (options.baseUrl ?? "").replace(/\/$/, "");
    this.token = options.token;
    this.fetchFn = options.fetchFn ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(
    method: string,
    path: string,
    query?: Record<string, string | number | undefined>,
    body?: unknown,
  ): Promise<T> {
    let url = this.baseUrl + path;
    if (query) {
      const params = new URLSearchParams();
      for (const [key, value] of Object.entries(query)) {
        if (value !== undefined) params.set(key, String(value));
      }
      const qs = params.toString();
      if (qs) url += "?" + qs;
    }
    const headers: Record<string, string> = {};
    if (this.token) headers["X-Api-Token"] = this.token;
    const init: RequestInit = { method, headers };
    if (body !== undefined) {
      headers["Content-Type"] = "application/json";
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(url, init);
    if (!response.ok) {
      let detail = response.statusText || "request failed";
      try {
        const payload = await response.json();
        if (payload && typeof payload.detail === "string") detail = payload.detail;
        else if (payload) detail = JSON.stringify(payload);
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  health(): Promise<HealthResponse> {
    return this.request("GET", "/health");
  }

  cases(filters: QueueFilters = {}): Promise<CasesResponse> {
    return this.request("GET", "/cases", {
      sector: filters.sector,
      quarter: filters.quarter,
      min_awrs: filters.minAwrs,
      limit: filters.limit,
      offset: filters.offset,
    });
  }

  case(firmId: string, quarter: string): Promise<CaseResponse> {
    return this.request("GET", "/case", { firm_id: firmId, quarter });
  }

  submitVerdict(
    firmId: string,
    quarter: string,
    verdict: Verdict,
    analyst = "anonymous",
    note = "",
  ): Promise<VerdictResponse> {
    return this.request("POST", "/verdicts", undefined, {
      firm_id: firmId,
      quarter,
      verdict,
      analyst,
      note,
    });
  }

  recalibrate(): Promise<RecalibrateResponse> {
    return this.request("POST", "/recalibrate");
  }

  setThreshold(threshold: number): Promise<ThresholdResponse> {
    return this.request("POST", "/threshold", undefined, { threshold });
  }

  calibration(): Promise<CalibrationResponse> {
    return this.request("GET", "/calibration");
  }
}
