import { ApiClient, ApiError } from "./api.js";
import type { CalibrateView, CaseView, QueueView } from "./render.js";
import { renderCalibrate, renderCase, renderQueue } from "./render.js";
import type {
  CalibrationResponse,
  CaseResponse,
  CasesResponse,
  QueueFilters,
  ThresholdResponse,
  Verdict,
} from "./types.js";

export type Route =
  | { screen: "queue" }
  | { screen: "case"; firmId: string; quarter: string }
  | { screen: "calibrate" };

/** Hash-based routes: #/queue, #/case/<firm>/<quarter>, #/calibrate. */
export function parseRoute(hash: string): Route {
  const parts = hash.replace(/^#\/?/, "").split("/");
  if (parts[0] === "case" && parts.length >= 3) {
    return {
      screen: "case",
      firmId: decodeURIComponent(parts[1] ?? ""),
      quarter: decodeURIComponent(parts[2] ?? ""),
    };
  }
  if (parts[0] === "calibrate") return { screen: "calibrate" };
  return { screen: "queue" };
}

export function caseHash(firmId: string, quarter: string): string {
  return `#/case/${encodeURIComponent(firmId)}/${encodeURIComponent(quarter)}`;
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return error.detail;
  if (error instanceof Error) return error.message;
  return String(error);
}

interface AppState {
  route: Route;
  filters: QueueFilters;
  queue: CasesResponse | null;
  caseData: CaseResponse | null;
  calibration: CalibrationResponse | null;
  applied: ThresholdResponse | null;
  queueVersion: string | null;
  pending: boolean;
  error: string | null;
}

export class App {
  private readonly root: HTMLElement;
  private readonly client: ApiClient;
  private state: AppState = {
    route: { screen: "queue" },
    filters: {},
    queue: null,
    caseData: null,
    calibration: null,
    applied: null,
    queueVersion: null,
    pending: false,
    error: null,
  };

  constructor(root: HTMLElement, client: ApiClient) {
    this.root = root;
    this.client = client;
  }

  start(): void {
    this.root.addEventListener("click", (event) => {
      void this.onClick(event);
    });
    this.root.addEventListener("change", (event) => {
      void this.onFilterChange(event);
    });
    window.addEventListener("hashchange", () => {
      void this.navigate(parseRoute(window.location.hash));
    });
    void this.navigate(parseRoute(window.location.hash));
  }

  private async navigate(route: Route): Promise<void> {
    this.state.route = route;
    this.state.error = null;
    await this.load();
    this.paint();
  }

  private async load(): Promise<void> {
    const route = this.state.route;
    try {
      if (route.screen === "queue") {
        this.state.queue = await this.client.cases(this.state.filters);
        this.state.queueVersion = this.state.queue.model_version;
      } else if (route.screen === "case") {
        this.state.caseData = await this.client.case(route.firmId, route.quarter);
      } else {
        this.state.calibration = await this.client.calibration();
      }
      this.state.error = null;
    } catch (error) {
      // Keep whatever was on screen; the banner offers a retry.
      this.state.error = describe(error);
    }
  }

  private paint(): void {
    const s = this.state;
    if (s.route.screen === "queue") {
      const view: QueueView = {
        cases: s.queue?.cases ?? [],
        total: s.queue?.total ?? 0,
        threshold: s.queue?.threshold ?? 0,
        modelVersion: s.queue?.model_version ?? "unknown",
        filters: s.filters,
        sectors: [...new Set((s.queue?.cases ?? []).map((c) => c.sector))].sort(),
        quarters: [...new Set((s.queue?.cases ?? []).map((c) => c.quarter))].sort(),
        ...(s.error === null ? {} : { error: s.error }),
      };
      this.root.innerHTML = renderQueue(view);
      return;
    }
    if (s.route.screen === "case") {
      if (s.caseData === null) {
        this.root.innerHTML = s.error === null ? "" : renderQueue({
          cases: [],
          total: 0,
          threshold: 0,
          modelVersion: "unknown",
          filters: {},
          sectors: [],
          quarters: [],
          error: s.error,
        });
        return;
      }
      const view: CaseView = {
        report: s.caseData.report,
        verdict: s.caseData.verdict,
        modelVersion: s.caseData.model_version,
        expectedVersion: s.queueVersion,
        pending: s.pending,
        ...(s.error === null ? {} : { error: s.error }),
      };
      this.root.innerHTML = renderCase(view);
      return;
    }
    const view: CalibrateView = {
      calibration: s.calibration,
      applied: s.applied,
      ...(s.error === null ? {} : { error: s.error }),
    };
    this.root.innerHTML = renderCalibrate(view);
  }

  private async onClick(event: Event): Promise<void> {
    const target = (event.target as HTMLElement | null)?.closest<HTMLElement>(
      "[data-action]",
    );
    if (!target) return;
    const action = target.dataset["action"];
    if (action === "open-case") {
      window.location.hash = caseHash(
        target.dataset["firm"] ?? "",
        target.dataset["quarter"] ?? "",
      );
      return;
    }
    if (action === "retry") {
      await this.navigate(this.state.route);
      return;
    }
    if (action === "verdict") {
      await this.submitVerdict(target.dataset["verdict"] as Verdict);
      return;
    }
    if (action === "apply-threshold") {
      await this.applyThreshold(Number(target.dataset["threshold"]));
      return;
    }
    if (action === "recalibrate") {
      try {
        await this.client.recalibrate();
        this.state.applied = null;
        await this.navigate(this.state.route);
      } catch (error) {
        this.state.error = describe(error);
        this.paint();
      }
    }
  }

  private async onFilterChange(event: Event): Promise<void> {
    const input = event.target as HTMLInputElement | HTMLSelectElement | null;
    if (!input || this.state.route.screen !== "queue") return;
    if (input.name === "sector") {
      this.state.filters.sector = input.value || undefined;
    } else if (input.name === "quarter") {
      this.state.filters.quarter = input.value || undefined;
    } else if (input.name === "min_awrs") {
      this.state.filters.minAwrs = input.value === "" ? undefined : Number(input.value);
    } else {
      return;
    }
    await this.navigate(this.state.route);
  }

  private async submitVerdict(verdict: Verdict): Promise<void> {
    const route = this.state.route;
    if (route.screen !== "case" || this.state.pending) return;
    const analyst =
      this.root.querySelector<HTMLInputElement>("input[name=analyst]")?.value || "anonymous";
    const note = this.root.querySelector<HTMLInputElement>("input[name=note]")?.value || "";
    this.state.pending = true;
    this.paint();
    try {
      await this.client.submitVerdict(route.firmId, route.quarter, verdict, analyst, note);
      // Reconcile with the service's authoritative copy of the verdict.
      this.state.caseData = await this.client.case(route.firmId, route.quarter);
      this.state.error = null;
    } catch (error) {
      this.state.error = describe(error);
    } finally {
      this.state.pending = false;
      this.paint();
    }
  }

  private async applyThreshold(threshold: number): Promise<void> {
    try {
      this.state.applied = await this.client.setThreshold(threshold);
      // The queue's flags are stale now; drop it so the next visit refetches.
      this.state.queue = null;
      await this.navigate(this.state.route);
    } catch (error) {
      this.state.error = describe(error);
      this.paint();
    }
  }
}

export function startApp(root: HTMLElement, client: ApiClient): App {
  const app = new App(root, client);
  app.start();
  return app;
}
