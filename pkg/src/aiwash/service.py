"""Review service: serves scored cases, records analyst verdicts with a
durable audit trail, and recalibrates the flag threshold from verdicts.

State is held in an immutable snapshot swapped under a lock, so readers
never see a half-updated case list. Verdicts are appended to a JSONL audit
log and fsynced before the request is acknowledged; the effective verdict
for a case is the last one written.
"""
from __future__ import annotations

import json
import os
import threading
import time
from dataclasses import dataclass, replace
from pathlib import Path

from fastapi import Depends, FastAPI, HTTPException, Request
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .encoder import DEFAULT_SHARED_DIM, HashingProvider
from .errors import ReportError
from .report import EvidenceReport, report_from_record
from .train import best_threshold, f1_score

VERDICT_CHOICES = ("confirm_washing", "clear", "escalate")


class VerdictIn(BaseModel):
    firm_id: str
    quarter: str
    verdict: str
    analyst: str = "anonymous"
    note: str = ""


class ThresholdIn(BaseModel):
    threshold: float


class EmbedIn(BaseModel):
    texts: list[str]


@dataclass(frozen=True)
class Snapshot:
    reports: tuple[EvidenceReport, ...]
    threshold: float
    model_version: str

    def find(self, firm_id: str, quarter: str) -> EvidenceReport | None:
        for report in self.reports:
            if report.firm_id == firm_id and report.quarter == quarter:
                return report
        return None


class VerdictStore:
    """Append-only JSONL verdict log; the newest entry per case wins."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._current: dict[tuple[str, str], dict] = {}
        if self.path.exists():
            with self.path.open("r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        record = json.loads(line)
                        self._current[(record["firm_id"], record["quarter"])] = record

    def append(self, record: dict) -> None:
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            self._current[(record["firm_id"], record["quarter"])] = record

    def current(self, firm_id: str, quarter: str) -> dict | None:
        with self._lock:
            return self._current.get((firm_id, quarter))

    def all_current(self) -> dict[tuple[str, str], dict]:
        with self._lock:
            return dict(self._current)


def read_reports(path: str | Path) -> list[EvidenceReport]:
    """Load a newline-delimited file of report records."""
    reports = []
    with Path(path).open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                reports.append(report_from_record(json.loads(line)))
            except (json.JSONDecodeError, KeyError) as exc:
                raise ReportError(f"{path}:{line_no}: bad report record: {exc}") from exc
    return reports


def write_reports(reports: list[EvidenceReport], path: str | Path) -> int:
    with Path(path).open("w", encoding="utf-8") as fh:
        for report in reports:
            fh.write(json.dumps(report.to_record(), sort_keys=True) + "\n")
    return len(reports)


def create_app(
    reports: list[EvidenceReport],
    *,
    verdict_path: str | Path,
    threshold: float | None = None,
    model_version: str | None = None,
    token: str | None = None,
    console_dir: str | Path | None = None,
    embed_dim: int = DEFAULT_SHARED_DIM,
    embed_seed: int = 13,
) -> FastAPI:
    """Assemble the review API around a fixed set of scored reports."""
    if threshold is None:
        threshold = reports[0].threshold if reports else 50.0
    if model_version is None:
        model_version = reports[0].model_version if reports else "unknown"

    app = FastAPI(title="aiwash review service")
    state_lock = threading.Lock()
    app.state.snapshot = Snapshot(
        reports=tuple(sorted(reports, key=lambda r: (-r.awrs, r.firm_id, r.quarter))),
        threshold=float(threshold),
        model_version=model_version,
    )
    app.state.verdicts = VerdictStore(verdict_path)
    app.state.token = token
    provider = HashingProvider(dim=embed_dim, seed=embed_seed)

    def snapshot() -> Snapshot:
        return app.state.snapshot

    def swap_threshold(new_threshold: float) -> Snapshot:
        with state_lock:
            app.state.snapshot = replace(app.state.snapshot, threshold=float(new_threshold))
            return app.state.snapshot

    def require_token(request: Request) -> None:
        if app.state.token and request.headers.get("X-Api-Token") != app.state.token:
            raise HTTPException(status_code=401, detail="missing or invalid API token")

    guarded = [Depends(require_token)]

    def case_summary(report: EvidenceReport, snap: Snapshot) -> dict:
        verdict = app.state.verdicts.current(report.firm_id, report.quarter)
        return {
            "firm_id": report.firm_id,
            "quarter": report.quarter,
            "sector": report.sector,
            "awrs": report.awrs,
            "flagged": report.awrs >= snap.threshold,
            "signals": {
                "cci": report.signals.cci,
                "ess": report.signals.ess,
                "cii": report.signals.cii,
                "tgi": report.signals.tgi,
            },
            "verdict": verdict["verdict"] if verdict else None,
        }

    @app.get("/health")
    def health() -> dict:
        snap = snapshot()
        return {
            "status": "ok",
            "model_version": snap.model_version,
            "n_cases": len(snap.reports),
            "threshold": snap.threshold,
        }

    @app.get("/cases", dependencies=guarded)
    def cases(
        limit: int = 50,
        offset: int = 0,
        sector: str | None = None,
        quarter: str | None = None,
        min_awrs: float | None = None,
    ) -> dict:
        if limit < 1 or offset < 0:
            raise HTTPException(status_code=422, detail="limit must be >= 1, offset >= 0")
        snap = snapshot()
        rows = snap.reports
        if sector is not None:
            rows = tuple(r for r in rows if r.sector == sector)
        if quarter is not None:
            rows = tuple(r for r in rows if r.quarter == quarter)
        if min_awrs is not None:
            rows = tuple(r for r in rows if r.awrs >= min_awrs)
        page = rows[offset : offset + limit]
        return {
            "cases": [case_summary(r, snap) for r in page],
            "total": len(rows),
            "limit": limit,
            "offset": offset,
            "threshold": snap.threshold,
            "model_version": snap.model_version,
        }

    @app.get("/case", dependencies=guarded)
    def case(firm_id: str, quarter: str) -> dict:
        snap = snapshot()
        report = snap.find(firm_id, quarter)
        if report is None:
            raise HTTPException(status_code=404, detail=f"no case {firm_id}/{quarter}")
        verdict = app.state.verdicts.current(firm_id, quarter)
        record = report.to_record()
        record["flagged"] = report.awrs >= snap.threshold
        record["threshold"] = snap.threshold
        return {
            "report": record,
            "verdict": verdict,
            "model_version": snap.model_version,
        }

    @app.post("/verdicts", dependencies=guarded)
    def post_verdict(body: VerdictIn) -> dict:
        if body.verdict not in VERDICT_CHOICES:
            raise HTTPException(
                status_code=422,
                detail=f"verdict must be one of {', '.join(VERDICT_CHOICES)}",
            )
        snap = snapshot()
        if snap.find(body.firm_id, body.quarter) is None:
            raise HTTPException(
                status_code=404, detail=f"no case {body.firm_id}/{body.quarter}"
            )
        record = {
            "firm_id": body.firm_id,
            "quarter": body.quarter,
            "verdict": body.verdict,
            "analyst": body.analyst,
            "note": body.note,
            "recorded_at": time.time(),
            "model_version": snap.model_version,
        }
        app.state.verdicts.append(record)
        return {"recorded": True, "verdict": record, "model_version": snap.model_version}

    def _verdict_labels(snap: Snapshot) -> tuple[list[float], list[int]]:
        scores: list[float] = []
        labels: list[int] = []
        for (firm_id, quarter), record in sorted(app.state.verdicts.all_current().items()):
            if record["verdict"] == "escalate":
                continue
            report = snap.find(firm_id, quarter)
            if report is None:
                continue
            scores.append(report.awrs)
            labels.append(1 if record["verdict"] == "confirm_washing" else 0)
        return scores, labels

    @app.post("/recalibrate", dependencies=guarded)
    def recalibrate() -> dict:
        snap = snapshot()
        scores, labels = _verdict_labels(snap)
        if not scores or not any(labels):
            return {
                "threshold": snap.threshold,
                "f1": None,
                "n_verdicts": len(scores),
                "changed": False,
                "model_version": snap.model_version,
            }
        new_threshold, f1 = best_threshold(scores, labels, snap.threshold)
        changed = new_threshold != snap.threshold
        snap = swap_threshold(new_threshold)
        return {
            "threshold": snap.threshold,
            "f1": f1,
            "n_verdicts": len(scores),
            "changed": changed,
            "model_version": snap.model_version,
        }

    @app.post("/threshold", dependencies=guarded)
    def set_threshold(body: ThresholdIn) -> dict:
        if not 0.0 <= body.threshold <= 100.0:
            raise HTTPException(status_code=422, detail="threshold must be in [0, 100]")
        snap = swap_threshold(body.threshold)
        flagged = sum(1 for r in snap.reports if r.awrs >= snap.threshold)
        return {
            "threshold": snap.threshold,
            "flagged": flagged,
            "total": len(snap.reports),
            "model_version": snap.model_version,
        }

    @app.get("/calibration", dependencies=guarded)
    def calibration() -> dict:
        import numpy as np

        snap = snapshot()
        scores, labels = _verdict_labels(snap)
        grid = sorted({r.awrs for r in snap.reports} | {0.0, 100.0, snap.threshold})
        points = []
        for theta in grid:
            flagged = sum(1 for r in snap.reports if r.awrs >= theta)
            f1 = precision = recall = None
            if scores and any(labels):
                y = np.asarray(labels)
                y_hat = (np.asarray(scores) >= theta).astype(int)
                tp = int(np.sum((y == 1) & (y_hat == 1)))
                fp = int(np.sum((y == 0) & (y_hat == 1)))
                fn = int(np.sum((y == 1) & (y_hat == 0)))
                f1 = f1_score(y, y_hat)
                precision = tp / (tp + fp) if tp + fp else None
                recall = tp / (tp + fn) if tp + fn else None
            points.append(
                {
                    "threshold": theta,
                    "flagged": flagged,
                    "f1": f1,
                    "precision": precision,
                    "recall": recall,
                }
            )
        return {
            "points": points,
            "current": snap.threshold,
            "n_verdicts": len(scores),
            "model_version": snap.model_version,
        }

    @app.post("/embed")
    def embed(body: EmbedIn) -> dict:
        vectors = provider.embed_text(body.texts).tolist()
        return {"vectors": vectors, "dim": provider.dim}

    if console_dir is not None:
        app.mount("/console", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app


def serve(app: FastAPI, host: str = "127.0.0.1", port: int = 8000) -> None:
    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level="warning")
