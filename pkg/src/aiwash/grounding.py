"""Operational grounding: fixed 68-dim feature layout over patents, hiring,
R&D, and compute procurement, plus the MLP that turns it into a grounding
index in (0,1).

Layout ``v1`` (slot ranges, oldest quarter first within each range):

  patents [0..24)
    0..8    AI filing count per trailing quarter           [magnitude]
    8..16   ai_count / total_count per quarter (0 if no filings)
    16      mean first difference of filing counts
    17      mean second difference of filing counts
    18..22  forward-citation stats over the window: mean, median, max,
            fraction of filings with any citation
    22      grant rate (granted / AI filings, 0-guarded)
    23      quarters since last AI filing, capped at 8
  talent [24..44)
    24..32  AI posting volume per quarter                  [magnitude]
    32..38  skill-category shares over the window (six categories)
    38..41  seniority shares: junior, mid, senior
    41      volume-weighted mean skill-alignment score
    42      mean first difference of posting volume
    43      mean second difference of posting volume
  rnd [44..56)
    44..48  R&D intensity (amount / revenue), last four quarters
    48..52  quarter-over-quarter amount growth, last four quarters
    52..56  capitalized fraction, last four quarters
  compute [56..68)
    56..60  GPU spend, last four quarters                  [magnitude]
    60..64  server spend, last four quarters               [magnitude]
    64..68  cloud contract value, last four quarters       [magnitude]

Magnitude slots are log1p-transformed in the raw vector and z-scored against
panel statistics at build time. Slots tied to a missing-flagged quarter are
imputed at the panel mean (z = 0 for magnitude slots). Window aggregates are
computed over the present quarters only.
"""
from __future__ import annotations

import json
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .core import FirmQuarterBundle, OperationalRecords
from .errors import GroundingError
from .reasoner import sigmoid

LAYOUT_V1 = "v1"
LAYOUT_SIZE = 68
HIDDEN_1 = 128
HIDDEN_2 = 256

SKILL_CATEGORIES = ("ml_core", "data_eng", "nlp", "vision", "infra", "research")

_SKILL_ALIASES = {
    "ml_core": {"ml_core", "ml", "machine learning", "machine-learning", "ml engineer", "deep learning"},
    "data_eng": {"data_eng", "data engineering", "data engineer", "etl", "data platform"},
    "nlp": {"nlp", "natural language processing", "language model", "text mining"},
    "vision": {"vision", "computer vision", "cv", "image recognition", "perception"},
    "infra": {"infra", "mlops", "infrastructure", "platform", "sre", "devops"},
    "research": {"research", "scientist", "research scientist", "phd", "lab"},
}

# Magnitude slots: count/spend features, log1p then z-scored.
_MAGNITUDE = np.zeros(LAYOUT_SIZE, dtype=bool)
_MAGNITUDE[0:8] = True
_MAGNITUDE[24:32] = True
_MAGNITUDE[56:68] = True

# Quarter-tied slots: (slot index, group, quarter offset into the window).
# Everything else is a window aggregate and is never marked missing.
_BLOCK_SIZES = {"patents": 24, "talent": 20, "rnd": 12, "compute": 12}
assert sum(_BLOCK_SIZES.values()) == LAYOUT_SIZE


def magnitude_mask() -> np.ndarray:
    return _MAGNITUDE.copy()


@dataclass(frozen=True)
class OperationalVector:
    values: np.ndarray
    layout_version: str = LAYOUT_V1

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.shape != (LAYOUT_SIZE,):
            raise GroundingError(
                f"operational vector must have {LAYOUT_SIZE} slots, got {arr.shape}",
                code="LAYOUT_MISMATCH",
            )
        object.__setattr__(self, "values", arr)


@dataclass(frozen=True)
class PanelStats:
    """Per-slot mean/std fitted on a training panel, keyed by layout version."""

    layout_version: str
    mean: np.ndarray
    std: np.ndarray
    n_obs: np.ndarray

    def __post_init__(self):
        for name in ("mean", "std", "n_obs"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            if arr.shape != (LAYOUT_SIZE,):
                raise GroundingError(
                    f"panel stats field {name} must have {LAYOUT_SIZE} slots",
                    code="LAYOUT_MISMATCH",
                )
            object.__setattr__(self, name, arr)

    def to_record(self) -> dict:
        return {
            "format": "aiwash.panel_stats.v1",
            "layout_version": self.layout_version,
            "mean": self.mean.tolist(),
            "std": self.std.tolist(),
            "n_obs": self.n_obs.tolist(),
        }

    @classmethod
    def from_record(cls, record: dict) -> "PanelStats":
        return cls(
            layout_version=record["layout_version"],
            mean=np.asarray(record["mean"], dtype=np.float64),
            std=np.asarray(record["std"], dtype=np.float64),
            n_obs=np.asarray(record["n_obs"], dtype=np.float64),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_record(), sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "PanelStats":
        return cls.from_record(json.loads(Path(path).read_text(encoding="utf-8")))


def _sorted_present(records):
    ordered = sorted(records, key=lambda r: r.quarter)
    return ordered, [r for r in ordered if not r.missing]


def _mean_first_diff(series: list[tuple[int, float]]) -> float:
    """Mean difference over consecutive-quarter pairs (window positions)."""
    diffs = [
        b - a
        for (pos_a, a), (pos_b, b) in zip(series, series[1:])
        if pos_b == pos_a + 1
    ]
    return float(np.mean(diffs)) if diffs else 0.0


def _mean_second_diff(series: list[tuple[int, float]]) -> float:
    diffs = []
    for (p0, v0), (p1, v1), (p2, v2) in zip(series, series[1:], series[2:]):
        if p1 == p0 + 1 and p2 == p1 + 1:
            diffs.append(v2 - 2.0 * v1 + v0)
    return float(np.mean(diffs)) if diffs else 0.0


def _skill_category(tag: str) -> str | None:
    normalized = " ".join(tag.lower().replace("-", " ").replace("_", " ").split())
    for category, aliases in _SKILL_ALIASES.items():
        if normalized in {a.replace("-", " ").replace("_", " ") for a in aliases}:
            return category
    return None


def raw_operational_vector(op: OperationalRecords) -> tuple[np.ndarray, np.ndarray]:
    """The pre-normalization vector plus a per-slot missing mask.

    Magnitude slots already carry log1p values. Slots derived from a
    missing-flagged quarter are zero-filled and flagged in the mask so the
    builder can impute them against panel statistics.
    """
    raw = np.zeros(LAYOUT_SIZE, dtype=np.float64)
    mask = np.zeros(LAYOUT_SIZE, dtype=bool)

    patents, patents_present = _sorted_present(op.patents)
    for pos, rec in enumerate(patents[:8]):
        if rec.missing:
            mask[pos] = True
            mask[8 + pos] = True
        else:
            raw[pos] = np.log1p(float(rec.ai_count))
            raw[8 + pos] = rec.ai_count / rec.total_count if rec.total_count > 0 else 0.0
    count_series = [
        (pos, float(rec.ai_count)) for pos, rec in enumerate(patents[:8]) if not rec.missing
    ]
    raw[16] = _mean_first_diff(count_series)
    raw[17] = _mean_second_diff(count_series)
    citations = [c for rec in patents_present for c in rec.forward_citations]
    if citations:
        raw[18] = float(np.mean(citations))
        raw[19] = float(statistics.median(citations))
        raw[20] = float(max(citations))
        raw[21] = sum(1 for c in citations if c > 0) / len(citations)
    total_ai = sum(rec.ai_count for rec in patents_present)
    total_granted = sum(rec.granted_count for rec in patents_present)
    raw[22] = total_granted / total_ai if total_ai > 0 else 0.0
    recency = 8.0
    for pos in range(len(patents[:8]) - 1, -1, -1):
        rec = patents[pos]
        if not rec.missing and rec.ai_count > 0:
            recency = float(len(patents[:8]) - 1 - pos)
            break
    raw[23] = min(recency, 8.0)

    jobs, jobs_present = _sorted_present(op.jobs)
    for pos, rec in enumerate(jobs[:8]):
        if rec.missing:
            mask[24 + pos] = True
        else:
            raw[24 + pos] = np.log1p(float(rec.volume))
    category_counts = {cat: 0 for cat in SKILL_CATEGORIES}
    for rec in jobs_present:
        for tag in rec.skill_tags:
            category = _skill_category(tag)
            if category is not None:
                category_counts[category] += 1
    total_tags = sum(category_counts.values())
    for offset, cat in enumerate(SKILL_CATEGORIES):
        raw[32 + offset] = category_counts[cat] / total_tags if total_tags else 0.0
    seniority = np.zeros(3, dtype=np.float64)
    for rec in jobs_present:
        seniority += np.asarray(rec.seniority_counts, dtype=np.float64)
    total_seniority = seniority.sum()
    if total_seniority > 0:
        raw[38:41] = seniority / total_seniority
    weighted_volume = sum(rec.volume for rec in jobs_present)
    if weighted_volume > 0:
        raw[41] = (
            sum(rec.skill_alignment * rec.volume for rec in jobs_present) / weighted_volume
        )
    elif jobs_present:
        raw[41] = float(np.mean([rec.skill_alignment for rec in jobs_present]))
    volume_series = [
        (pos, float(rec.volume)) for pos, rec in enumerate(jobs[:8]) if not rec.missing
    ]
    raw[42] = _mean_first_diff(volume_series)
    raw[43] = _mean_second_diff(volume_series)

    rnd, _ = _sorted_present(op.rnd)
    last4 = list(enumerate(rnd[:8]))[-4:]
    for offset, (pos, rec) in enumerate(last4):
        if rec.missing:
            mask[44 + offset] = True
            mask[48 + offset] = True
            mask[52 + offset] = True
            continue
        raw[44 + offset] = rec.amount / rec.revenue if rec.revenue > 0 else 0.0
        prev = rnd[pos - 1] if pos - 1 >= 0 else None
        if prev is not None and not prev.missing and prev.amount > 0:
            raw[48 + offset] = (rec.amount - prev.amount) / prev.amount
        raw[52 + offset] = rec.capitalized_fraction

    compute, _ = _sorted_present(op.compute)
    for offset, (pos, rec) in enumerate(list(enumerate(compute[:8]))[-4:]):
        if rec.missing:
            mask[56 + offset] = True
            mask[60 + offset] = True
            mask[64 + offset] = True
        else:
            raw[56 + offset] = np.log1p(rec.gpu_spend)
            raw[60 + offset] = np.log1p(rec.server_spend)
            raw[64 + offset] = np.log1p(rec.cloud_contract_value)
    return raw, mask


def fit_panel_stats(
    records: Iterable[OperationalRecords], layout_version: str = LAYOUT_V1
) -> PanelStats:
    """Per-slot mean/std over a panel, ignoring missing-imputed slots."""
    if layout_version != LAYOUT_V1:
        raise GroundingError(
            f"unknown layout version {layout_version!r}", code="LAYOUT_MISMATCH"
        )
    rows = []
    masks = []
    for op in records:
        raw, mask = raw_operational_vector(op)
        rows.append(raw)
        masks.append(~mask)
    if not rows:
        raise GroundingError("cannot fit panel stats on an empty panel", code="STATS_MISSING")
    data = np.stack(rows)
    present = np.stack(masks)
    n_obs = present.sum(axis=0).astype(np.float64)
    safe_n = np.maximum(n_obs, 1.0)
    mean = np.where(n_obs > 0, (data * present).sum(axis=0) / safe_n, 0.0)
    var = np.where(
        n_obs > 0,
        (((data - mean) ** 2) * present).sum(axis=0) / safe_n,
        0.0,
    )
    return PanelStats(layout_version, mean, np.sqrt(var), n_obs)


def build_operational_vector(
    op: OperationalRecords, stats: PanelStats | None
) -> OperationalVector:
    """Final model-ready vector: z-scored magnitudes, panel-mean imputation.

    Raises STATS_MISSING when no panel statistics are supplied and
    LAYOUT_MISMATCH when the stats were fitted for a different layout.
    """
    if stats is None:
        raise GroundingError(
            "panel statistics required to build operational vectors",
            code="STATS_MISSING",
        )
    if stats.layout_version != LAYOUT_V1:
        raise GroundingError(
            f"panel stats layout {stats.layout_version!r} != {LAYOUT_V1!r}",
            code="LAYOUT_MISMATCH",
        )
    raw, mask = raw_operational_vector(op)
    std = np.maximum(stats.std, 1e-6)
    values = raw.copy()
    mag = _MAGNITUDE
    values[mag] = (raw[mag] - stats.mean[mag]) / std[mag]
    values[mag & mask] = 0.0
    plain_missing = (~mag) & mask
    values[plain_missing] = stats.mean[plain_missing]
    return OperationalVector(values, LAYOUT_V1)


@dataclass
class GroundingNet:
    """Two-layer ReLU MLP 68 -> 128 -> 256, then a sigmoid head to (0,1)."""

    w1: np.ndarray
    b1: np.ndarray
    w2: np.ndarray
    b2: np.ndarray
    out_w: np.ndarray
    out_b: float
    layout_version: str = LAYOUT_V1

    def features(self, vec: np.ndarray) -> np.ndarray:
        h1 = np.maximum(self.w1 @ vec + self.b1, 0.0)
        return np.maximum(self.w2 @ h1 + self.b2, 0.0)

    def forward(self, vec: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
        """(pre-activation 1, pre-activation 2, tgi); used by training."""
        a1 = self.w1 @ vec + self.b1
        h1 = np.maximum(a1, 0.0)
        a2 = self.w2 @ h1 + self.b2
        h2 = np.maximum(a2, 0.0)
        tgi = float(sigmoid(self.out_w @ h2 + self.out_b))
        return a1, a2, tgi


def compute_tgi(vec: OperationalVector, net: GroundingNet) -> float:
    """Technology grounding index in (0,1) for one operational vector."""
    if vec.layout_version != net.layout_version:
        raise GroundingError(
            f"vector layout {vec.layout_version!r} != net layout {net.layout_version!r}",
            code="LAYOUT_MISMATCH",
        )
    return net.forward(vec.values)[2]


def bundle_operational_vector(
    bundle: FirmQuarterBundle, stats: PanelStats | None
) -> OperationalVector:
    return build_operational_vector(bundle.operational, stats)
