"""Reviewable evidence reports: everything an analyst needs to accept or
overturn a score, in one serializable record.

Claims are ordered by their contribution to the contradiction index so the
most damaging claim-evidence pairing is on top; claims with no retrieved
evidence sink to the bottom. Shapley attributions are included and, by
construction, sum to the score's distance from the neutral 50 baseline.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .attribution import Attribution, shapley_values
from .core import FirmQuarterBundle, SignalVector
from .errors import ReportError
from .fusion import CmidModel
from .grounding import PanelStats, build_operational_vector, magnitude_mask
from .pipeline import Prediction, predict
from .reasoner import compute_indices

REPORT_FORMAT = "aiwash.report.v1"

_GROUP_SLOTS = {
    "patents": (0, 8),
    "talent": (24, 32),
    "rnd": (44, 48),
    "compute": (56, 68),
}


@dataclass(frozen=True)
class PairDetail:
    evidence_id: str
    modality: str
    similarity: float
    p_entail: float
    p_neutral: float
    p_contradict: float
    label: str
    decisive: bool
    timestamp: float | None
    surface_text: str


@dataclass(frozen=True)
class ClaimDetail:
    claim_id: str
    text: str
    confidence: float
    intensity: float
    weight: float
    contradiction: float
    support: float
    cci_share: float  # fraction of the contradiction index this claim carries
    pairs: tuple[PairDetail, ...]


@dataclass(frozen=True)
class OperationalNote:
    group: str
    mean_z: float
    direction: str  # above | below | near

    def sentence(self) -> str:
        if self.direction == "near":
            return f"{self.group}: in line with the panel norm"
        return f"{self.group}: {abs(self.mean_z):.1f} sd {self.direction} the panel norm"


@dataclass(frozen=True)
class EvidenceReport:
    firm_id: str
    quarter: str
    sector: str
    model_version: str
    ablation: str
    awrs: float
    p_wash: float
    threshold: float
    flagged: bool
    signals: SignalVector
    gate: tuple[float, float, float, float]
    motivation_probs: tuple[float, ...]
    claims: tuple[ClaimDetail, ...]
    operational_notes: tuple[OperationalNote, ...]
    attribution: Attribution

    def to_record(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "firm_id": self.firm_id,
            "quarter": self.quarter,
            "sector": self.sector,
            "model_version": self.model_version,
            "ablation": self.ablation,
            "awrs": self.awrs,
            "p_wash": self.p_wash,
            "threshold": self.threshold,
            "flagged": self.flagged,
            "signals": {
                "cci": self.signals.cci,
                "ess": self.signals.ess,
                "cii": self.signals.cii,
                "tgi": self.signals.tgi,
            },
            "gate": list(self.gate),
            "motivation_probs": list(self.motivation_probs),
            "claims": [
                {
                    "claim_id": c.claim_id,
                    "text": c.text,
                    "confidence": c.confidence,
                    "intensity": c.intensity,
                    "weight": c.weight,
                    "contradiction": c.contradiction,
                    "support": c.support,
                    "cci_share": c.cci_share,
                    "pairs": [
                        {
                            "evidence_id": p.evidence_id,
                            "modality": p.modality,
                            "similarity": p.similarity,
                            "p_entail": p.p_entail,
                            "p_neutral": p.p_neutral,
                            "p_contradict": p.p_contradict,
                            "label": p.label,
                            "decisive": p.decisive,
                            "timestamp": p.timestamp,
                            "surface_text": p.surface_text,
                        }
                        for p in c.pairs
                    ],
                }
                for c in self.claims
            ],
            "operational_notes": [
                {"group": n.group, "mean_z": n.mean_z, "direction": n.direction}
                for n in self.operational_notes
            ],
            "attribution": self.attribution.as_record(),
        }


def report_from_record(record: dict) -> EvidenceReport:
    if record.get("format") != REPORT_FORMAT:
        raise ReportError(
            f"unsupported report format {record.get('format')!r}", code="VERSION_MISMATCH"
        )
    sig = record["signals"]
    att = record["attribution"]
    shap = att["shapley"]
    return EvidenceReport(
        firm_id=record["firm_id"],
        quarter=record["quarter"],
        sector=record["sector"],
        model_version=record["model_version"],
        ablation=record.get("ablation", "full"),
        awrs=float(record["awrs"]),
        p_wash=float(record["p_wash"]),
        threshold=float(record["threshold"]),
        flagged=bool(record["flagged"]),
        signals=SignalVector(cci=sig["cci"], ess=sig["ess"], cii=sig["cii"], tgi=sig["tgi"]),
        gate=tuple(record["gate"]),
        motivation_probs=tuple(record["motivation_probs"]),
        claims=tuple(
            ClaimDetail(
                claim_id=c["claim_id"],
                text=c["text"],
                confidence=c["confidence"],
                intensity=c["intensity"],
                weight=c["weight"],
                contradiction=c["contradiction"],
                support=c["support"],
                cci_share=c["cci_share"],
                pairs=tuple(
                    PairDetail(
                        evidence_id=p["evidence_id"],
                        modality=p["modality"],
                        similarity=p["similarity"],
                        p_entail=p["p_entail"],
                        p_neutral=p["p_neutral"],
                        p_contradict=p["p_contradict"],
                        label=p["label"],
                        decisive=p["decisive"],
                        timestamp=p.get("timestamp"),
                        surface_text=p.get("surface_text", ""),
                    )
                    for p in c["pairs"]
                ),
            )
            for c in record["claims"]
        ),
        operational_notes=tuple(
            OperationalNote(group=n["group"], mean_z=n["mean_z"], direction=n["direction"])
            for n in record["operational_notes"]
        ),
        attribution=Attribution(
            awrs=float(att["awrs"]),
            baseline=float(att["baseline"]),
            shapley=(
                shap["contradiction"],
                shap["support_deficit"],
                shap["intensity"],
                shap["grounding_deficit"],
            ),
            interactions=tuple(tuple(row) for row in att["interactions"]),
        ),
    )


def operational_deviations(
    bundle: FirmQuarterBundle, stats: PanelStats | None
) -> tuple[OperationalNote, ...]:
    """Mean z-deviation per operational group against the fitted panel."""
    if stats is None:
        return ()
    vec = build_operational_vector(bundle.operational, stats)
    values = vec.values
    std = np.where(stats.std < 1e-6, 1e-6, stats.std)
    z_all = np.zeros_like(values)
    mag = magnitude_mask()
    # Magnitude slots are already z-scored at build time; others are scored here.
    z_all[mag] = values[mag]
    z_all[~mag] = (values[~mag] - stats.mean[~mag]) / std[~mag]
    notes = []
    for group, (lo, hi) in _GROUP_SLOTS.items():
        mean_z = float(np.mean(z_all[lo:hi]))
        if mean_z > 0.25:
            direction = "above"
        elif mean_z < -0.25:
            direction = "below"
        else:
            direction = "near"
        notes.append(OperationalNote(group=group, mean_z=mean_z, direction=direction))
    return tuple(notes)


def build_report(
    bundle: FirmQuarterBundle,
    model: CmidModel,
    ablation: str = "full",
    provider=None,
) -> EvidenceReport:
    """Score a bundle and assemble the full review record."""
    prediction = predict(bundle, model, ablation=ablation, provider=provider)
    return report_from_prediction(prediction, bundle, model)


def report_from_prediction(
    prediction: Prediction, bundle: FirmQuarterBundle, model: CmidModel
) -> EvidenceReport:
    ev_by_id = {e.evidence_id: e for e in bundle.evidence_items}
    decisive = model.config.decisive_threshold

    pairs_by_claim: dict[str, list] = {}
    for pair in prediction.pairs:
        pairs_by_claim.setdefault(pair.claim_id, []).append(pair)

    _, _, _, rows = compute_indices(
        list(prediction.claims), list(prediction.pairs), decisive
    )
    breakdown = {b.claim_id: b for b in rows}
    weight_mass = sum(b.weight for b in rows if b.has_pairs)
    cci = prediction.signals.cci
    details = []
    for claim in prediction.claims:
        row = breakdown[claim.claim_id]
        claim_pairs = []
        for pair in pairs_by_claim.get(claim.claim_id, []):
            item = ev_by_id[pair.evidence_id]
            claim_pairs.append(
                PairDetail(
                    evidence_id=pair.evidence_id,
                    modality=item.modality,
                    similarity=pair.similarity,
                    p_entail=pair.p_entail,
                    p_neutral=pair.p_neutral,
                    p_contradict=pair.p_contradict,
                    label=pair.label,
                    decisive=pair.p_contradict >= decisive,
                    timestamp=item.timestamp,
                    surface_text=item.surface_text,
                )
            )
        claim_pairs.sort(key=lambda p: (-p.p_contradict, p.evidence_id))
        contribution = 0.0
        if row.has_pairs and cci > 0 and weight_mass > 0:
            contribution = (row.weight * row.contradiction / weight_mass) / cci
        details.append(
            ClaimDetail(
                claim_id=claim.claim_id,
                text=claim.text,
                confidence=claim.confidence,
                intensity=claim.intensity,
                weight=row.weight,
                contradiction=row.contradiction,
                support=row.support,
                cci_share=contribution,
                pairs=tuple(claim_pairs),
            )
        )
    details.sort(
        key=lambda c: (
            0 if c.pairs else 1,
            -(c.weight * c.contradiction),
            c.claim_id,
        )
    )

    attribution = shapley_values(prediction.signals, np.asarray(prediction.gate))
    return EvidenceReport(
        firm_id=prediction.firm_id,
        quarter=prediction.quarter,
        sector=prediction.sector,
        model_version=prediction.model_version,
        ablation=prediction.ablation,
        awrs=prediction.awrs,
        p_wash=prediction.p_wash,
        threshold=prediction.threshold,
        flagged=bool(prediction.y_hat),
        signals=prediction.signals,
        gate=tuple(float(g) for g in prediction.gate),
        motivation_probs=tuple(float(p) for p in prediction.motivation_probs),
        claims=tuple(details),
        operational_notes=(
            operational_deviations(bundle, model.panel_stats)
            if prediction.ablation == "full"
            else ()
        ),
        attribution=attribution,
    )


def render_text(report: EvidenceReport) -> str:
    """Plain-text rendering for terminal review."""
    lines = [
        f"{report.firm_id} {report.quarter} [{report.sector}]  "
        f"score {report.awrs:.1f}  threshold {report.threshold:.1f}  "
        f"{'FLAGGED' if report.flagged else 'clear'}",
        f"model {report.model_version} ({report.ablation})",
        (
            f"signals: contradiction {report.signals.cci:.3f}  "
            f"support {report.signals.ess:.3f}  intensity {report.signals.cii:.3f}  "
            f"grounding {report.signals.tgi:.3f}"
        ),
    ]
    shap = report.attribution.shapley
    lines.append(
        "attribution: "
        + "  ".join(
            f"{name} {value:+.2f}"
            for name, value in zip(
                ("contradiction", "support-deficit", "intensity", "grounding-deficit"), shap
            )
        )
    )
    for note in report.operational_notes:
        lines.append("ops: " + note.sentence())
    for claim in report.claims:
        lines.append(f'claim {claim.claim_id} (intensity {claim.intensity:.2f}): "{claim.text}"')
        for pair in claim.pairs:
            stamp = f" @{pair.timestamp:.1f}s" if pair.timestamp is not None else ""
            marker = " DECISIVE" if pair.decisive else ""
            lines.append(
                f"  vs {pair.evidence_id} ({pair.modality}{stamp}): "
                f"{pair.label} e={pair.p_entail:.3f} n={pair.p_neutral:.3f} "
                f"c={pair.p_contradict:.3f}{marker}"
            )
        if not claim.pairs:
            lines.append("  (no evidence retrieved)")
    return "\n".join(lines)
