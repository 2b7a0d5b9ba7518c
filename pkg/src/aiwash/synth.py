"""Synthetic disclosure corpora with known washing labels, plus the
perturbation harness used for robustness evaluation.

Firms are generated independently from a per-firm seeded generator, so a
corpus is byte-identical for a given configuration and any firm can be
regenerated without the rest. Washing firms follow one of five motivation
signatures that couple disclosure style, evidence mix, and operational
depth; severity drives operational depth continuously so rank correlation
against the score is meaningful.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    ComputeQuarter,
    EvidenceItem,
    FirmQuarterBundle,
    GoldLabels,
    JobsQuarter,
    OperationalRecords,
    PatentQuarter,
    RndQuarter,
    TextDoc,
    shift_quarter,
    trailing_quarters,
)

GENERATOR_VERSION = "aiwash.synth.v1"

PERTURBATION_KINDS = ("decoy_diagrams", "dummy_patents", "fake_postings")

SECTORS = ("manufacturing", "software", "finance", "healthcare", "retail", "energy")

# Motivation categories 1..5 with target shares among washing firms.
_MOTIVATION_SHARES = {1: 0.25, 2: 0.20, 3: 0.20, 4: 0.15, 5: 0.20}

_AI_TERMS = ("ai", "machine learning", "computer vision", "predictive analytics", "deep learning")

_DOMAINS = (
    "maintenance scheduling",
    "defect inspection",
    "demand forecasting",
    "fraud screening",
    "document routing",
    "route planning",
    "supplier scoring",
    "energy balancing",
    "customer triage",
    "inventory planning",
)

_OBJECTS = (
    "production lines",
    "assembly plants",
    "regional warehouses",
    "payment channels",
    "branch offices",
    "delivery fleets",
    "supplier audits",
    "data centers",
    "service desks",
    "fabrication sites",
)

# Claim sentences by cue tier. Tier counts the cue categories present:
# deployment verb, universal quantifier, numeric precision.
_TIER0 = (
    "We continue to evaluate {topic} opportunities for our {obj}.",
    "The group is studying {topic} approaches relevant to {obj}.",
    "Management reviewed potential {topic} initiatives with {obj} teams.",
)
_TIER1 = (
    "Our {topic} platform is operating at selected {obj}.",
    "The {topic} program has launched for certain {obj}.",
    "A {topic} service is in production at pilot {obj}.",
)
_TIER2 = (
    "Our {topic} system is fully deployed across all {obj}.",
    "The {topic} engine is operational at every one of our {obj}.",
    "We have completely rolled out {topic} across the entire network of {obj}.",
)
_TIER3 = (
    "Our {topic} system is fully deployed across all {num} {obj}, achieving {pct} accuracy every quarter.",
    "The {topic} engine is operational at every one of our {num} {obj} with {pct} coverage.",
    "We have completely rolled out {topic} to all {num} {obj}, cutting costs by {pct} already.",
)
_TIERS = (_TIER0, _TIER1, _TIER2, _TIER3)

_ENTAIL_EVIDENCE = (
    "Operations log: {topic} system operating in production at {obj}; throughput verified by site engineers.",
    "Inspection record: verified {topic} output running daily across {obj}, logged by plant supervisors.",
)
_CONTRADICT_EVIDENCE = (
    "Internal audit: {topic} remains a manual prototype at {obj}; the pilot has not moved past testing.",
    "Site review: {obj} still rely on manual workflows; the {topic} prototype is limited to one pilot cell.",
)
_NEUTRAL_EVIDENCE = (
    "Corporate brochure: an overview of {topic} ambitions and the market outlook for {obj}.",
    "Investor day slide: industry outlook and a high-level overview of {topic} concepts for {obj}.",
)

_DECOY_TEXT = "Roadmap graphic: verified deployment roadmap covering {snippet}, as operating targets."

_PAYLOAD_DIM = 32


@dataclass(frozen=True)
class SyntheticConfig:
    n_firms: int = 60
    n_quarters: int = 4
    base_quarter: str = "2023Q1"  # first scored quarter; later ones follow
    washing_rate: float = 0.124
    seed: int = 7
    sectors: tuple[str, ...] = SECTORS


@dataclass(frozen=True)
class FirmPlan:
    firm_id: str
    sector: str
    washing: bool
    motivation: int | None  # 1..5 for washers
    clean_kind: str | None  # quiet | legit_loud | quiet_noev
    base_severity: float


def _largest_remainder(total: int, shares: list[float]) -> list[int]:
    """Integer apportionment of ``total`` by shares, remainders first."""
    raw = [total * s for s in shares]
    counts = [int(r) for r in raw]
    short = total - sum(counts)
    order = sorted(range(len(shares)), key=lambda i: (-(raw[i] - counts[i]), i))
    for i in order[:short]:
        counts[i] += 1
    return counts


def plan_firms(config: SyntheticConfig) -> list[FirmPlan]:
    """Assign sector, washing flag, motivation, and base severity per firm.

    The washing count is exact (round(rate * n)) and apportioned across
    sectors proportionally so no sector becomes a label shortcut.
    """
    n = config.n_firms
    sectors = config.sectors
    sector_of = [sectors[i % len(sectors)] for i in range(n)]
    per_sector: dict[str, list[int]] = {s: [] for s in sectors}
    for i in range(n):
        per_sector[sector_of[i]].append(i)

    n_wash = int(round(config.washing_rate * n))
    sector_counts = _largest_remainder(
        n_wash, [len(per_sector[s]) / n for s in sectors]
    )
    rng = np.random.default_rng((config.seed, 0xF0))
    washers: set[int] = set()
    for sector, count in zip(sectors, sector_counts):
        members = per_sector[sector]
        picked = rng.permutation(len(members))[:count]
        washers.update(members[j] for j in picked)

    washer_list = sorted(washers)
    mot_counts = _largest_remainder(
        len(washer_list), [_MOTIVATION_SHARES[m] for m in sorted(_MOTIVATION_SHARES)]
    )
    motivations: list[int] = []
    for m, count in zip(sorted(_MOTIVATION_SHARES), mot_counts):
        motivations.extend([m] * count)
    mot_order = rng.permutation(len(washer_list))
    motivation_of = {washer_list[i]: motivations[mot_order[i]] for i in range(len(washer_list))}

    plans = []
    for i in range(n):
        frng = np.random.default_rng((config.seed, 0xF1, i))
        firm_id = f"F{i:04d}"
        if i in washers:
            m = motivation_of[i]
            lo, hi = {1: (75, 95), 2: (65, 90), 3: (60, 85), 4: (55, 75), 5: (60, 88)}[m]
            plans.append(
                FirmPlan(
                    firm_id=firm_id,
                    sector=sector_of[i],
                    washing=True,
                    motivation=m,
                    clean_kind=None,
                    base_severity=float(frng.uniform(lo, hi)),
                )
            )
        else:
            kind = ("quiet", "legit_loud", "quiet_noev")[
                int(frng.choice(3, p=[0.55, 0.20, 0.25]))
            ]
            # Severity bands line up with each subtype's structural score
            # offset (no-evidence firms sit highest), so severity stays
            # rank-consistent with the fused score inside the clean class.
            lo, hi = {"quiet": (5, 25), "legit_loud": (15, 38), "quiet_noev": (20, 40)}[kind]
            plans.append(
                FirmPlan(
                    firm_id=firm_id,
                    sector=sector_of[i],
                    washing=False,
                    motivation=None,
                    clean_kind=kind,
                    base_severity=float(frng.uniform(lo, hi)),
                )
            )
    return plans


def _topic(rng: np.random.Generator) -> tuple[str, str]:
    term = _AI_TERMS[int(rng.integers(len(_AI_TERMS)))]
    domain = _DOMAINS[int(rng.integers(len(_DOMAINS)))]
    obj = _OBJECTS[int(rng.integers(len(_OBJECTS)))]
    return f"{term} {domain}", obj


def _sentence(tier: int, topic: str, obj: str, rng: np.random.Generator) -> str:
    template = _TIERS[tier][int(rng.integers(len(_TIERS[tier])))]
    num = int(rng.integers(8, 40))
    pct = f"{rng.uniform(85.0, 99.9):.1f}%"
    return template.format(topic=topic, obj=obj, num=num, pct=pct)


def _doc_tiers(plan: FirmPlan, severity: float) -> tuple[int, ...]:
    """Cue-tier profile of the three documents, graded by severity.

    The reputation signature (motivation 4) and its clean mirror
    (quiet_noev) keep a fixed mild profile so text alone cannot separate
    them; everything else gets louder as severity rises.
    """
    if plan.washing:
        if plan.motivation == 4:
            return (1, 1, 0)
        base = {
            1: (3, 3, 2),
            2: (2, 3, 1),
            3: (3, 2, 2),
            5: (3, 2, 3),
        }[plan.motivation]
        if severity >= 85.0:
            return tuple(min(t + 1, 3) for t in base)
        if severity < 65.0:
            return tuple(max(t - 1, 1) for t in base)
        return base
    if plan.clean_kind == "legit_loud":
        return (2, 3, 2)
    if plan.clean_kind == "quiet_noev":
        return (1, 1, 0)
    if severity < 12.0:
        return (0, 0, 0)
    if severity < 18.0:
        return (0, 0, 1)
    return (0, 1, 1)


def _evidence_plan(plan: FirmPlan) -> tuple[str, ...]:
    """Entailment class of each evidence item, in id order ('' = none)."""
    if plan.washing:
        return {
            1: (),
            2: ("contradict", "contradict", "neutral"),
            3: ("contradict", "neutral"),
            4: (),
            5: ("entail", "contradict", "neutral"),
        }[plan.motivation]
    return {
        "quiet": ("entail", "neutral"),
        "legit_loud": ("entail", "entail", "neutral"),
        "quiet_noev": (),
    }[plan.clean_kind]


_EVIDENCE_TEMPLATES = {
    "entail": _ENTAIL_EVIDENCE,
    "contradict": _CONTRADICT_EVIDENCE,
    "neutral": _NEUTRAL_EVIDENCE,
}


def _ops_series(
    plan: FirmPlan, quarters: tuple[str, ...], rng: np.random.Generator
) -> dict[str, dict]:
    """Per-quarter operational values for every quarter a window can touch."""
    base_level = float(np.clip(1.0 - plan.base_severity / 100.0 + rng.normal(0.0, 0.03), 0.02, 1.0))
    revenue = float(np.exp(rng.uniform(16.0, 19.5)))  # ~9e6 .. 3e8
    series: dict[str, dict] = {}
    for q in quarters:
        level = float(np.clip(base_level + rng.normal(0.0, 0.03), 0.01, 1.0))
        ai = int(round(12.0 * level * rng.uniform(0.8, 1.2)))
        total = ai + 3 + int(rng.integers(0, 6))
        citations = tuple(
            int(rng.poisson(2.5 * level)) for _ in range(min(ai, 6))
        )
        granted = min(ai, int(round(ai * (0.25 + 0.55 * level))))
        volume = int(round(30.0 * level * rng.uniform(0.8, 1.2)))
        n_tags = int(rng.integers(4, 9))
        tag_weights = np.asarray(
            [0.3 + 2.0 * level, 0.5, 0.2 + 0.4 * level, 0.2 + 0.4 * level, 0.5, 0.3]
        )
        tag_weights = tag_weights / tag_weights.sum()
        tag_names = ("ml", "data_eng", "nlp", "computer vision", "infra", "research")
        tags = tuple(
            tag_names[int(rng.choice(6, p=tag_weights))] for _ in range(n_tags)
        )
        sr = 0.10 + 0.40 * level
        jr = 0.50 - 0.30 * level
        junior = int(round(volume * jr))
        senior = int(round(volume * sr))
        mid = max(volume - junior - senior, 0)
        alignment = float(np.clip(0.15 + 0.75 * level + rng.normal(0.0, 0.05), 0.0, 1.0))
        amount = revenue * (0.005 + 0.06 * level) * rng.uniform(0.9, 1.1)
        capfrac = float(np.clip(0.5 - 0.4 * level + rng.normal(0.0, 0.05), 0.0, 1.0))
        series[q] = {
            "patents": (ai, total, citations, granted),
            "jobs": (volume, tags, (junior, mid, senior), alignment),
            "rnd": (amount, revenue, capfrac),
            "compute": (
                2.0e6 * level * rng.uniform(0.7, 1.3),
                1.0e6 * (0.3 + level) * rng.uniform(0.8, 1.2),
                5.0e6 * level * rng.uniform(0.5, 1.5),
            ),
        }
    return series


def _window_records(
    series: dict[str, dict], window: tuple[str, ...], rng: np.random.Generator
) -> OperationalRecords:
    missing = {g: set() for g in ("patents", "jobs", "rnd", "compute")}
    for group in missing:
        flags = rng.random(len(window)) < 0.04
        picked = [i for i, f in enumerate(flags) if f][:2]  # at most 2 gaps per group
        missing[group].update(picked)

    patents, jobs, rnd_rows, compute = [], [], [], []
    for pos, q in enumerate(window):
        row = series[q]
        if pos in missing["patents"]:
            patents.append(PatentQuarter(q, missing=True))
        else:
            ai, total, citations, granted = row["patents"]
            patents.append(
                PatentQuarter(q, ai_count=ai, total_count=total, forward_citations=citations, granted_count=granted)
            )
        if pos in missing["jobs"]:
            jobs.append(JobsQuarter(q, missing=True))
        else:
            volume, tags, seniority, alignment = row["jobs"]
            jobs.append(
                JobsQuarter(q, volume=volume, skill_tags=tags, seniority_counts=seniority, skill_alignment=alignment)
            )
        if pos in missing["rnd"]:
            rnd_rows.append(RndQuarter(q, missing=True))
        else:
            amount, revenue, capfrac = row["rnd"]
            rnd_rows.append(
                RndQuarter(q, amount=amount, revenue=revenue, capitalized_fraction=capfrac)
            )
        if pos in missing["compute"]:
            compute.append(ComputeQuarter(q, missing=True))
        else:
            gpu, server, cloud = row["compute"]
            compute.append(
                ComputeQuarter(q, gpu_spend=gpu, server_spend=server, cloud_contract_value=cloud)
            )
    return OperationalRecords(
        patents=tuple(patents), jobs=tuple(jobs), rnd=tuple(rnd_rows), compute=tuple(compute)
    )


def _firm_bundles(plan: FirmPlan, firm_idx: int, config: SyntheticConfig) -> list[FirmQuarterBundle]:
    rng = np.random.default_rng((config.seed, 0xF1, firm_idx))
    scored = tuple(shift_quarter(config.base_quarter, k) for k in range(config.n_quarters))
    needed = trailing_quarters(scored[-1], 8 + config.n_quarters - 1)
    series = _ops_series(plan, needed, rng)

    bundles = []
    for quarter in scored:
        severity = float(np.clip(plan.base_severity + rng.normal(0.0, 2.0), 0.0, 100.0))
        topic, obj = _topic(rng)

        docs = []
        tiers = _doc_tiers(plan, severity)
        for d, tier in enumerate(tiers):
            body = _sentence(tier, topic, obj, rng)
            docs.append(TextDoc(doc_id=f"{plan.firm_id}-{quarter}-doc{d}", body=body))

        items = []
        pair_labels = []
        for k, relation in enumerate(_evidence_plan(plan)):
            template_bank = _EVIDENCE_TEMPLATES[relation]
            text = template_bank[int(rng.integers(len(template_bank)))].format(topic=topic, obj=obj)
            modality = "video" if k % 2 == 1 else "image"
            timestamp = round(float(rng.uniform(3.0, 180.0)), 1) if modality == "video" else None
            payload = None
            if relation == "entail" and plan.clean_kind == "legit_loud" and k == 0:
                payload = tuple(float(v) for v in rng.normal(0.0, 0.2, _PAYLOAD_DIM))
            items.append(
                EvidenceItem(
                    evidence_id=f"{plan.firm_id}-{quarter}-ev{k:02d}",
                    modality=modality,
                    surface_text=text,
                    feature_payload=payload,
                    timestamp=timestamp,
                )
            )
            claim_doc = docs[int(rng.integers(len(docs)))]
            pair_labels.append((claim_doc.body, items[-1].evidence_id, relation))

        labels = GoldLabels(
            y=1 if plan.washing else 0,
            s=severity,
            m=plan.motivation,
            nli_pairs=tuple(pair_labels) if pair_labels else None,
        )
        bundles.append(
            FirmQuarterBundle(
                firm_id=plan.firm_id,
                quarter=quarter,
                sector=plan.sector,
                texts=tuple(docs),
                evidence_items=tuple(items),
                operational=_window_records(series, trailing_quarters(quarter), rng),
                labels=labels,
            )
        )
    return bundles


def generate_corpus(config: SyntheticConfig) -> tuple[list[FirmQuarterBundle], dict]:
    """All firm-quarter bundles plus a manifest describing the draw."""
    plans = plan_firms(config)
    bundles: list[FirmQuarterBundle] = []
    for idx, plan in enumerate(plans):
        bundles.extend(_firm_bundles(plan, idx, config))
    n_wash = sum(1 for p in plans if p.washing)
    manifest = {
        "generator": GENERATOR_VERSION,
        "seed": config.seed,
        "n_firms": config.n_firms,
        "n_quarters": config.n_quarters,
        "base_quarter": config.base_quarter,
        "n_bundles": len(bundles),
        "washing_firms": n_wash,
        "positive_rate": n_wash / config.n_firms if config.n_firms else 0.0,
        "sectors": list(config.sectors),
    }
    return bundles, manifest


def _perturb_rng(bundle: FirmQuarterBundle, kind: str) -> np.random.Generator:
    digest = hashlib.blake2b(
        f"{bundle.firm_id}:{bundle.quarter}:{kind}".encode(), digest_size=8
    ).digest()
    return np.random.default_rng(int.from_bytes(digest, "big"))


def _decoy_snippet(bundle: FirmQuarterBundle) -> str:
    words = []
    for doc in bundle.texts:
        words.extend(w for w in doc.body.lower().split() if w.isalpha())
        if len(words) >= 6:
            break
    return " ".join(words[:6]) if words else "automation initiatives"


def perturb_bundle(
    bundle: FirmQuarterBundle, kind: str, magnitude: int = 3
) -> FirmQuarterBundle:
    """A perturbed copy of the bundle; gold labels are never touched.

    decoy_diagrams: appends unrelated diagram images whose captions mimic
    supporting evidence. dummy_patents: pads each quarter with uncited,
    ungranted filings. fake_postings: pads posting volume with junior,
    off-topic listings, diluting the alignment score.
    """
    if kind not in PERTURBATION_KINDS:
        raise ValueError(f"unknown perturbation kind {kind!r}")
    if magnitude < 1:
        raise ValueError("magnitude must be >= 1")

    if kind == "decoy_diagrams":
        snippet = _decoy_snippet(bundle)
        extra = tuple(
            EvidenceItem(
                evidence_id=f"decoy-{i:03d}",
                modality="image",
                surface_text=_DECOY_TEXT.format(snippet=snippet),
            )
            for i in range(magnitude)
        )
        return replace(bundle, evidence_items=bundle.evidence_items + extra)

    if kind == "dummy_patents":
        padded = tuple(
            rec
            if rec.missing
            else replace(
                rec,
                ai_count=rec.ai_count + magnitude,
                total_count=rec.total_count + magnitude,
                forward_citations=rec.forward_citations + (0,) * magnitude,
            )
            for rec in bundle.operational.patents
        )
        return replace(bundle, operational=replace(bundle.operational, patents=padded))

    padded_jobs = []
    for rec in bundle.operational.jobs:
        if rec.missing:
            padded_jobs.append(rec)
            continue
        new_volume = rec.volume + magnitude
        jr, mid, sr = rec.seniority_counts
        diluted = rec.skill_alignment * (rec.volume / new_volume if new_volume else 0.0)
        padded_jobs.append(
            replace(
                rec,
                volume=new_volume,
                skill_tags=rec.skill_tags + ("ml",) * magnitude,
                seniority_counts=(jr + magnitude, mid, sr),
                skill_alignment=diluted,
            )
        )
    return replace(
        bundle, operational=replace(bundle.operational, jobs=tuple(padded_jobs))
    )
