"""Domain types for firm-quarter disclosure bundles, plus bundle validation.

All value objects are frozen dataclasses holding plain tuples so bundles can
be hashed, compared, and serialized deterministically.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import Violation

MODALITIES = ("image", "video")
ENTAILMENT_LABELS = ("entail", "neutral", "contradict")
MOTIVATION_CATEGORY_COUNT = 5
TRAILING_QUARTERS = 8

_QUARTER_RE = re.compile(r"^(\d{4})Q([1-4])$")


def parse_quarter(quarter: str) -> tuple[int, int]:
    """Split ``YYYYQn`` into (year, quarter-number). Raises ValueError."""
    m = _QUARTER_RE.match(quarter)
    if not m:
        raise ValueError(f"malformed quarter {quarter!r}, expected YYYYQ[1-4]")
    return int(m.group(1)), int(m.group(2))


def is_quarter(quarter: object) -> bool:
    return isinstance(quarter, str) and bool(_QUARTER_RE.match(quarter))


def format_quarter(year: int, qn: int) -> str:
    if not 1 <= qn <= 4:
        raise ValueError(f"quarter number out of range: {qn}")
    return f"{year:04d}Q{qn}"


def shift_quarter(quarter: str, delta: int) -> str:
    """Quarter arithmetic: shift by ``delta`` quarters (negative = back)."""
    year, qn = parse_quarter(quarter)
    idx = year * 4 + (qn - 1) + delta
    return format_quarter(idx // 4, idx % 4 + 1)


def trailing_quarters(quarter: str, n: int = TRAILING_QUARTERS) -> tuple[str, ...]:
    """The ``n`` quarters ending at ``quarter`` inclusive, oldest first."""
    return tuple(shift_quarter(quarter, d) for d in range(-(n - 1), 1))


@dataclass(frozen=True)
class TextDoc:
    doc_id: str
    body: str


@dataclass(frozen=True)
class EvidenceItem:
    """One non-text disclosure artifact (image or video segment).

    ``surface_text`` carries OCR/ASR text; ``feature_payload`` carries an
    optional pre-extracted feature vector. At least one must be present.
    ``timestamp`` is a segment offset in seconds, video only.
    """

    evidence_id: str
    modality: str
    surface_text: str = ""
    feature_payload: tuple[float, ...] | None = None
    timestamp: float | None = None


@dataclass(frozen=True)
class Claim:
    """A capability claim extracted from one text doc.

    ``span`` is a half-open token index pair into the tokenized doc.
    """

    claim_id: str
    doc_id: str
    span: tuple[int, int]
    text: str
    confidence: float
    intensity: float

    def __post_init__(self):
        s, e = self.span
        if not s < e:
            raise ValueError(f"claim span must satisfy start < end, got {self.span}")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"claim confidence out of [0,1]: {self.confidence}")
        if not 0.0 <= self.intensity <= 1.0:
            raise ValueError(f"claim intensity out of [0,1]: {self.intensity}")


@dataclass(frozen=True)
class GoldLabels:
    """Supervision attached to a bundle.

    y: binary washing flag; s: continuous severity in [0,100];
    m: optional motivation category in 1..5;
    nli_pairs: optional (claim_text, evidence_id, label) gold triples.
    """

    y: int
    s: float
    m: int | None = None
    nli_pairs: tuple[tuple[str, str, str], ...] | None = None


@dataclass(frozen=True)
class PatentQuarter:
    quarter: str
    ai_count: int = 0
    total_count: int = 0
    forward_citations: tuple[int, ...] = ()
    granted_count: int = 0
    missing: bool = False


@dataclass(frozen=True)
class JobsQuarter:
    quarter: str
    volume: int = 0
    skill_tags: tuple[str, ...] = ()
    seniority_counts: tuple[int, int, int] = (0, 0, 0)  # junior, mid, senior
    skill_alignment: float = 0.0
    missing: bool = False


@dataclass(frozen=True)
class RndQuarter:
    quarter: str
    amount: float = 0.0
    revenue: float = 0.0
    capitalized_fraction: float = 0.0
    missing: bool = False


@dataclass(frozen=True)
class ComputeQuarter:
    quarter: str
    gpu_spend: float = 0.0
    server_spend: float = 0.0
    cloud_contract_value: float = 0.0
    missing: bool = False


@dataclass(frozen=True)
class OperationalRecords:
    """Per-quarter operational activity over the 8 trailing quarters."""

    patents: tuple[PatentQuarter, ...] = ()
    jobs: tuple[JobsQuarter, ...] = ()
    rnd: tuple[RndQuarter, ...] = ()
    compute: tuple[ComputeQuarter, ...] = ()


def empty_operational(quarter: str) -> OperationalRecords:
    """Explicit all-missing records covering the trailing window of ``quarter``."""
    window = trailing_quarters(quarter)
    return OperationalRecords(
        patents=tuple(PatentQuarter(q, missing=True) for q in window),
        jobs=tuple(JobsQuarter(q, missing=True) for q in window),
        rnd=tuple(RndQuarter(q, missing=True) for q in window),
        compute=tuple(ComputeQuarter(q, missing=True) for q in window),
    )


@dataclass(frozen=True)
class SignalVector:
    """The four fused risk signals, each in [0,1].

    cci: weighted contradiction; ess: weighted support; cii: claim intensity;
    tgi: operational grounding. Fusion consumes (cci, 1-ess, cii, 1-tgi).
    """

    cci: float
    ess: float
    cii: float
    tgi: float

    def fusion_input(self) -> tuple[float, float, float, float]:
        return (self.cci, 1.0 - self.ess, self.cii, 1.0 - self.tgi)


@dataclass(frozen=True)
class FirmQuarterBundle:
    firm_id: str
    quarter: str
    sector: str
    texts: tuple[TextDoc, ...] = ()
    evidence_items: tuple[EvidenceItem, ...] = ()
    operational: OperationalRecords = field(default_factory=OperationalRecords)
    labels: GoldLabels | None = None


def _check_op_group(
    name: str,
    records,
    expected: tuple[str, ...],
    out: list[Violation],
) -> None:
    seen = []
    for i, rec in enumerate(records):
        path = f"operational.{name}[{i}]"
        if not is_quarter(rec.quarter):
            out.append(Violation("QUARTER_MALFORMED", path, f"bad quarter {rec.quarter!r}"))
        else:
            seen.append(rec.quarter)
    if sorted(seen) != sorted(expected) or len(records) != len(expected):
        out.append(
            Violation(
                "QUARTER_COVERAGE",
                f"operational.{name}",
                f"expected exactly the {len(expected)} trailing quarters "
                f"{expected[0]}..{expected[-1]}",
            )
        )


def validate_bundle(bundle: FirmQuarterBundle) -> list[Violation]:
    """Check every domain invariant; returns [] for a valid bundle.

    Violations carry stable codes (QUARTER_MALFORMED, PATENT_RATIO, ...) and
    a dotted path to the offending field.
    """
    out: list[Violation] = []
    if not bundle.firm_id:
        out.append(Violation("FIRM_ID_EMPTY", "firm_id", "firm_id must be non-empty"))
    if not is_quarter(bundle.quarter):
        out.append(
            Violation("QUARTER_MALFORMED", "quarter", f"bad quarter {bundle.quarter!r}")
        )

    doc_ids = [t.doc_id for t in bundle.texts]
    for dup in sorted({d for d in doc_ids if doc_ids.count(d) > 1}):
        out.append(Violation("DOC_ID_DUPLICATE", "texts", f"duplicate doc_id {dup!r}"))

    ev_ids = [e.evidence_id for e in bundle.evidence_items]
    for dup in sorted({e for e in ev_ids if ev_ids.count(e) > 1}):
        out.append(
            Violation("EVIDENCE_ID_DUPLICATE", "evidence_items", f"duplicate id {dup!r}")
        )
    for i, item in enumerate(bundle.evidence_items):
        path = f"evidence_items[{i}]"
        if item.modality not in MODALITIES:
            out.append(
                Violation("EVIDENCE_MODALITY", path, f"unknown modality {item.modality!r}")
            )
        if not item.surface_text and item.feature_payload is None:
            out.append(
                Violation(
                    "EVIDENCE_EMPTY",
                    path,
                    "need surface_text or feature_payload",
                )
            )
        if item.timestamp is not None:
            if item.modality != "video":
                out.append(
                    Violation("EVIDENCE_TIMESTAMP", path, "timestamp is video-only")
                )
            elif item.timestamp < 0:
                out.append(
                    Violation("EVIDENCE_TIMESTAMP", path, "timestamp must be >= 0")
                )

    if is_quarter(bundle.quarter):
        expected = trailing_quarters(bundle.quarter)
        op = bundle.operational
        _check_op_group("patents", op.patents, expected, out)
        _check_op_group("jobs", op.jobs, expected, out)
        _check_op_group("rnd", op.rnd, expected, out)
        _check_op_group("compute", op.compute, expected, out)

    op = bundle.operational
    for i, p in enumerate(op.patents):
        path = f"operational.patents[{i}]"
        if p.ai_count < 0 or p.total_count < 0 or p.granted_count < 0:
            out.append(Violation("NEGATIVE_VALUE", path, "counts must be >= 0"))
        if any(c < 0 for c in p.forward_citations):
            out.append(Violation("NEGATIVE_VALUE", path, "citations must be >= 0"))
        if p.ai_count > p.total_count:
            out.append(
                Violation("PATENT_RATIO", path, "ai_count must not exceed total_count")
            )
    for i, j in enumerate(op.jobs):
        path = f"operational.jobs[{i}]"
        if j.volume < 0 or any(c < 0 for c in j.seniority_counts):
            out.append(Violation("NEGATIVE_VALUE", path, "counts must be >= 0"))
        if not 0.0 <= j.skill_alignment <= 1.0:
            out.append(
                Violation("ALIGNMENT_RANGE", path, "skill_alignment must be in [0,1]")
            )
    for i, r in enumerate(op.rnd):
        path = f"operational.rnd[{i}]"
        if r.amount < 0 or r.revenue < 0:
            out.append(Violation("NEGATIVE_VALUE", path, "amounts must be >= 0"))
        if not 0.0 <= r.capitalized_fraction <= 1.0:
            out.append(
                Violation("CAPFRAC_RANGE", path, "capitalized_fraction must be in [0,1]")
            )
    for i, c in enumerate(op.compute):
        path = f"operational.compute[{i}]"
        if c.gpu_spend < 0 or c.server_spend < 0 or c.cloud_contract_value < 0:
            out.append(Violation("NEGATIVE_VALUE", path, "spends must be >= 0"))

    labels = bundle.labels
    if labels is not None:
        if labels.y not in (0, 1):
            out.append(Violation("LABEL_Y_INVALID", "labels.y", "y must be 0 or 1"))
        if not 0.0 <= labels.s <= 100.0:
            out.append(
                Violation("LABEL_SCORE_RANGE", "labels.s", "s must be in [0,100]")
            )
        if labels.m is not None and not 1 <= labels.m <= MOTIVATION_CATEGORY_COUNT:
            out.append(
                Violation(
                    "LABEL_MOTIVATION_RANGE",
                    "labels.m",
                    f"m must be in 1..{MOTIVATION_CATEGORY_COUNT}",
                )
            )
        known_ev = set(ev_ids)
        for i, (_, evidence_id, label) in enumerate(labels.nli_pairs or ()):
            path = f"labels.nli_pairs[{i}]"
            if label not in ENTAILMENT_LABELS:
                out.append(Violation("NLI_LABEL_INVALID", path, f"bad label {label!r}"))
            if evidence_id not in known_ev:
                out.append(
                    Violation(
                        "NLI_EVIDENCE_UNKNOWN", path, f"unknown evidence {evidence_id!r}"
                    )
                )
    return out
