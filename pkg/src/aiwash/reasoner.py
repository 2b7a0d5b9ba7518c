"""Claim-level reasoning: span extraction, cue intensity, evidence retrieval,
three-way entailment, and aggregation into the claim-side risk indices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import Claim, ENTAILMENT_LABELS
from .encoder import Embedding
from .ingest import Lexicon, TextDoc, TokenizedDoc, tokenize

DEFAULT_CLAIM_THRESHOLD = 0.5
DEFAULT_MAX_SPAN_TOKENS = 40
DEFAULT_TOP_K = 5
DEFAULT_DECISIVE_THRESHOLD = 0.6

CUE_CATEGORIES = ("deployment", "quantifier", "numeric")


def sigmoid(x):
    return 1.0 / (1.0 + np.exp(-np.asarray(x, dtype=np.float64)))


def softmax(logits: np.ndarray, axis: int = -1) -> np.ndarray:
    """Shift-stabilized softmax; safe for large-magnitude logits."""
    logits = np.asarray(logits, dtype=np.float64)
    shifted = logits - logits.max(axis=axis, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=axis, keepdims=True)


@dataclass(frozen=True)
class CueConfig:
    """Cue lexicons behind the 0/3..3/3 claim intensity score.

    Two term lexicons (deployment-state verbs, universal quantifiers) match
    like the AI lexicon; the numeric category is a list of regex patterns.
    """

    deployment: Lexicon
    quantifiers: Lexicon
    numeric_patterns: tuple[str, ...]

    @classmethod
    def default(cls) -> "CueConfig":
        base = resources.files("aiwash") / "data"
        return cls.from_files(
            base / "cue_deployment.txt",
            base / "cue_quantifiers.txt",
            base / "cue_numeric.txt",
        )

    @classmethod
    def from_files(cls, deployment, quantifiers, numeric) -> "CueConfig":
        patterns = []
        for line in Path(str(numeric)).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                patterns.append(line)
        return cls(
            deployment=Lexicon.from_file(str(deployment)),
            quantifiers=Lexicon.from_file(str(quantifiers)),
            numeric_patterns=tuple(patterns),
        )


def _has_term_hit(text: str, lexicon: Lexicon) -> bool:
    from .ingest import match_ai_terms

    doc = tokenize(TextDoc("_", text))
    return bool(match_ai_terms(doc, lexicon).hits)


def score_intensity(claim_text: str, cue_config: CueConfig | None = None) -> float:
    """Fraction of the three cue categories present in the claim text.

    Categories: deployment-state verbs, universal quantifiers, and
    numeric-precision patterns. Returns one of {0, 1/3, 2/3, 1}.
    """
    cfg = cue_config or default_cue_config()
    present = 0
    if _has_term_hit(claim_text, cfg.deployment):
        present += 1
    if _has_term_hit(claim_text, cfg.quantifiers):
        present += 1
    if any(re.search(p, claim_text) for p in cfg.numeric_patterns):
        present += 1
    return present / 3.0


_DEFAULT_CUES: CueConfig | None = None


def default_cue_config() -> CueConfig:
    global _DEFAULT_CUES
    if _DEFAULT_CUES is None:
        _DEFAULT_CUES = CueConfig.default()
    return _DEFAULT_CUES


@dataclass
class ExtractionHead:
    """Span scorer: sigmoid(start_weights . h_start + end_weights . h_end + bias)."""

    start_weights: np.ndarray
    end_weights: np.ndarray
    bias: float

    def span_scores(self, hidden: np.ndarray, starts: np.ndarray, ends: np.ndarray) -> np.ndarray:
        """Scores for half-open spans; ``ends`` indexes the last token + 1."""
        start_term = hidden @ np.asarray(self.start_weights, dtype=np.float64)
        end_term = hidden @ np.asarray(self.end_weights, dtype=np.float64)
        return sigmoid(start_term[starts] + end_term[ends - 1] + self.bias)


def candidate_spans(n_tokens: int, max_len: int) -> tuple[np.ndarray, np.ndarray]:
    """All half-open (start, end) with 1 <= end-start <= max_len, ordered by
    (start, length). Returned as parallel index arrays."""
    starts = []
    ends = []
    for s in range(n_tokens):
        for e in range(s + 1, min(n_tokens, s + max_len) + 1):
            starts.append(s)
            ends.append(e)
    return np.asarray(starts, dtype=np.int64), np.asarray(ends, dtype=np.int64)


def select_spans(
    starts: np.ndarray,
    ends: np.ndarray,
    probs: np.ndarray,
    threshold: float,
) -> list[int]:
    """Greedy non-overlap selection over candidate spans.

    Candidates below ``threshold`` are dropped; the rest are taken in order
    of descending probability, ties broken by earlier start then shorter
    span, skipping any span overlapping an accepted one.
    """
    keep = np.flatnonzero(probs >= threshold)
    if keep.size == 0:
        return []
    order = sorted(keep, key=lambda i: (-probs[i], starts[i], ends[i] - starts[i]))
    taken: list[int] = []
    occupied = np.zeros(int(ends.max()), dtype=bool)
    for i in order:
        s, e = int(starts[i]), int(ends[i])
        if occupied[s:e].any():
            continue
        occupied[s:e] = True
        taken.append(int(i))
    return taken


def span_text(doc: TokenizedDoc, start: int, end: int) -> str:
    """Surface slice covering tokens [start, end), via byte offsets."""
    byte_start = doc.offsets[start][0]
    byte_end = doc.offsets[end - 1][1]
    return doc.body.encode("utf-8")[byte_start:byte_end].decode("utf-8")


def extract_claims(
    doc: TokenizedDoc,
    hidden: np.ndarray,
    head: ExtractionHead,
    *,
    threshold: float = DEFAULT_CLAIM_THRESHOLD,
    max_len: int = DEFAULT_MAX_SPAN_TOKENS,
    cue_config: CueConfig | None = None,
) -> list[Claim]:
    """Score all candidate spans and keep a greedy non-overlapping set.

    Claims come back ordered by span position. Claim ids are deterministic:
    ``{doc_id}:{start}:{end}``.
    """
    n = len(doc.tokens)
    if n == 0:
        return []
    starts, ends = candidate_spans(n, max_len)
    probs = head.span_scores(hidden, starts, ends)
    chosen = select_spans(starts, ends, probs, threshold)
    chosen.sort(key=lambda i: (starts[i], ends[i]))
    claims = []
    for i in chosen:
        s, e = int(starts[i]), int(ends[i])
        text = span_text(doc, s, e)
        claims.append(
            Claim(
                claim_id=f"{doc.doc_id}:{s}:{e}",
                doc_id=doc.doc_id,
                span=(s, e),
                text=text,
                confidence=float(probs[i]),
                intensity=score_intensity(text, cue_config),
            )
        )
    return claims


def retrieve_evidence(
    claim_vec: np.ndarray,
    pool: Sequence[tuple[str, Embedding]],
    *,
    top_k: int = DEFAULT_TOP_K,
) -> list[tuple[str, float]]:
    """Rank evidence by scaled dot product and keep the top k.

    Similarity is ``claim . evidence / sqrt(dim)``. Ties break by
    lexicographic evidence id so rankings are reproducible.
    """
    if not pool:
        return []
    claim_vec = np.asarray(claim_vec, dtype=np.float64)
    scale = 1.0 / np.sqrt(claim_vec.shape[0])
    scored = [
        (evidence_id, float(claim_vec @ emb.vector * scale)) for evidence_id, emb in pool
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[: max(0, top_k)]


@dataclass
class NliHead:
    """Linear three-way entailment classifier over [claim_vec; evidence_vec]."""

    weights: np.ndarray  # (3, 2*dim)
    bias: np.ndarray  # (3,)

    def logits(self, features: np.ndarray) -> np.ndarray:
        return features @ np.asarray(self.weights, dtype=np.float64).T + np.asarray(
            self.bias, dtype=np.float64
        )


@dataclass(frozen=True)
class ClaimEvidencePair:
    """One retrieved pairing with its entailment distribution.

    ``probs`` is (p_entail, p_neutral, p_contradict); it sums to 1.
    """

    claim_id: str
    evidence_id: str
    similarity: float
    probs: tuple[float, float, float]

    @property
    def p_entail(self) -> float:
        return self.probs[0]

    @property
    def p_neutral(self) -> float:
        return self.probs[1]

    @property
    def p_contradict(self) -> float:
        return self.probs[2]

    @property
    def label(self) -> str:
        return ENTAILMENT_LABELS[int(np.argmax(self.probs))]


def classify_entailment(
    claim_vec: np.ndarray, evidence_vec: np.ndarray, head: NliHead
) -> tuple[float, float, float]:
    """Three-way distribution (entail, neutral, contradict) for one pair."""
    features = np.concatenate(
        [np.asarray(claim_vec, dtype=np.float64), np.asarray(evidence_vec, dtype=np.float64)]
    )
    probs = softmax(head.logits(features))
    return (float(probs[0]), float(probs[1]), float(probs[2]))


@dataclass(frozen=True)
class IndexBreakdown:
    """Per-claim contributions backing the aggregate indices (for reports)."""

    claim_id: str
    weight: float
    contradiction: float  # max p_contradict over the claim's pairs
    support: float  # max p_entail; 0 when the claim has no pairs
    intensity: float
    has_pairs: bool
    decisive_contradiction: bool  # contradiction >= decisive threshold


def claim_weights(confidences: Sequence[float]) -> np.ndarray:
    """Confidence-proportional weights; uniform when all confidences are zero."""
    conf = np.asarray(confidences, dtype=np.float64)
    total = conf.sum()
    if total <= 0.0:
        return np.full(len(conf), 1.0 / len(conf)) if len(conf) else conf
    return conf / total


def compute_indices(
    claims: Sequence[Claim],
    pairs: Sequence[ClaimEvidencePair],
    decisive_threshold: float = DEFAULT_DECISIVE_THRESHOLD,
) -> tuple[float, float, float, list[IndexBreakdown]]:
    """Aggregate claim-level evidence into (cci, ess, cii).

    cci: confidence-weighted mean of each claim's max contradiction
    probability, over claims that have at least one retrieved pair (weights
    renormalized over those claims; 0 when no claim has pairs).
    ess: confidence-weighted mean support over all claims, where a claim
    with no pairs contributes zero support.
    cii: confidence-weighted mean claim intensity.
    An empty claim set yields (0, 1, 0): nothing asserted, nothing unsupported.

    ``decisive_threshold`` does not enter the aggregates; it marks pairs whose
    contradiction probability is high enough to surface in review output.
    """
    if not claims:
        return 0.0, 1.0, 0.0, []
    by_claim: dict[str, list[ClaimEvidencePair]] = {c.claim_id: [] for c in claims}
    for pair in pairs:
        if pair.claim_id not in by_claim:
            raise ValueError(f"pair references unknown claim {pair.claim_id!r}")
        by_claim[pair.claim_id].append(pair)

    weights = claim_weights([c.confidence for c in claims])
    breakdown: list[IndexBreakdown] = []
    ess = 0.0
    cii = 0.0
    cci_num = 0.0
    cci_den = 0.0
    for claim, weight in zip(claims, weights):
        claim_pairs = by_claim[claim.claim_id]
        has_pairs = bool(claim_pairs)
        contradiction = max((p.p_contradict for p in claim_pairs), default=0.0)
        support = max((p.p_entail for p in claim_pairs), default=0.0)
        if has_pairs:
            cci_num += weight * contradiction
            cci_den += weight
        ess += weight * support
        cii += weight * claim.intensity
        breakdown.append(
            IndexBreakdown(
                claim_id=claim.claim_id,
                weight=float(weight),
                contradiction=float(contradiction),
                support=float(support),
                intensity=float(claim.intensity),
                has_pairs=has_pairs,
                decisive_contradiction=contradiction >= decisive_threshold,
            )
        )
    cci = cci_num / cci_den if cci_den > 0.0 else 0.0
    return float(cci), float(ess), float(cii), breakdown
