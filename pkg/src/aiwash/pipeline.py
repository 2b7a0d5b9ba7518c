"""End-to-end scoring pipeline.

``prepare_bundle`` precomputes everything that does not depend on trainable
parameters (tokenization, embeddings, candidate spans, the operational
vector, gold entailment features). ``forward_bundle`` then runs the
parameter-dependent part and is cheap enough to call inside training loops
and finite-difference checks. ``predict`` wraps both for one bundle.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import Claim, FirmQuarterBundle, SignalVector
from .encoder import HashingProvider, embed_evidence, embed_tokens
from .errors import GroundingError
from .fusion import ABLATION_MODES, CmidModel, context_features
from .grounding import build_operational_vector
from .ingest import TokenizedDoc, tokenize
from .reasoner import (
    ClaimEvidencePair,
    CueConfig,
    candidate_spans,
    compute_indices,
    default_cue_config,
    select_spans,
    sigmoid,
    softmax,
    span_text,
    score_intensity,
)

NEUTRAL_TGI = 0.5  # sigmoid(0); used when grounding is ablated away

ENTAILMENT_INDEX = {"entail": 0, "neutral": 1, "contradict": 2}


@dataclass
class SpanInfo:
    """Parameter-independent facts about one candidate span (lazily cached)."""

    text: str
    intensity: float
    claim_vec: np.ndarray
    pair_idx: np.ndarray  # indices into the bundle evidence matrix
    pair_sims: np.ndarray


@dataclass
class PreparedDoc:
    doc: TokenizedDoc
    hidden: np.ndarray  # (n_tokens, dim)
    span_starts: np.ndarray
    span_ends: np.ndarray
    span_lookup: dict[tuple[int, int], int]


@dataclass
class PreparedBundle:
    bundle: FirmQuarterBundle
    docs: list[PreparedDoc]
    evidence_ids: tuple[str, ...]
    evidence_matrix: np.ndarray  # (n_items, dim)
    n_image: int
    n_video: int
    total_tokens: int
    op_values: np.ndarray | None
    gold_nli_feats: np.ndarray | None  # (n_pairs, 2*dim)
    gold_nli_labels: np.ndarray | None  # (n_pairs,)
    span_cache: dict[tuple[int, int, int], SpanInfo] = field(default_factory=dict)
    _ev_order: np.ndarray | None = None
    _cue_config: CueConfig | None = None
    _provider: object = None


def make_provider(model: CmidModel) -> HashingProvider:
    return HashingProvider(model.config.shared_dim, model.config.provider_seed)


def prepare_bundle(
    bundle: FirmQuarterBundle,
    model: CmidModel,
    provider=None,
    cue_config: CueConfig | None = None,
    mode: str = "full",
) -> PreparedBundle:
    """Embed and index one bundle for repeated forward passes.

    Grounding inputs are only materialized in full mode, so ablated models
    can score bundles without panel statistics. Text-only mode likewise
    skips evidence embedding entirely.
    """
    if mode not in ABLATION_MODES:
        raise ValueError(f"unknown ablation mode {mode!r}")
    provider = provider or make_provider(model)
    docs = []
    total_tokens = 0
    for text in bundle.texts:
        doc = tokenize(text)
        hidden, _ = embed_tokens(doc, provider)
        starts, ends = candidate_spans(len(doc.tokens), model.config.max_span_tokens)
        lookup = {(int(s), int(e)): i for i, (s, e) in enumerate(zip(starts, ends))}
        docs.append(PreparedDoc(doc, hidden, starts, ends, lookup))
        total_tokens += len(doc.tokens)

    # text-only scoring never touches evidence, so skip the embedding cost
    items = () if mode == "text-only" else bundle.evidence_items
    embeddings = [embed_evidence(item, provider) for item in items]
    matrix = (
        np.stack([e.vector for e in embeddings])
        if embeddings
        else np.zeros((0, provider.dim), dtype=np.float64)
    )
    n_image = sum(1 for item in items if item.modality == "image")
    n_video = sum(1 for item in items if item.modality == "video")

    op_values = None
    if mode == "full":
        op_values = build_operational_vector(bundle.operational, model.panel_stats).values

    gold_feats = None
    gold_labels = None
    labels = bundle.labels
    if labels is not None and labels.nli_pairs:
        by_id = {item.evidence_id: vec for item, vec in zip(bundle.evidence_items, matrix)}
        feats = []
        idxs = []
        claim_vec_cache: dict[str, np.ndarray] = {}
        for claim_text, evidence_id, label in labels.nli_pairs:
            if evidence_id not in by_id:
                continue
            if claim_text not in claim_vec_cache:
                claim_vec_cache[claim_text] = provider.embed_text([claim_text])[0]
            feats.append(np.concatenate([claim_vec_cache[claim_text], by_id[evidence_id]]))
            idxs.append(ENTAILMENT_INDEX[label])
        if feats:
            gold_feats = np.stack(feats)
            gold_labels = np.asarray(idxs, dtype=np.int64)

    prep = PreparedBundle(
        bundle=bundle,
        docs=docs,
        evidence_ids=tuple(item.evidence_id for item in items),
        evidence_matrix=matrix,
        n_image=n_image,
        n_video=n_video,
        total_tokens=total_tokens,
        op_values=op_values,
        gold_nli_feats=gold_feats,
        gold_nli_labels=gold_labels,
    )
    prep._cue_config = cue_config or default_cue_config()
    prep._provider = provider
    return prep


def _span_info(prep: PreparedBundle, doc_idx: int, start: int, end: int, top_k: int) -> SpanInfo:
    key = (doc_idx, start, end)
    info = prep.span_cache.get(key)
    if info is not None:
        return info
    doc = prep.docs[doc_idx].doc
    text = span_text(doc, start, end)
    claim_vec = prep._provider.embed_text([text])[0]
    n_items = prep.evidence_matrix.shape[0]
    if n_items == 0:
        pair_idx = np.zeros(0, dtype=np.int64)
        pair_sims = np.zeros(0, dtype=np.float64)
    else:
        sims = prep.evidence_matrix @ claim_vec / np.sqrt(claim_vec.shape[0])
        if prep._ev_order is None:
            prep._ev_order = np.argsort(np.asarray(prep.evidence_ids))
        # Rank by similarity desc, ties by evidence id (lexicographic).
        id_rank = np.empty(n_items, dtype=np.int64)
        id_rank[prep._ev_order] = np.arange(n_items)
        order = np.lexsort((id_rank, -sims))
        pair_idx = order[: min(top_k, n_items)].astype(np.int64)
        pair_sims = sims[pair_idx]
    info = SpanInfo(
        text=text,
        intensity=score_intensity(text, prep._cue_config),
        claim_vec=claim_vec,
        pair_idx=pair_idx,
        pair_sims=pair_sims,
    )
    prep.span_cache[key] = info
    return info


@dataclass
class BundleForward:
    """Every intermediate needed to read off outputs and run backward."""

    mode: str
    selection: list[tuple[int, int, int]]  # (doc_idx, start, end), position order
    z: np.ndarray
    conf: np.ndarray
    weights: np.ndarray
    intensity: np.ndarray
    spans: list[SpanInfo]
    pair_feats: np.ndarray  # (P, 2*dim) stacked over claims
    pair_probs: np.ndarray  # (P, 3)
    pair_slices: list[tuple[int, int]]  # per-claim [start, end) rows
    has_pairs: np.ndarray
    contra: np.ndarray
    supp: np.ndarray
    contra_rows: np.ndarray  # global row of each claim's max-contradiction pair (-1 if none)
    supp_rows: np.ndarray
    weight_mass_with_pairs: float
    cci: float
    ess: float
    cii: float
    a1: np.ndarray | None
    a2: np.ndarray | None
    tgi: float
    ctx: np.ndarray
    gate_in: np.ndarray
    gate: np.ndarray
    x: np.ndarray
    p_wash: float
    awrs: float
    mot_in: np.ndarray
    mot_probs: np.ndarray
    sector_key: str


def forward_bundle(
    model: CmidModel,
    prep: PreparedBundle,
    mode: str = "full",
    fixed_selection: list[tuple[int, int, int]] | None = None,
) -> BundleForward:
    """Run the parameter-dependent pipeline on a prepared bundle.

    ``fixed_selection`` pins the claim spans (used by gradient checking so
    the loss surface stays smooth around the evaluation point); otherwise
    spans are re-selected from the current extraction head.
    """
    cfg = model.config
    ws = model.extraction.start_weights
    we = model.extraction.end_weights
    bias = model.extraction.bias

    selection: list[tuple[int, int, int]] = []
    if fixed_selection is None:
        for doc_idx, pd in enumerate(prep.docs):
            if pd.hidden.shape[0] == 0:
                continue
            start_term = pd.hidden @ ws
            end_term = pd.hidden @ we
            z = start_term[pd.span_starts] + end_term[pd.span_ends - 1] + bias
            probs = sigmoid(z)
            chosen = select_spans(pd.span_starts, pd.span_ends, probs, cfg.claim_threshold)
            chosen.sort(key=lambda i: (pd.span_starts[i], pd.span_ends[i]))
            selection.extend(
                (doc_idx, int(pd.span_starts[i]), int(pd.span_ends[i])) for i in chosen
            )
    else:
        selection = list(fixed_selection)

    m = len(selection)
    z = np.zeros(m, dtype=np.float64)
    for row, (doc_idx, s, e) in enumerate(selection):
        hidden = prep.docs[doc_idx].hidden
        z[row] = hidden[s] @ ws + hidden[e - 1] @ we + bias
    conf = sigmoid(z) if m else np.zeros(0, dtype=np.float64)
    total_conf = conf.sum()
    weights = conf / total_conf if total_conf > 0 else np.full(m, 1.0 / m) if m else conf

    spans = [
        _span_info(prep, doc_idx, s, e, cfg.top_k) for doc_idx, s, e in selection
    ]
    intensity = np.asarray([sp.intensity for sp in spans], dtype=np.float64)

    use_evidence = mode != "text-only"
    pair_slices: list[tuple[int, int]] = []
    feats_rows = []
    cursor = 0
    for sp in spans:
        k = len(sp.pair_idx) if use_evidence else 0
        pair_slices.append((cursor, cursor + k))
        if k:
            feats_rows.append(
                np.concatenate(
                    [np.repeat(sp.claim_vec[None, :], k, axis=0), prep.evidence_matrix[sp.pair_idx]],
                    axis=1,
                )
            )
        cursor += k
    pair_feats = (
        np.concatenate(feats_rows, axis=0)
        if feats_rows
        else np.zeros((0, 2 * cfg.shared_dim), dtype=np.float64)
    )
    if pair_feats.shape[0]:
        logits = pair_feats @ model.nli.weights.T + model.nli.bias
        pair_probs = softmax(logits, axis=1)
    else:
        pair_probs = np.zeros((0, 3), dtype=np.float64)

    has_pairs = np.asarray([b > a for a, b in pair_slices], dtype=bool)
    contra = np.zeros(m, dtype=np.float64)
    supp = np.zeros(m, dtype=np.float64)
    contra_rows = np.full(m, -1, dtype=np.int64)
    supp_rows = np.full(m, -1, dtype=np.int64)
    for i, (a, b) in enumerate(pair_slices):
        if b > a:
            block = pair_probs[a:b]
            ci = int(np.argmax(block[:, 2]))
            ei = int(np.argmax(block[:, 0]))
            contra[i] = block[ci, 2]
            supp[i] = block[ei, 0]
            contra_rows[i] = a + ci
            supp_rows[i] = a + ei

    if m == 0:
        cci, ess, cii = 0.0, 1.0, 0.0
        weight_mass = 0.0
    else:
        weight_mass = float(weights[has_pairs].sum())
        cci = float((weights[has_pairs] * contra[has_pairs]).sum() / weight_mass) if weight_mass > 0 else 0.0
        ess = float((weights * supp).sum())
        cii = float((weights * intensity).sum())

    if mode == "full":
        if prep.op_values is None:
            raise GroundingError(
                "bundle was prepared without grounding inputs", code="STATS_MISSING"
            )
        a1, a2, tgi = model.grounding.forward(prep.op_values)
    else:
        a1 = a2 = None
        tgi = NEUTRAL_TGI

    all_sims = (
        np.concatenate([sp.pair_sims for sp in spans])
        if (use_evidence and any(len(sp.pair_sims) for sp in spans))
        else np.zeros(0, dtype=np.float64)
    )
    ctx = context_features(
        n_claims=m,
        n_evidence=len(prep.evidence_ids),
        n_image=prep.n_image,
        n_video=prep.n_video,
        mean_similarity=float(all_sims.mean()) if all_sims.size else 0.0,
        mean_confidence=float(conf.mean()) if m else 0.0,
        total_tokens=prep.total_tokens,
        ablation=mode,
    )
    sector_key = model.gate.sector_key(prep.bundle.sector)
    gate_in = np.concatenate([model.gate.sector_table[sector_key], ctx])
    gate = sigmoid(model.gate.weights @ gate_in + model.gate.bias)
    x = np.asarray([cci, 1.0 - ess, cii, 1.0 - tgi], dtype=np.float64)
    p_wash = float(sigmoid(float(gate @ x)))
    mot_in = np.concatenate([x, ctx])
    mot_probs = softmax(model.motivation.weights @ mot_in + model.motivation.bias)

    return BundleForward(
        mode=mode,
        selection=selection,
        z=z,
        conf=conf,
        weights=weights,
        intensity=intensity,
        spans=spans,
        pair_feats=pair_feats,
        pair_probs=pair_probs,
        pair_slices=pair_slices,
        has_pairs=has_pairs,
        contra=contra,
        supp=supp,
        contra_rows=contra_rows,
        supp_rows=supp_rows,
        weight_mass_with_pairs=weight_mass,
        cci=cci,
        ess=ess,
        cii=cii,
        a1=a1,
        a2=a2,
        tgi=float(tgi),
        ctx=ctx,
        gate_in=gate_in,
        gate=gate,
        x=x,
        p_wash=p_wash,
        awrs=100.0 * p_wash,
        mot_in=mot_in,
        mot_probs=mot_probs,
        sector_key=sector_key,
    )


@dataclass(frozen=True)
class Prediction:
    """One scored firm-quarter, with the artifacts needed for review."""

    firm_id: str
    quarter: str
    sector: str
    awrs: float
    p_wash: float
    y_hat: int
    signals: SignalVector
    gate: tuple[float, float, float, float]
    motivation_probs: tuple[float, ...]
    context: tuple[float, ...]
    claims: tuple[Claim, ...]
    pairs: tuple[ClaimEvidencePair, ...]
    model_version: str
    ablation: str
    threshold: float

    def to_record(self) -> dict:
        """Wire form for score output and the review service."""
        return {
            "firm_id": self.firm_id,
            "quarter": self.quarter,
            "sector": self.sector,
            "awrs": self.awrs,
            "y_hat": self.y_hat,
            "p_wash": self.p_wash,
            "signals": {
                "cci": self.signals.cci,
                "ess": self.signals.ess,
                "cii": self.signals.cii,
                "tgi": self.signals.tgi,
            },
            "gate": list(self.gate),
            "motivation_probs": list(self.motivation_probs),
            "model_version": self.model_version,
            "ablation": self.ablation,
        }


def forward_to_prediction(
    model: CmidModel,
    prep: PreparedBundle,
    fw: BundleForward,
    threshold: float | None = None,
) -> Prediction:
    """Materialize claims and pairs from a forward pass and cross-check the
    aggregate indices against the reference aggregation."""
    claims = []
    pairs = []
    for i, ((doc_idx, s, e), sp) in enumerate(zip(fw.selection, fw.spans)):
        claim = Claim(
            claim_id=f"{prep.docs[doc_idx].doc.doc_id}:{s}:{e}",
            doc_id=prep.docs[doc_idx].doc.doc_id,
            span=(s, e),
            text=sp.text,
            confidence=float(fw.conf[i]),
            intensity=float(sp.intensity),
        )
        claims.append(claim)
        a, b = fw.pair_slices[i]
        for offset, row in enumerate(range(a, b)):
            ev_idx = int(sp.pair_idx[offset])
            probs = fw.pair_probs[row]
            pairs.append(
                ClaimEvidencePair(
                    claim_id=claim.claim_id,
                    evidence_id=prep.evidence_ids[ev_idx],
                    similarity=float(sp.pair_sims[offset]),
                    probs=(float(probs[0]), float(probs[1]), float(probs[2])),
                )
            )

    ref_cci, ref_ess, ref_cii, _ = compute_indices(
        claims, pairs, model.config.decisive_threshold
    )
    if not (
        abs(ref_cci - fw.cci) < 1e-9
        and abs(ref_ess - fw.ess) < 1e-9
        and abs(ref_cii - fw.cii) < 1e-9
    ):
        raise AssertionError(
            "pipeline aggregation diverged from reference indices: "
            f"({fw.cci}, {fw.ess}, {fw.cii}) vs ({ref_cci}, {ref_ess}, {ref_cii})"
        )

    thr = model.config.flag_threshold if threshold is None else float(threshold)
    return Prediction(
        firm_id=prep.bundle.firm_id,
        quarter=prep.bundle.quarter,
        sector=prep.bundle.sector,
        awrs=fw.awrs,
        p_wash=fw.p_wash,
        y_hat=int(fw.awrs >= thr),
        signals=SignalVector(fw.cci, fw.ess, fw.cii, fw.tgi),
        gate=tuple(float(g) for g in fw.gate),
        motivation_probs=tuple(float(p) for p in fw.mot_probs),
        context=tuple(float(c) for c in fw.ctx),
        claims=tuple(claims),
        pairs=tuple(pairs),
        model_version=model.version,
        ablation=fw.mode,
        threshold=thr,
    )


def predict(
    bundle: FirmQuarterBundle,
    model: CmidModel,
    *,
    ablation: str = "full",
    provider=None,
    threshold: float | None = None,
) -> Prediction:
    """Score one bundle end to end under the given ablation mode."""
    prep = prepare_bundle(bundle, model, provider=provider, mode=ablation)
    fw = forward_bundle(model, prep, mode=ablation)
    return forward_to_prediction(model, prep, fw, threshold=threshold)
