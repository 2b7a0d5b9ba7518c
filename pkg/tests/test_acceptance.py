"""Acceptance suite for the scoring engine.

Covers, at desk scale and with frozen seeds:

  * finite-difference gradient fidelity across random models and batches
  * formula conformance of the core numeric functions against independent
    brute-force oracles (at least 1000 random instances each)
  * Shapley attribution axioms and the pairwise interaction oracle
  * separation, ablation ordering, and decoy robustness on a 500-firm
    synthetic panel
  * byte-level determinism of corpora, training, and predictions
  * exact equivalence of the rule-based prelabeler with a per-cell oracle

The expensive fixtures (the 500-firm corpus and its fitted models) are
session-scoped; everything downstream shares them. Training depth differs
by purpose: the separation and robustness checks use lightly trained
models whose dev ranking is still smooth, while the ablation comparison
trains all three modes longer so the mode gaps are fully expressed.
"""
from __future__ import annotations

import io
import json
import math
import re
import statistics
import time
from itertools import combinations, permutations

import numpy as np
import pytest

from aiwash.checkpoint import save_model
from aiwash.core import (
    Claim,
    ComputeQuarter,
    JobsQuarter,
    OperationalRecords,
    PatentQuarter,
    RndQuarter,
    SignalVector,
    TextDoc,
)
from aiwash.attribution import shapley_values
from aiwash.encoder import Embedding
from aiwash.fusion import ABLATION_MODES, ModelConfig, compute_awrs, init_model
from aiwash.grounding import build_operational_vector, fit_panel_stats
from aiwash.ingest import Lexicon, tokenize, write_corpus
from aiwash.pipeline import make_provider, predict
from aiwash.prelabel import (
    PanelObservation,
    derive_awrs_label,
    percentile,
    stage1_prelabel,
)
from aiwash.reasoner import (
    ClaimEvidencePair,
    CueConfig,
    ExtractionHead,
    NliHead,
    classify_entailment,
    compute_indices,
    extract_claims,
    retrieve_evidence,
)
from aiwash.synth import SyntheticConfig, generate_corpus, perturb_bundle
from aiwash.train import TrainConfig, f1_score, fit, gradient_check, split_by_firm

DESK_DIM = 64
SHORT_EPOCHS = 10
LONG_EPOCHS = 40

CONFORMANCE_SECONDS: dict[str, float] = {}


# ---------------------------------------------------------------- fixtures


@pytest.fixture(scope="session")
def desk_corpus():
    t0 = time.perf_counter()
    bundles, manifest = generate_corpus(
        SyntheticConfig(n_firms=500, n_quarters=4, washing_rate=0.124, seed=11)
    )
    return bundles, manifest, time.perf_counter() - t0


@pytest.fixture(scope="session")
def desk_split(desk_corpus):
    return split_by_firm(desk_corpus[0], dev_fraction=0.2, seed=0)


def _desk_fit(dataset, bundles, mode, epochs):
    model = init_model(
        ModelConfig(shared_dim=DESK_DIM),
        sectors=sorted({b.sector for b in bundles}),
        seed=0,
    )
    config = TrainConfig(
        epochs=epochs, batch_size=64, seed=0, patience=12, ablation=mode
    )
    t0 = time.perf_counter()
    result = fit(dataset, model, config)
    return result, time.perf_counter() - t0


@pytest.fixture(scope="session")
def short_full(desk_corpus, desk_split):
    return _desk_fit(desk_split, desk_corpus[0], "full", SHORT_EPOCHS)


@pytest.fixture(scope="session")
def short_no_grounding(desk_corpus, desk_split):
    return _desk_fit(desk_split, desk_corpus[0], "no-grounding", SHORT_EPOCHS)


@pytest.fixture(scope="session")
def long_fits(desk_corpus, desk_split):
    return {
        mode: _desk_fit(desk_split, desk_corpus[0], mode, LONG_EPOCHS)
        for mode in ("text-only", "no-grounding", "full")
    }


def _dev_eval(result, dataset, mode):
    provider = make_provider(result.model)
    preds = [
        predict(b, result.model, ablation=mode, provider=provider)
        for b in dataset.dev
    ]
    awrs = np.asarray([p.awrs for p in preds])
    y = np.asarray([b.labels.y for b in dataset.dev])
    severity = np.asarray([b.labels.s for b in dataset.dev])
    y_hat = (awrs >= result.threshold).astype(int)
    return awrs, y, severity, y_hat


def _spearman(a, b):
    ra = np.argsort(np.argsort(a)).astype(np.float64)
    rb = np.argsort(np.argsort(b)).astype(np.float64)
    ra -= ra.mean()
    rb -= rb.mean()
    return float((ra @ rb) / math.sqrt((ra @ ra) * (rb @ rb)))


def _conformance(name, fn):
    """Run one conformance block, recording wall time for the budget check."""
    t0 = time.perf_counter()
    fn()
    CONFORMANCE_SECONDS[name] = time.perf_counter() - t0


# ------------------------------------------------------- gradient fidelity


class TestGradientFidelity:
    def test_analytic_gradients_match_finite_differences(self):
        bundles, _ = generate_corpus(
            SyntheticConfig(n_firms=6, n_quarters=2, seed=101)
        )
        sectors = sorted({b.sector for b in bundles})
        stats = fit_panel_stats((b.operational for b in bundles))
        rng = np.random.default_rng(7)

        t0 = time.perf_counter()
        worst = 0.0
        for draw in range(100):
            dim = int(rng.choice([8, 16]))
            model = init_model(
                ModelConfig(shared_dim=dim),
                sectors=sectors,
                seed=int(rng.integers(1 << 30)),
            )
            model.panel_stats = stats
            if draw % 2:
                # the grounding head initializes at zero; perturb it so the
                # checked point is generic
                model.grounding.out_w = model.grounding.out_w + rng.normal(
                    scale=0.05, size=model.grounding.out_w.shape
                )
            batch = [
                bundles[i]
                for i in rng.choice(
                    len(bundles), size=int(rng.integers(1, 3)), replace=False
                )
            ]
            result = gradient_check(
                model,
                batch,
                epsilon=1e-5,
                sample=25,
                seed=int(rng.integers(1 << 30)),
                mode=ABLATION_MODES[draw % 3],
            )
            worst = max(worst, result.max_relative_error)
        elapsed = time.perf_counter() - t0
        assert worst < 1e-4, f"worst relative error {worst:.3e}"
        assert elapsed < 60.0, f"gradient sweep took {elapsed:.1f}s"


# ---------------------------------------------------- formula conformance


class TestFormulaConformance:
    """Each core formula against a from-scratch oracle on random inputs."""

    def test_fused_score(self):
        def block():
            rng = np.random.default_rng(201)
            for _ in range(1000):
                vals = rng.random(4)
                if rng.random() < 0.1:
                    vals = rng.integers(0, 2, size=4).astype(np.float64)
                signals = SignalVector(
                    cci=float(vals[0]),
                    ess=float(vals[1]),
                    cii=float(vals[2]),
                    tgi=float(vals[3]),
                )
                gate = rng.random(4)
                x = (vals[0], 1.0 - vals[1], vals[2], 1.0 - vals[3])
                z = sum(gate[i] * x[i] for i in range(4))
                want = 100.0 / (1.0 + math.exp(-z))
                assert abs(compute_awrs(signals, gate) - want) < 1e-8

        _conformance("fused_score", block)

    def test_entailment_distribution(self):
        def block():
            rng = np.random.default_rng(202)
            for _ in range(1000):
                dim = int(rng.integers(2, 9))
                claim = rng.normal(size=dim)
                evidence = rng.normal(size=dim)
                head = NliHead(
                    weights=rng.normal(size=(3, 2 * dim)),
                    bias=rng.normal(size=3),
                )
                feats = list(claim) + list(evidence)
                logits = [
                    sum(head.weights[r][c] * feats[c] for c in range(2 * dim))
                    + head.bias[r]
                    for r in range(3)
                ]
                peak = max(logits)
                exps = [math.exp(l - peak) for l in logits]
                total = sum(exps)
                want = [e / total for e in exps]
                got = classify_entailment(claim, evidence, head)
                assert max(abs(g - w) for g, w in zip(got, want)) < 1e-8
                assert abs(sum(got) - 1.0) < 1e-9

        _conformance("entailment", block)

    def test_index_aggregation(self):
        def block():
            rng = np.random.default_rng(203)
            for _ in range(1000):
                n_claims = int(rng.integers(0, 7))
                claims = []
                all_zero = rng.random() < 0.1
                for i in range(n_claims):
                    claims.append(
                        Claim(
                            claim_id=f"d:{i}:{i + 1}",
                            doc_id="d",
                            span=(i, i + 1),
                            text="claim",
                            confidence=0.0 if all_zero else float(rng.random()),
                            intensity=float(rng.choice([0.0, 1 / 3, 2 / 3, 1.0])),
                        )
                    )
                pairs = []
                for claim in claims:
                    for k in range(int(rng.integers(0, 4))):
                        pe, pn, pc = rng.dirichlet([1.0, 1.0, 1.0])
                        pairs.append(
                            ClaimEvidencePair(
                                claim_id=claim.claim_id,
                                evidence_id=f"e{k}",
                                similarity=float(rng.normal()),
                                probs=(float(pe), float(pn), float(pc)),
                            )
                        )
                cci, ess, cii, breakdown = compute_indices(claims, pairs, 0.6)

                if not claims:
                    assert (cci, ess, cii) == (0.0, 1.0, 0.0)
                    assert breakdown == []
                    continue
                confs = [c.confidence for c in claims]
                total_conf = sum(confs)
                weights = (
                    [c / total_conf for c in confs]
                    if total_conf > 0
                    else [1.0 / len(claims)] * len(claims)
                )
                grouped = {c.claim_id: [] for c in claims}
                for pair in pairs:
                    grouped[pair.claim_id].append(pair)
                want_ess = 0.0
                want_cii = 0.0
                num = 0.0
                den = 0.0
                for claim, weight in zip(claims, weights):
                    mine = grouped[claim.claim_id]
                    contra = max((p.probs[2] for p in mine), default=0.0)
                    support = max((p.probs[0] for p in mine), default=0.0)
                    if mine:
                        num += weight * contra
                        den += weight
                    want_ess += weight * support
                    want_cii += weight * claim.intensity
                want_cci = num / den if den > 0 else 0.0
                assert abs(cci - want_cci) < 1e-8
                assert abs(ess - want_ess) < 1e-8
                assert abs(cii - want_cii) < 1e-8
                for entry, claim in zip(breakdown, claims):
                    assert entry.has_pairs == bool(grouped[claim.claim_id])
                    assert entry.decisive_contradiction == (
                        entry.contradiction >= 0.6
                    )

        _conformance("indices", block)

    def test_claim_extraction(self):
        def block():
            vocab = [
                "platform",
                "deployed",
                "all",
                "within",
                "pipeline",
                "85",
                "churn",
                "rollout",
                "governed",
                "teams",
            ]
            cues = CueConfig(
                deployment=Lexicon.from_terms(["deployed"]),
                quantifiers=Lexicon.from_terms(["all"]),
                numeric_patterns=(r"\d+",),
            )
            rng = np.random.default_rng(204)
            for i in range(1000):
                n = int(rng.integers(3, 11))
                body = " ".join(rng.choice(vocab, size=n))
                doc = tokenize(TextDoc(f"doc{i}", body))
                n_tok = len(doc.tokens)
                dim = 5
                hidden = rng.normal(size=(n_tok, dim))
                head = ExtractionHead(
                    start_weights=rng.normal(size=dim),
                    end_weights=rng.normal(size=dim),
                    bias=float(rng.normal()),
                )
                max_len = int(rng.integers(1, 5))
                got = extract_claims(
                    doc, hidden, head, threshold=0.5, max_len=max_len, cue_config=cues
                )

                scored = []
                for s in range(n_tok):
                    for e in range(s + 1, min(n_tok, s + max_len) + 1):
                        z = (
                            float(hidden[s] @ head.start_weights)
                            + float(hidden[e - 1] @ head.end_weights)
                            + head.bias
                        )
                        p = 1.0 / (1.0 + math.exp(-z))
                        if p >= 0.5:
                            scored.append((s, e, p))
                taken = []
                used = [False] * n_tok
                for s, e, p in sorted(scored, key=lambda t: (-t[2], t[0], t[1] - t[0])):
                    if any(used[s:e]):
                        continue
                    for k in range(s, e):
                        used[k] = True
                    taken.append((s, e, p))
                taken.sort(key=lambda t: (t[0], t[1]))

                assert len(got) == len(taken)
                for claim, (s, e, p) in zip(got, taken):
                    words = doc.tokens[s:e]
                    text = " ".join(words)
                    want_intensity = (
                        ("deployed" in words)
                        + ("all" in words)
                        + bool(re.search(r"\d+", text))
                    ) / 3.0
                    assert claim.claim_id == f"doc{i}:{s}:{e}"
                    assert claim.span == (s, e)
                    assert claim.text == text
                    assert abs(claim.confidence - p) < 1e-8
                    assert claim.intensity == want_intensity

        _conformance("extraction", block)

    def test_evidence_retrieval(self):
        def block():
            rng = np.random.default_rng(205)
            for _ in range(1000):
                dim = int(rng.integers(3, 9))
                claim = rng.normal(size=dim)
                pool = []
                vectors = []
                for j in range(int(rng.integers(0, 9))):
                    if vectors and rng.random() < 0.3:
                        vec = vectors[int(rng.integers(0, len(vectors)))]
                    else:
                        vec = rng.normal(size=dim)
                    vectors.append(vec)
                    pool.append((f"ev{j}", Embedding(vec, provenance="t")))
                rng.shuffle(pool)
                top_k = int(rng.choice([0, 1, 3, 5, 7]))
                got = retrieve_evidence(claim, pool, top_k=top_k)

                scale = 1.0 / math.sqrt(dim)
                scored = [
                    (eid, sum(claim[k] * emb.vector[k] for k in range(dim)) * scale)
                    for eid, emb in pool
                ]
                scored.sort(key=lambda t: (-t[1], t[0]))
                want = scored[: max(0, top_k)]
                assert [eid for eid, _ in got] == [eid for eid, _ in want]
                for (_, gs), (_, ws) in zip(got, want):
                    assert abs(gs - ws) < 1e-8

        _conformance("retrieval", block)

    def test_operational_vector(self):
        def block():
            rng = np.random.default_rng(206)
            for _ in range(1000):
                panel = [_random_records(rng) for _ in range(int(rng.integers(2, 6)))]
                stats = fit_panel_stats(panel)
                target = panel[0]
                got = build_operational_vector(target, stats).values
                want = np.asarray(_oracle_operational(target, stats))
                assert float(np.max(np.abs(got - want))) < 1e-8

        _conformance("operational_vector", block)

    def test_percentile(self):
        def block():
            rng = np.random.default_rng(207)
            pinned = [0.0, 25.0, 50.0, 75.0, 100.0]
            for k in range(1000):
                n = int(rng.integers(1, 13))
                values = (rng.normal(size=n) * 20.0).tolist()
                q = pinned[k % 5] if k % 2 else float(rng.random() * 100.0)
                want = float(np.percentile(np.asarray(values), q))
                assert abs(percentile(values, q) - want) < 1e-8

        _conformance("percentile", block)

    def test_label_synthesis(self):
        def block():
            rng = np.random.default_rng(208)
            done = 0
            while done < 1000:
                n = int(rng.integers(2, 13))
                k = int(rng.integers(1, 7))
                ratings = rng.normal(size=(n, k)) * float(
                    rng.uniform(0.5, 3.0)
                ) + float(rng.normal() * 5.0)
                centered = ratings - ratings.mean(axis=0, keepdims=True)
                cov = centered.T @ centered / (n - 1)
                eigvals, eigvecs = np.linalg.eigh(cov)
                # skip near-degenerate draws: power iteration has no unique
                # target when the top two eigenvalues almost coincide
                if k > 1 and eigvals[-2] > 0.99 * eigvals[-1]:
                    continue
                component = eigvecs[:, -1]
                scores = centered @ component
                anchor = ratings.mean(axis=1)
                anchor = anchor - anchor.mean()
                if float(scores @ anchor) < 0.0:
                    scores = -scores
                spread = scores.max() - scores.min()
                if spread <= 1e-9:
                    continue
                want = 100.0 * (scores - scores.min()) / spread
                got = derive_awrs_label(ratings)
                assert float(np.max(np.abs(got - want))) < 1e-6
                assert got.min() == pytest.approx(0.0, abs=1e-9)
                assert got.max() == pytest.approx(100.0, abs=1e-9)
                done += 1

        _conformance("label_synthesis", block)

    def test_total_conformance_budget(self):
        if len(CONFORMANCE_SECONDS) < 8:
            pytest.skip("budget applies to the full conformance run")
        total = sum(CONFORMANCE_SECONDS.values())
        assert total < 300.0, f"conformance took {total:.1f}s: {CONFORMANCE_SECONDS}"


def _random_quarters(rng, n):
    year = int(rng.integers(2019, 2023))
    start = int(rng.integers(0, 4))
    out = []
    for i in range(n):
        k = start + i
        out.append(f"{year + k // 4}Q{k % 4 + 1}")
    return out


_TAG_POOL = [
    "ml",
    "machine learning",
    "deep learning",
    "etl",
    "data engineer",
    "nlp",
    "language model",
    "cv",
    "computer vision",
    "mlops",
    "platform",
    "research",
    "scientist",
    "gardening",
    "sales",
    "finance",
]

_TAG_CATEGORY = {
    "ml": "ml_core",
    "machine learning": "ml_core",
    "deep learning": "ml_core",
    "etl": "data_eng",
    "data engineer": "data_eng",
    "nlp": "nlp",
    "language model": "nlp",
    "cv": "vision",
    "computer vision": "vision",
    "mlops": "infra",
    "platform": "infra",
    "research": "research",
    "scientist": "research",
}

_SKILLS = ("ml_core", "data_eng", "nlp", "vision", "infra", "research")

_MAGNITUDE_SLOTS = set(range(0, 8)) | set(range(24, 32)) | set(range(56, 68))


def _random_records(rng):
    def missing():
        return bool(rng.random() < 0.15)

    patents = tuple(
        PatentQuarter(
            q,
            ai_count=int(rng.integers(0, 9)),
            total_count=int(rng.integers(0, 13)),
            forward_citations=tuple(
                int(rng.integers(0, 7)) for _ in range(int(rng.integers(0, 4)))
            ),
            granted_count=int(rng.integers(0, 5)),
            missing=missing(),
        )
        for q in _random_quarters(rng, int(rng.integers(0, 11)))
    )
    jobs = tuple(
        JobsQuarter(
            q,
            volume=int(rng.integers(0, 41)),
            skill_tags=tuple(rng.choice(_TAG_POOL, size=int(rng.integers(0, 4)))),
            seniority_counts=tuple(int(rng.integers(0, 6)) for _ in range(3)),
            skill_alignment=float(rng.random()),
            missing=missing(),
        )
        for q in _random_quarters(rng, int(rng.integers(0, 11)))
    )
    rnd = tuple(
        RndQuarter(
            q,
            amount=float(rng.random() * 500),
            revenue=float(rng.choice([0.0, rng.random() * 5000 + 100])),
            capitalized_fraction=float(rng.random()),
            missing=missing(),
        )
        for q in _random_quarters(rng, int(rng.integers(0, 11)))
    )
    compute = tuple(
        ComputeQuarter(
            q,
            gpu_spend=float(rng.random() * 1000),
            server_spend=float(rng.random() * 400),
            cloud_contract_value=float(rng.random() * 200),
            missing=missing(),
        )
        for q in _random_quarters(rng, int(rng.integers(0, 11)))
    )
    return OperationalRecords(patents=patents, jobs=jobs, rnd=rnd, compute=compute)


def _mean_step(series):
    diffs = [b - a for (pa, a), (pb, b) in zip(series, series[1:]) if pb == pa + 1]
    return sum(diffs) / len(diffs) if diffs else 0.0


def _mean_curvature(series):
    diffs = [
        v2 - 2.0 * v1 + v0
        for (p0, v0), (p1, v1), (p2, v2) in zip(series, series[1:], series[2:])
        if p1 == p0 + 1 and p2 == p1 + 1
    ]
    return sum(diffs) / len(diffs) if diffs else 0.0


def _oracle_operational(op, stats):
    """From-scratch rebuild of the 68-slot layout plus normalization."""
    raw = [0.0] * 68
    miss = [False] * 68

    pat = sorted(op.patents, key=lambda r: r.quarter)
    pat_present = [r for r in pat if not r.missing]
    window = pat[:8]
    for pos, rec in enumerate(window):
        if rec.missing:
            miss[pos] = miss[8 + pos] = True
        else:
            raw[pos] = math.log1p(float(rec.ai_count))
            raw[8 + pos] = (
                rec.ai_count / rec.total_count if rec.total_count > 0 else 0.0
            )
    series = [(p, float(r.ai_count)) for p, r in enumerate(window) if not r.missing]
    raw[16] = _mean_step(series)
    raw[17] = _mean_curvature(series)
    cits = [c for r in pat_present for c in r.forward_citations]
    if cits:
        raw[18] = sum(cits) / len(cits)
        raw[19] = float(statistics.median(cits))
        raw[20] = float(max(cits))
        raw[21] = sum(1 for c in cits if c > 0) / len(cits)
    ai_total = sum(r.ai_count for r in pat_present)
    raw[22] = (
        sum(r.granted_count for r in pat_present) / ai_total if ai_total > 0 else 0.0
    )
    recency = 8.0
    for pos in range(len(window) - 1, -1, -1):
        if not window[pos].missing and window[pos].ai_count > 0:
            recency = float(len(window) - 1 - pos)
            break
    raw[23] = min(recency, 8.0)

    jobs = sorted(op.jobs, key=lambda r: r.quarter)
    jobs_present = [r for r in jobs if not r.missing]
    jwin = jobs[:8]
    for pos, rec in enumerate(jwin):
        if rec.missing:
            miss[24 + pos] = True
        else:
            raw[24 + pos] = math.log1p(float(rec.volume))
    counts = {c: 0 for c in _SKILLS}
    for rec in jobs_present:
        for tag in rec.skill_tags:
            norm = " ".join(tag.lower().replace("-", " ").replace("_", " ").split())
            cat = _TAG_CATEGORY.get(norm)
            if cat:
                counts[cat] += 1
    tag_total = sum(counts.values())
    for k, cat in enumerate(_SKILLS):
        raw[32 + k] = counts[cat] / tag_total if tag_total else 0.0
    seniority = [0.0, 0.0, 0.0]
    for rec in jobs_present:
        for k in range(3):
            seniority[k] += rec.seniority_counts[k]
    seniority_total = sum(seniority)
    if seniority_total > 0:
        for k in range(3):
            raw[38 + k] = seniority[k] / seniority_total
    volume_total = sum(r.volume for r in jobs_present)
    if volume_total > 0:
        raw[41] = (
            sum(r.skill_alignment * r.volume for r in jobs_present) / volume_total
        )
    elif jobs_present:
        raw[41] = sum(r.skill_alignment for r in jobs_present) / len(jobs_present)
    vseries = [(p, float(r.volume)) for p, r in enumerate(jwin) if not r.missing]
    raw[42] = _mean_step(vseries)
    raw[43] = _mean_curvature(vseries)

    rnd = sorted(op.rnd, key=lambda r: r.quarter)
    for off, (pos, rec) in enumerate(list(enumerate(rnd[:8]))[-4:]):
        if rec.missing:
            miss[44 + off] = miss[48 + off] = miss[52 + off] = True
            continue
        raw[44 + off] = rec.amount / rec.revenue if rec.revenue > 0 else 0.0
        prev = rnd[pos - 1] if pos >= 1 else None
        if prev is not None and not prev.missing and prev.amount > 0:
            raw[48 + off] = (rec.amount - prev.amount) / prev.amount
        raw[52 + off] = rec.capitalized_fraction

    comp = sorted(op.compute, key=lambda r: r.quarter)
    for off, (pos, rec) in enumerate(list(enumerate(comp[:8]))[-4:]):
        if rec.missing:
            miss[56 + off] = miss[60 + off] = miss[64 + off] = True
        else:
            raw[56 + off] = math.log1p(rec.gpu_spend)
            raw[60 + off] = math.log1p(rec.server_spend)
            raw[64 + off] = math.log1p(rec.cloud_contract_value)

    out = []
    for slot in range(68):
        if slot in _MAGNITUDE_SLOTS:
            if miss[slot]:
                out.append(0.0)
            else:
                std = max(stats.std[slot], 1e-6)
                out.append((raw[slot] - stats.mean[slot]) / std)
        elif miss[slot]:
            out.append(stats.mean[slot])
        else:
            out.append(raw[slot])
    return out


# ------------------------------------------------------ attribution axioms


def _oracle_coalition(signals, gate, members):
    x = signals.fusion_input()
    z = 0.0
    for i in range(4):
        if i not in members:
            continue
        # complement-style signals are re-complemented inside the fusion
        # step, so mirror that double flip here
        part = x[i] if i in (0, 2) else 1.0 - (1.0 - x[i])
        z += gate[i] * part
    return 100.0 / (1.0 + math.exp(-z))


class TestAttributionAxioms:
    def test_axioms_and_interactions_on_random_draws(self):
        rng = np.random.default_rng(31)
        for _ in range(1000):
            vals = rng.random(4)
            signals = SignalVector(
                cci=float(vals[0]),
                ess=float(vals[1]),
                cii=float(vals[2]),
                tgi=float(vals[3]),
            )
            gate = rng.random(4)
            attribution = shapley_values(signals, gate)

            assert attribution.baseline == 50.0
            drop = attribution.awrs - attribution.baseline
            assert abs(sum(attribution.shapley) - drop) < 1e-9

            values = {
                frozenset(sub): _oracle_coalition(signals, gate, frozenset(sub))
                for r in range(5)
                for sub in combinations(range(4), r)
            }
            phi = [0.0] * 4
            for order in permutations(range(4)):
                seen = frozenset()
                for player in order:
                    phi[player] += values[seen | {player}] - values[seen]
                    seen = seen | {player}
            phi = [p / 24.0 for p in phi]
            assert max(
                abs(a - b) for a, b in zip(attribution.shapley, phi)
            ) < 1e-9

            inter = attribution.interactions
            for i in range(4):
                assert inter[i][i] == 0.0
                for j in range(4):
                    assert inter[i][j] == inter[j][i]
            for i in range(4):
                for j in range(i + 1, 4):
                    rest = [k for k in range(4) if k not in (i, j)]
                    want = 0.0
                    for r in range(len(rest) + 1):
                        weight = (
                            math.factorial(r)
                            * math.factorial(4 - r - 2)
                            / math.factorial(3)
                        )
                        for sub in combinations(rest, r):
                            s = frozenset(sub)
                            want += weight * (
                                values[s | {i, j}]
                                - values[s | {i}]
                                - values[s | {j}]
                                + values[s]
                            )
                    assert abs(inter[i][j] - want) < 1e-12

    def test_null_player_gets_exactly_zero(self):
        rng = np.random.default_rng(32)
        neutral = {"cci": 0.0, "ess": 1.0, "cii": 0.0, "tgi": 1.0}
        names = ("cci", "ess", "cii", "tgi")
        for _ in range(1000):
            fields = {
                "cci": float(rng.random()),
                "ess": float(rng.random()),
                "cii": float(rng.random()),
                "tgi": float(rng.random()),
            }
            idx = int(rng.integers(0, 4))
            fields[names[idx]] = neutral[names[idx]]
            attribution = shapley_values(SignalVector(**fields), rng.random(4))
            assert attribution.shapley[idx] == 0.0

    def test_symmetric_players_get_equal_shares(self):
        rng = np.random.default_rng(33)
        for _ in range(1000):
            shared = float(rng.random())
            shared_gate = float(rng.random())
            signals = SignalVector(
                cci=shared,
                ess=float(rng.random()),
                cii=shared,
                tgi=float(rng.random()),
            )
            gate = rng.random(4)
            gate[0] = gate[2] = shared_gate
            attribution = shapley_values(signals, gate)
            assert abs(attribution.shapley[0] - attribution.shapley[2]) < 1e-12


# ------------------------------------------------- desk-scale panel checks


class TestSeparation:
    def test_flags_and_ranks_planted_washers(self, desk_corpus, desk_split, short_full):
        bundles, manifest, gen_seconds = desk_corpus
        result, fit_seconds = short_full
        assert manifest["washing_firms"] == round(500 * 0.124)

        t0 = time.perf_counter()
        awrs, y, severity, y_hat = _dev_eval(result, desk_split, "full")
        eval_seconds = time.perf_counter() - t0

        f1 = f1_score(y, y_hat)
        rho = _spearman(awrs, severity)
        assert f1 >= 0.90, f"held-out F1 {f1:.4f}"
        assert rho >= 0.80, f"held-out severity correlation {rho:.4f}"
        assert gen_seconds + fit_seconds + eval_seconds < 900.0


class TestAblationOrdering:
    def test_each_stage_adds_separation(self, desk_split, long_fits):
        f1s = {}
        for mode, (result, _) in long_fits.items():
            _, y, _, y_hat = _dev_eval(result, desk_split, mode)
            f1s[mode] = f1_score(y, y_hat)
        assert f1s["text-only"] <= f1s["no-grounding"] <= f1s["full"], f1s
        assert f1s["full"] - f1s["text-only"] >= 0.05, f1s


class TestDecoyRobustness:
    def _flips(self, result, dataset, mode):
        provider = make_provider(result.model)
        washers = [b for b in dataset.dev if b.labels.y == 1]
        flagged = [
            b
            for b in washers
            if predict(b, result.model, ablation=mode, provider=provider).awrs
            >= result.threshold
        ]
        flips = 0
        for bundle in flagged:
            decoyed = perturb_bundle(bundle, "decoy_diagrams", magnitude=3)
            score = predict(
                decoyed, result.model, ablation=mode, provider=provider
            ).awrs
            flips += score < result.threshold
        return flips, len(flagged)

    def test_decoy_media_rarely_flips_grounded_model(
        self, desk_split, short_full, short_no_grounding
    ):
        full_flips, full_flagged = self._flips(short_full[0], desk_split, "full")
        ng_flips, ng_flagged = self._flips(
            short_no_grounding[0], desk_split, "no-grounding"
        )
        assert full_flagged > 0 and ng_flagged > 0
        full_rate = full_flips / full_flagged
        ng_rate = ng_flips / ng_flagged
        assert full_rate < 0.20, f"full model flipped {full_flips}/{full_flagged}"
        assert ng_rate > full_rate, (
            f"no-grounding flipped {ng_flips}/{ng_flagged}, "
            f"full flipped {full_flips}/{full_flagged}"
        )


# ------------------------------------------------------------ determinism


@pytest.fixture(scope="session")
def twin_runs(tmp_path_factory):
    root = tmp_path_factory.mktemp("determinism")

    def one_run(tag):
        bundles, _ = generate_corpus(
            SyntheticConfig(n_firms=20, n_quarters=2, seed=5)
        )
        buffer = io.StringIO()
        write_corpus(bundles, buffer)
        dataset = split_by_firm(bundles, dev_fraction=0.2, seed=0)
        model = init_model(
            ModelConfig(shared_dim=32),
            sectors=sorted({b.sector for b in bundles}),
            seed=0,
        )
        result = fit(dataset, model, TrainConfig(epochs=3, batch_size=16, seed=0))
        path = root / f"{tag}.json"
        save_model(result.model, path)
        provider = make_provider(result.model)
        lines = "\n".join(
            json.dumps(
                predict(b, result.model, provider=provider).to_record(),
                sort_keys=True,
            )
            for b in bundles
        )
        return buffer.getvalue(), path.read_bytes(), lines

    return one_run("first"), one_run("second")


class TestDeterminism:
    def test_corpus_bytes_identical(self, twin_runs):
        assert twin_runs[0][0] == twin_runs[1][0]

    def test_checkpoint_bytes_identical(self, twin_runs):
        assert twin_runs[0][1] == twin_runs[1][1]

    def test_prediction_records_identical(self, twin_runs):
        assert twin_runs[0][2] == twin_runs[1][2]


# ------------------------------------------------- prelabel equivalence


class TestPrelabelEquivalence:
    def test_flags_match_per_cell_oracle_on_random_panels(self):
        industries = ["software", "retail", "banking", "autos", "biotech"]
        for seed in range(50):
            rng = np.random.default_rng((seed, 0xF1A6))
            observations = []
            firm = 0
            for industry in rng.choice(industries, size=int(rng.integers(2, 5)), replace=False):
                for year in range(2022, 2022 + int(rng.integers(1, 4))):
                    for _ in range(int(rng.integers(1, 10))):
                        observations.append(
                            PanelObservation(
                                firm_id=f"F{firm:04d}",
                                industry=str(industry),
                                year=year,
                                disclosure_freq=float(rng.random() * 12.0),
                                ai_investment=float(rng.normal() * 2.0),
                            )
                        )
                        firm += 1
            result = stage1_prelabel(observations)

            cells: dict[tuple[str, int], list[PanelObservation]] = {}
            for obs in observations:
                cells.setdefault((obs.industry, obs.year), []).append(obs)
            want_flags = {}
            want_skipped = []
            for key in sorted(cells):
                rows = cells[key]
                if len(rows) < 4:
                    want_skipped.append((key[0], key[1], len(rows)))
                    continue
                p75 = float(np.percentile([r.disclosure_freq for r in rows], 75.0))
                p25 = float(np.percentile([r.ai_investment for r in rows], 25.0))
                want_flags[key] = {
                    r.firm_id
                    for r in rows
                    if r.disclosure_freq > p75 and r.ai_investment < p25
                }
            assert result.flags == want_flags
            assert result.skipped_cells == tuple(want_skipped)
            for cell in result.cutoffs:
                rows = cells[(cell.industry, cell.year)]
                assert cell.freq_p75 == pytest.approx(
                    float(np.percentile([r.disclosure_freq for r in rows], 75.0)),
                    abs=1e-12,
                )
                assert cell.invest_p25 == pytest.approx(
                    float(np.percentile([r.ai_investment for r in rows], 25.0)),
                    abs=1e-12,
                )
