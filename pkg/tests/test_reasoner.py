from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aiwash.core import Claim, TextDoc
from aiwash.encoder import Embedding
from aiwash.ingest import tokenize
from aiwash.reasoner import (
    ClaimEvidencePair,
    ExtractionHead,
    NliHead,
    candidate_spans,
    claim_weights,
    classify_entailment,
    compute_indices,
    extract_claims,
    retrieve_evidence,
    score_intensity,
    select_spans,
    softmax,
    span_text,
)

# Softmax of logits (10, 0, 0): e^10/(e^10+2), frozen from a 60-digit
# Decimal series evaluation rounded to the nearest double.
ENTAIL_AT_TEN = 0.9999092083843409


def _pair(claim_id, evidence_id, pe, pn, pc):
    return ClaimEvidencePair(
        claim_id=claim_id,
        evidence_id=evidence_id,
        similarity=0.0,
        probs=(pe, pn, pc),
    )


def _claim(claim_id, confidence, intensity=0.0):
    return Claim(
        claim_id=claim_id,
        doc_id="d",
        span=(0, 1),
        text="t",
        confidence=confidence,
        intensity=intensity,
    )


class TestSoftmaxAndEntailment:
    def test_frozen_entail_probability(self):
        probs = softmax(np.array([10.0, 0.0, 0.0]))
        assert probs[0] == pytest.approx(ENTAIL_AT_TEN, abs=1e-15)
        assert probs[1] == probs[2]
        assert probs.sum() == pytest.approx(1.0, abs=1e-15)

    def test_softmax_shift_invariant(self, rng):
        logits = rng.normal(size=(4, 3))
        np.testing.assert_allclose(
            softmax(logits), softmax(logits + 123.0), atol=1e-12
        )

    def test_classify_entailment_matches_manual(self, rng):
        dim = 6
        head = NliHead(
            weights=rng.normal(size=(3, 2 * dim)), bias=rng.normal(size=3)
        )
        claim_vec = rng.normal(size=dim)
        ev_vec = rng.normal(size=dim)
        got = classify_entailment(claim_vec, ev_vec, head)
        feats = np.concatenate([claim_vec, ev_vec])
        logits = head.weights @ feats + head.bias
        exp = np.exp(logits - logits.max())
        want = exp / exp.sum()
        np.testing.assert_allclose(got, want, atol=1e-12)
        assert sum(got) == pytest.approx(1.0, abs=1e-12)

    def test_entailment_order_is_entail_neutral_contradict(self):
        dim = 2
        head = NliHead(weights=np.zeros((3, 2 * dim)), bias=np.array([0.0, 0.0, 5.0]))
        pe, pn, pc = classify_entailment(np.zeros(dim), np.zeros(dim), head)
        assert pc > 0.9 and pe == pn


class TestIntensity:
    def test_bare_statement_scores_zero(self):
        assert score_intensity("We are exploring machine learning methods.") == 0.0

    def test_full_claim_scores_one(self):
        text = "Our AI system is fully deployed across all plants, achieving 99.2% accuracy."
        assert score_intensity(text) == 1.0

    def test_partial_cues(self):
        assert score_intensity("The model is deployed in one site.") == pytest.approx(1 / 3)
        assert score_intensity("All teams reviewed 45% of cases.") == pytest.approx(2 / 3)

    def test_word_boundary_respected(self):
        # "allocate" must not fire the quantifier "all"
        assert score_intensity("We allocate budget to research.") == 0.0


class TestSpans:
    def test_candidate_spans_order_and_bounds(self):
        starts, ends = candidate_spans(4, 2)
        got = list(zip(starts.tolist(), ends.tolist()))
        assert got == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]

    def test_select_spans_greedy_nonoverlap(self):
        starts = np.array([0, 1, 2])
        ends = np.array([2, 3, 4])
        probs = np.array([0.9, 0.8, 0.7])
        assert select_spans(starts, ends, probs, 0.5) == [0, 2]

    def test_select_spans_tie_prefers_earlier_then_shorter(self):
        starts = np.array([2, 0, 0])
        ends = np.array([3, 1, 2])
        probs = np.array([0.8, 0.8, 0.8])
        # same prob: start 0 beats start 2; among start 0 the shorter wins
        assert select_spans(starts, ends, probs, 0.5) == [1, 0]

    def test_select_spans_threshold(self):
        starts = np.array([0])
        ends = np.array([1])
        assert select_spans(starts, ends, np.array([0.49]), 0.5) == []
        assert select_spans(starts, ends, np.array([0.5]), 0.5) == [0]

    def test_span_text_joins_tokens(self):
        doc = tokenize(TextDoc("d", "we  deployed ai"))
        assert span_text(doc, 1, 3) == "deployed ai"


class TestExtractClaims:
    def test_matches_bruteforce_on_random_inputs(self, rng):
        dim = 8
        for _ in range(50):
            n = int(rng.integers(1, 12))
            hidden = rng.normal(size=(n, dim))
            head = ExtractionHead(
                start_weights=rng.normal(size=dim) * 0.5,
                end_weights=rng.normal(size=dim) * 0.5,
                bias=float(rng.normal() * 0.5),
            )
            doc = tokenize(TextDoc("doc", " ".join(f"t{i}" for i in range(n))))
            claims = extract_claims(doc, hidden, head, threshold=0.5, max_len=4)

            # oracle: enumerate, filter, greedy pick by (-p, start, len)
            cands = []
            for s in range(n):
                for e in range(s + 1, min(n, s + 4) + 1):
                    p = 1.0 / (
                        1.0
                        + np.exp(
                            -(
                                hidden[s] @ head.start_weights
                                + hidden[e - 1] @ head.end_weights
                                + head.bias
                            )
                        )
                    )
                    if p >= 0.5:
                        cands.append((s, e, p))
            cands.sort(key=lambda t: (-t[2], t[0], t[1] - t[0]))
            used = np.zeros(n, dtype=bool)
            expected = []
            for s, e, p in cands:
                if used[s:e].any():
                    continue
                used[s:e] = True
                expected.append((s, e, p))
            expected.sort(key=lambda t: t[0])

            assert [c.span for c in claims] == [(s, e) for s, e, _ in expected]
            for claim, (_, _, p) in zip(claims, expected):
                assert claim.confidence == pytest.approx(p, abs=1e-12)

    def test_claim_ids_are_positional(self, rng):
        dim = 4
        hidden = np.ones((3, dim))
        head = ExtractionHead(np.ones(dim), np.ones(dim), 0.0)
        doc = tokenize(TextDoc("docX", "a b c"))
        claims = extract_claims(doc, hidden, head, max_len=1)
        assert [c.claim_id for c in claims] == ["docX:0:1", "docX:1:2", "docX:2:3"]
        assert all(c.doc_id == "docX" for c in claims)

    def test_empty_doc_yields_no_claims(self):
        head = ExtractionHead(np.ones(4), np.ones(4), 0.0)
        doc = tokenize(TextDoc("d", ""))
        assert extract_claims(doc, np.zeros((0, 4)), head) == []


class TestRetrieval:
    def test_matches_bruteforce(self, rng):
        dim = 8
        for _ in range(50):
            claim = rng.normal(size=dim)
            n = int(rng.integers(0, 9))
            pool = [
                (f"ev{i:02d}", Embedding(rng.normal(size=dim), "t"))
                for i in range(n)
            ]
            got = retrieve_evidence(claim, pool, top_k=5)
            scale = 1.0 / np.sqrt(dim)
            scored = [
                (eid, float(claim @ emb.vector * scale)) for eid, emb in pool
            ]
            scored.sort(key=lambda t: (-t[1], t[0]))
            assert [eid for eid, _ in got] == [eid for eid, _ in scored[:5]]
            for (_, a), (_, b) in zip(got, scored):
                assert a == pytest.approx(b, abs=1e-12)

    def test_tie_breaks_lexicographically(self):
        dim = 4
        vec = np.ones(dim)
        pool = [
            ("b", Embedding(vec.copy(), "t")),
            ("a", Embedding(vec.copy(), "t")),
        ]
        got = retrieve_evidence(vec, pool, top_k=5)
        assert [eid for eid, _ in got] == ["a", "b"]

    def test_empty_pool(self):
        assert retrieve_evidence(np.ones(4), [], top_k=5) == []


class TestClaimWeights:
    def test_normalizes_to_one(self):
        w = claim_weights([0.5, 0.25, 0.25])
        np.testing.assert_allclose(w, [0.5, 0.25, 0.25], atol=1e-12)
        assert w.sum() == pytest.approx(1.0)

    def test_zero_total_falls_back_to_uniform(self):
        np.testing.assert_allclose(claim_weights([0.0, 0.0]), [0.5, 0.5])

    def test_empty(self):
        assert claim_weights([]).shape == (0,)


class TestComputeIndices:
    def test_empty_claims_sentinel(self):
        cci, ess, cii, rows = compute_indices([], [])
        assert (cci, ess, cii) == (0.0, 1.0, 0.0)
        assert rows == []

    def test_hand_computed_case(self):
        claims = [_claim("c1", 0.8, intensity=1.0), _claim("c2", 0.2, intensity=0.5)]
        pairs = [
            _pair("c1", "e1", 0.7, 0.2, 0.1),
            _pair("c1", "e2", 0.1, 0.2, 0.7),
        ]
        cci, ess, cii, rows = compute_indices(claims, pairs)
        # c2 has no pairs: cci renormalizes to c1 alone; ess counts c2 as 0
        assert cci == pytest.approx(0.7)
        assert ess == pytest.approx(0.8 * 0.7 + 0.2 * 0.0)
        assert cii == pytest.approx(0.8 * 1.0 + 0.2 * 0.5)
        assert rows[0].has_pairs and not rows[1].has_pairs
        assert rows[0].decisive_contradiction  # 0.7 >= 0.6
        assert not rows[1].decisive_contradiction

    def test_decisive_threshold_only_flags(self):
        claims = [_claim("c1", 1.0)]
        pairs = [_pair("c1", "e1", 0.2, 0.2, 0.59)]
        lo = compute_indices(claims, pairs, decisive_threshold=0.6)
        hi = compute_indices(claims, pairs, decisive_threshold=0.5)
        assert lo[:3] == hi[:3]
        assert not lo[3][0].decisive_contradiction
        assert hi[3][0].decisive_contradiction

    def test_unknown_claim_in_pair_rejected(self):
        with pytest.raises(ValueError):
            compute_indices([_claim("c1", 1.0)], [_pair("nope", "e1", 1, 0, 0)])

    def test_matches_bruteforce_random(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 6))
            claims = [
                _claim(f"c{i}", float(rng.uniform(0, 1)), float(rng.uniform(0, 1)))
                for i in range(n)
            ]
            pairs = []
            for i in range(n):
                for j in range(int(rng.integers(0, 3))):
                    probs = rng.dirichlet(np.ones(3))
                    pairs.append(
                        _pair(f"c{i}", f"e{i}-{j}", probs[0], probs[1], probs[2])
                    )
            cci, ess, cii, _ = compute_indices(claims, pairs)

            confs = np.array([c.confidence for c in claims])
            w = confs / confs.sum() if confs.sum() > 0 else np.full(n, 1.0 / n)
            contra = np.zeros(n)
            supp = np.zeros(n)
            has = np.zeros(n, dtype=bool)
            for p in pairs:
                i = int(p.claim_id[1:])
                has[i] = True
                contra[i] = max(contra[i], p.p_contradict)
                supp[i] = max(supp[i], p.p_entail)
            mass = w[has].sum()
            want_cci = float((w[has] * contra[has]).sum() / mass) if mass > 0 else 0.0
            assert cci == pytest.approx(want_cci, abs=1e-12)
            assert ess == pytest.approx(float((w * supp).sum()), abs=1e-12)
            inten = np.array([c.intensity for c in claims])
            assert cii == pytest.approx(float((w * inten).sum()), abs=1e-12)

    @given(
        confs=st.lists(st.floats(0.0, 1.0), min_size=1, max_size=5),
        intens=st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_indices_bounded(self, confs, intens):
        claims = [
            _claim(f"c{i}", c, intens.draw(st.sampled_from([0.0, 1 / 3, 2 / 3, 1.0])))
            for i, c in enumerate(confs)
        ]
        pairs = [_pair("c0", "e0", 0.3, 0.3, 0.4)]
        cci, ess, cii, _ = compute_indices(claims, pairs)
        eps = 1e-9  # weight normalization can overshoot 1 by float error
        assert 0.0 <= cci <= 1.0 + eps
        assert 0.0 <= ess <= 1.0 + eps
        assert 0.0 <= cii <= 1.0 + eps
