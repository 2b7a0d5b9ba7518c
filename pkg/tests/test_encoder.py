from __future__ import annotations

import numpy as np
import pytest

from aiwash.core import EvidenceItem, TextDoc
from aiwash.encoder import (
    EncoderError,
    HashingProvider,
    ProviderError,
    RemoteProvider,
    embed_claim_text,
    embed_evidence,
    embed_tokens,
)
from aiwash.ingest import tokenize


class TestHashingProvider:
    def test_deterministic_across_instances(self):
        a = HashingProvider(dim=32, seed=13).embed_text(["fully deployed ai"])
        b = HashingProvider(dim=32, seed=13).embed_text(["fully deployed ai"])
        np.testing.assert_array_equal(a, b)

    def test_seed_and_dim_change_output(self):
        text = ["fully deployed ai"]
        base = HashingProvider(dim=32, seed=13).embed_text(text)
        other_seed = HashingProvider(dim=32, seed=14).embed_text(text)
        assert not np.array_equal(base, other_seed)
        assert HashingProvider(dim=16, seed=13).embed_text(text).shape == (1, 16)

    def test_unit_norm_nonempty(self, rng):
        provider = HashingProvider(dim=64, seed=13)
        vecs = provider.embed_text(["a b c", "machine learning at scale", "x"])
        norms = np.linalg.norm(vecs, axis=1)
        np.testing.assert_allclose(norms, 1.0, atol=1e-12)

    def test_empty_text_is_zero_vector(self):
        provider = HashingProvider(dim=8, seed=13)
        vec = provider.embed_text([""])
        np.testing.assert_array_equal(vec, np.zeros((1, 8)))
        assert provider.embed_text([]).shape == (0, 8)

    def test_case_insensitive(self):
        provider = HashingProvider(dim=32, seed=13)
        a = provider.embed_text(["Fully Deployed AI"])
        b = provider.embed_text(["fully deployed ai"])
        np.testing.assert_array_equal(a, b)

    def test_bigrams_order_sensitive(self):
        provider = HashingProvider(dim=64, seed=13)
        a = provider.embed_text(["alpha beta"])[0]
        b = provider.embed_text(["beta alpha"])[0]
        assert not np.allclose(a, b)

    def test_payload_projection_linear_and_cached(self):
        provider = HashingProvider(dim=16, seed=13)
        x = np.arange(5, dtype=np.float64)
        y = np.ones(5)
        lhs = provider.project_payload(2.0 * x + y)
        rhs = 2.0 * provider.project_payload(x) + provider.project_payload(y)
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)
        again = HashingProvider(dim=16, seed=13).project_payload(x)
        np.testing.assert_array_equal(provider.project_payload(x), again)

    def test_invalid_dim_rejected(self):
        with pytest.raises(ValueError):
            HashingProvider(dim=0)


class TestEmbedHelpers:
    def test_embed_tokens_mean_pool(self):
        provider = HashingProvider(dim=32, seed=13)
        doc = tokenize(TextDoc("d", "fully deployed ai stack"))
        hidden, pooled = embed_tokens(doc, provider)
        assert hidden.shape == (4, 32)
        np.testing.assert_allclose(pooled, hidden.mean(axis=0), atol=1e-12)

    def test_embed_tokens_empty(self):
        provider = HashingProvider(dim=32, seed=13)
        hidden, pooled = embed_tokens(tokenize(TextDoc("d", "")), provider)
        assert hidden.shape == (0, 32)
        np.testing.assert_array_equal(pooled, np.zeros(32))

    def test_embed_evidence_text_only(self):
        provider = HashingProvider(dim=32, seed=13)
        item = EvidenceItem("e1", "patent", "granted claims on model serving")
        emb = embed_evidence(item, provider)
        np.testing.assert_array_equal(
            emb.vector, provider.embed_text([item.surface_text])[0]
        )
        assert emb.provenance == provider.name

    def test_embed_evidence_payload_plus_text(self):
        provider = HashingProvider(dim=32, seed=13)
        payload = tuple(float(i) for i in range(7))
        item = EvidenceItem("e1", "filing", "capex table", feature_payload=payload)
        emb = embed_evidence(item, provider)
        expect = provider.embed_text(["capex table"])[0] + provider.project_payload(
            np.asarray(payload)
        )
        np.testing.assert_allclose(emb.vector, expect, atol=1e-12)

    def test_embed_evidence_needs_content(self):
        provider = HashingProvider(dim=8, seed=13)
        with pytest.raises(EncoderError):
            embed_evidence(EvidenceItem("e1", "patent", ""), provider)

    def test_embed_claim_text_matches_provider(self):
        provider = HashingProvider(dim=32, seed=13)
        np.testing.assert_array_equal(
            embed_claim_text("we deployed ai", provider),
            provider.embed_text(["we deployed ai"])[0],
        )


class _FakeResponse:
    def __init__(self, status_code, payload):
        self.status_code = status_code
        self._payload = payload

    def json(self):
        return self._payload


class _FakeClient:
    def __init__(self, responses):
        self.responses = list(responses)
        self.calls = []

    def post(self, url, json=None):
        self.calls.append(json)
        return self.responses.pop(0)


class TestRemoteProvider:
    def test_batching_preserves_order(self):
        def vec(i):
            return [float(i), 0.0]

        client = _FakeClient(
            [
                _FakeResponse(200, {"vectors": [vec(0), vec(1)]}),
                _FakeResponse(200, {"vectors": [vec(2)]}),
            ]
        )
        provider = RemoteProvider("http://x/embed", dim=2, batch_size=2, client=client)
        out = provider.embed_text(["a", "b", "c"])
        np.testing.assert_array_equal(out, [[0, 0], [1, 0], [2, 0]])
        assert [len(c["texts"]) for c in client.calls] == [2, 1]

    def test_server_error_is_retriable(self):
        client = _FakeClient([_FakeResponse(503, {})])
        provider = RemoteProvider("http://x/embed", dim=2, client=client)
        with pytest.raises(ProviderError) as exc:
            provider.embed_text(["a"])
        assert exc.value.retriable

    def test_client_error_not_retriable(self):
        client = _FakeClient([_FakeResponse(400, {})])
        provider = RemoteProvider("http://x/embed", dim=2, client=client)
        with pytest.raises(ProviderError) as exc:
            provider.embed_text(["a"])
        assert not exc.value.retriable

    def test_count_mismatch_rejected(self):
        client = _FakeClient([_FakeResponse(200, {"vectors": []})])
        provider = RemoteProvider("http://x/embed", dim=2, client=client)
        with pytest.raises(ProviderError):
            provider.embed_text(["a"])
