"""Embedding providers and text/evidence encoding into a shared vector space.

The built-in provider uses signed feature hashing of token unigrams and
bigrams; it is fully deterministic given (dim, seed) and needs no network.
A remote provider speaking a small JSON batch protocol is also available.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

from .core import EvidenceItem, TextDoc
from .errors import EncoderError, ProviderError
from .ingest import TokenizedDoc, tokenize

DEFAULT_SHARED_DIM = 768


@dataclass(frozen=True)
class Embedding:
    """A vector in the shared space plus the provider that produced it."""

    vector: np.ndarray
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "vector", np.asarray(self.vector, dtype=np.float64))


class EmbeddingProvider(Protocol):
    name: str
    dim: int

    def embed_text(self, texts: Sequence[str]) -> np.ndarray:
        """Batch-embed texts into (len(texts), dim); deterministic per input."""
        ...

    def project_payload(self, payload: np.ndarray) -> np.ndarray:
        """Linearly map a native feature payload into the shared space."""
        ...


def _stable_hash(data: str, seed: int) -> int:
    digest = hashlib.blake2b(
        data.encode("utf-8"), digest_size=8, key=str(seed).encode("utf-8")[:64]
    ).digest()
    return int.from_bytes(digest, "big")


class HashingProvider:
    """Signed feature hashing of token n-grams (n=1,2), L2-normalized.

    Empty text maps to the zero vector. The same (dim, seed) pair always
    produces byte-identical vectors for the same input, across processes.
    """

    def __init__(self, dim: int = DEFAULT_SHARED_DIM, seed: int = 13):
        if dim <= 0:
            raise ValueError("dim must be positive")
        self.dim = dim
        self.seed = seed
        self.name = f"hash-v1:d{dim}:s{seed}"
        self._projections: dict[int, np.ndarray] = {}

    def _embed_one(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.float64)
        tokens = tokenize(TextDoc("_", text.lower())).tokens
        if not tokens:
            return vec
        grams = list(tokens)
        grams.extend(f"{a}\x1f{b}" for a, b in zip(tokens, tokens[1:]))
        for gram in grams:
            h = _stable_hash(gram, self.seed)
            bucket = h % self.dim
            sign = 1.0 if (h >> 63) & 1 else -1.0
            vec[bucket] += sign
        norm = np.linalg.norm(vec)
        if norm > 0:
            vec /= norm
        return vec

    def embed_text(self, texts: Sequence[str]) -> np.ndarray:
        if len(texts) == 0:
            return np.zeros((0, self.dim), dtype=np.float64)
        return np.stack([self._embed_one(t) for t in texts])

    def project_payload(self, payload: np.ndarray) -> np.ndarray:
        payload = np.asarray(payload, dtype=np.float64)
        if payload.ndim != 1:
            raise ValueError("payload must be a 1-d vector")
        native = payload.shape[0]
        if native == 0:
            raise EncoderError("empty feature payload")
        proj = self._projections.get(native)
        if proj is None:
            rng = np.random.default_rng((self.seed, 0x5EED, native))
            proj = rng.standard_normal((self.dim, native)) / np.sqrt(native)
            self._projections[native] = proj
        return proj @ payload


class RemoteProvider:
    """Client for an embedding endpoint: POST {"texts": [...]} -> {"vectors": [...]}.

    Failures raise ProviderError; connection-level problems and 5xx responses
    are marked retriable, protocol violations are not. Requests are batched;
    batching never changes the returned vectors.
    """

    def __init__(self, url: str, dim: int, *, batch_size: int = 64, client=None, name: str | None = None):
        self.url = url
        self.dim = dim
        self.batch_size = max(1, batch_size)
        self.name = name or f"remote:{url}"
        if client is None:
            import httpx

            client = httpx.Client(timeout=30.0)
        self._client = client

    def embed_text(self, texts: Sequence[str]) -> np.ndarray:
        rows: list[list[float]] = []
        for start in range(0, len(texts), self.batch_size):
            chunk = list(texts[start : start + self.batch_size])
            try:
                resp = self._client.post(self.url, json={"texts": chunk})
            except Exception as exc:
                raise ProviderError(f"embedding request failed: {exc}", retriable=True) from exc
            if resp.status_code >= 500:
                raise ProviderError(f"embedding server error {resp.status_code}", retriable=True)
            if resp.status_code >= 400:
                raise ProviderError(f"embedding request rejected {resp.status_code}", retriable=False)
            try:
                vectors = resp.json()["vectors"]
            except (json.JSONDecodeError, KeyError) as exc:
                raise ProviderError("malformed embedding response", retriable=False) from exc
            if len(vectors) != len(chunk):
                raise ProviderError("embedding response count mismatch", retriable=False)
            rows.extend(vectors)
        arr = np.asarray(rows, dtype=np.float64)
        if len(texts) == 0:
            return np.zeros((0, self.dim), dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != self.dim:
            raise ProviderError(
                f"embedding dimension mismatch: expected {self.dim}, got {arr.shape}",
                retriable=False,
            )
        return arr

    def project_payload(self, payload: np.ndarray) -> np.ndarray:
        raise ProviderError("remote provider has no payload projection", retriable=False)


def embed_tokens(doc: TokenizedDoc, provider: EmbeddingProvider) -> tuple[np.ndarray, np.ndarray]:
    """Per-token embeddings H (n, dim) and their mean-pooled doc vector.

    An empty doc yields an empty H and a zero doc vector.
    """
    if not doc.tokens:
        return (
            np.zeros((0, provider.dim), dtype=np.float64),
            np.zeros(provider.dim, dtype=np.float64),
        )
    hidden = provider.embed_text(list(doc.tokens))
    return hidden, hidden.mean(axis=0)


def embed_evidence(item: EvidenceItem, provider: EmbeddingProvider) -> Embedding:
    """Encode one evidence item into the shared space.

    Payload-bearing items use the provider's linear projection; text-bearing
    items use the text path; items with both use the sum of the two vectors.
    """
    has_payload = item.feature_payload is not None and len(item.feature_payload) > 0
    has_text = bool(item.surface_text)
    if not has_payload and not has_text:
        raise EncoderError(
            f"evidence {item.evidence_id!r} has neither surface_text nor feature_payload"
        )
    vec = np.zeros(provider.dim, dtype=np.float64)
    if has_payload:
        vec = vec + provider.project_payload(np.asarray(item.feature_payload, dtype=np.float64))
    if has_text:
        vec = vec + provider.embed_text([item.surface_text])[0]
    return Embedding(vec, provenance=provider.name)


def embed_claim_text(text: str, provider: EmbeddingProvider) -> np.ndarray:
    """Claim-side encoder: the provider's text embedding of the claim surface."""
    return provider.embed_text([text])[0]
