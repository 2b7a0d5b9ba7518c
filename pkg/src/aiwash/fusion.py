"""Gated fusion of the four risk signals into a 0-100 washing risk score,
plus the model container that holds every trainable head.

The fused input is x = (cci, 1-ess, cii, 1-tgi); the gate is a sigmoid
linear map of [sector embedding; context features] and the score is
100 * sigmoid(gate . x).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np

from .core import MOTIVATION_CATEGORY_COUNT, SignalVector
from .errors import AiwashError
from .grounding import GroundingNet, HIDDEN_1, HIDDEN_2, LAYOUT_SIZE, LAYOUT_V1, PanelStats
from .reasoner import (
    DEFAULT_CLAIM_THRESHOLD,
    DEFAULT_DECISIVE_THRESHOLD,
    DEFAULT_MAX_SPAN_TOKENS,
    DEFAULT_TOP_K,
    ExtractionHead,
    NliHead,
    sigmoid,
    softmax,
)

SECTOR_EMBED_DIM = 16
CONTEXT_DIM = 8
FUSION_INPUT_DIM = 4
GATE_INPUT_DIM = SECTOR_EMBED_DIM + CONTEXT_DIM
MOTIVATION_INPUT_DIM = FUSION_INPUT_DIM + CONTEXT_DIM
UNKNOWN_SECTOR = "<unk>"

MODEL_FORMAT = "aiwash.model.v1"

ABLATION_MODES = ("full", "no-grounding", "text-only")

# Positive-class base rate used for the detection loss class weight.
DEFAULT_POSITIVE_RATE = 0.124


@dataclass(frozen=True)
class ModelConfig:
    """Pipeline hyperparameters frozen into a trained model."""

    shared_dim: int = 768
    claim_threshold: float = DEFAULT_CLAIM_THRESHOLD
    max_span_tokens: int = DEFAULT_MAX_SPAN_TOKENS
    top_k: int = DEFAULT_TOP_K
    decisive_threshold: float = DEFAULT_DECISIVE_THRESHOLD
    flag_threshold: float = 50.0
    layout_version: str = LAYOUT_V1
    provider_seed: int = 13
    positive_rate: float = DEFAULT_POSITIVE_RATE
    loss_weights: tuple[float, float, float, float] = (1.0, 0.5, 0.5, 0.25)

    def class_weight(self) -> float:
        """Positive-class weight (1 - rate) / rate for the detection loss."""
        return (1.0 - self.positive_rate) / self.positive_rate


@dataclass
class GateNet:
    """Sigmoid gate over [sector embedding; context features].

    ``sector_table`` maps sector codes to learned 16-dim embeddings and
    always contains an ``<unk>`` fallback row.
    """

    weights: np.ndarray  # (4, 24)
    bias: np.ndarray  # (4,)
    sector_table: dict[str, np.ndarray]

    def firm_embedding(self, sector: str) -> np.ndarray:
        if sector in self.sector_table:
            return self.sector_table[sector]
        return self.sector_table[UNKNOWN_SECTOR]

    def sector_key(self, sector: str) -> str:
        return sector if sector in self.sector_table else UNKNOWN_SECTOR

    def gate(self, sector: str, context: np.ndarray) -> np.ndarray:
        stacked = np.concatenate([self.firm_embedding(sector), context])
        return sigmoid(self.weights @ stacked + self.bias)


@dataclass
class MotivationHead:
    """Softmax head over [x; context] scoring the five washing motivations."""

    weights: np.ndarray  # (5, 12)
    bias: np.ndarray  # (5,)

    def probs(self, features: np.ndarray) -> np.ndarray:
        return softmax(self.weights @ features + self.bias)


def compute_awrs(signals: SignalVector, gate: np.ndarray) -> float:
    """Washing risk score: 100 * sigmoid(gate . (cci, 1-ess, cii, 1-tgi)).

    Gate components must lie in [0,1]; signals must each lie in [0,1].
    """
    gate = np.asarray(gate, dtype=np.float64)
    if gate.shape != (FUSION_INPUT_DIM,):
        raise ValueError(f"gate must have {FUSION_INPUT_DIM} components")
    if np.any(gate < 0.0) or np.any(gate > 1.0):
        raise ValueError("gate components must be in [0, 1]")
    x = np.asarray(signals.fusion_input(), dtype=np.float64)
    if np.any(x < -1e-9) or np.any(x > 1.0 + 1e-9):
        raise ValueError("signal components must be in [0, 1]")
    return float(100.0 * sigmoid(float(gate @ x)))


def context_features(
    *,
    n_claims: int,
    n_evidence: int,
    n_image: int,
    n_video: int,
    mean_similarity: float,
    mean_confidence: float,
    total_tokens: int,
    ablation: str = "full",
) -> np.ndarray:
    """The 8 context features feeding the gate and motivation heads.

    Order: normalized claim count, normalized evidence count, image share,
    video share, mean retrieval similarity, mean claim confidence, text
    length scale, modality-coverage flag. Counts are squashed as n/(n+10);
    length scale is log1p(tokens)/10; the coverage flag is 1 only when both
    modalities appear. Text-only ablation zeroes the evidence-derived slots.
    """
    n_items = max(n_evidence, 1)
    ctx = np.array(
        [
            n_claims / (n_claims + 10.0),
            n_evidence / (n_evidence + 10.0),
            n_image / n_items,
            n_video / n_items,
            mean_similarity,
            mean_confidence,
            math.log1p(total_tokens) / 10.0,
            1.0 if (n_image > 0 and n_video > 0) else 0.0,
        ],
        dtype=np.float64,
    )
    if ablation == "text-only":
        ctx[1] = 0.0
        ctx[2] = 0.0
        ctx[3] = 0.0
        ctx[4] = 0.0
        ctx[7] = 0.0
    return ctx


@dataclass
class CmidModel:
    """Every trainable head plus configuration and fitted panel statistics."""

    config: ModelConfig
    extraction: ExtractionHead
    nli: NliHead
    grounding: GroundingNet
    gate: GateNet
    motivation: MotivationHead
    panel_stats: PanelStats | None = None
    version: str = "aiwash-0.1.0"

    def parameters(self) -> dict[str, np.ndarray]:
        """Named views of every trainable array (mutating them updates the model)."""
        params = {
            "extraction.start_weights": self.extraction.start_weights,
            "extraction.end_weights": self.extraction.end_weights,
            "nli.weights": self.nli.weights,
            "nli.bias": self.nli.bias,
            "grounding.w1": self.grounding.w1,
            "grounding.b1": self.grounding.b1,
            "grounding.w2": self.grounding.w2,
            "grounding.b2": self.grounding.b2,
            "grounding.out_w": self.grounding.out_w,
            "gate.weights": self.gate.weights,
            "gate.bias": self.gate.bias,
            "motivation.weights": self.motivation.weights,
            "motivation.bias": self.motivation.bias,
        }
        for sector in sorted(self.gate.sector_table):
            params[f"gate.sector.{sector}"] = self.gate.sector_table[sector]
        return params

    def scalar_parameters(self) -> dict[str, float]:
        """Trainable scalars that cannot be exposed as array views."""
        return {
            "extraction.bias": self.extraction.bias,
            "grounding.out_b": self.grounding.out_b,
        }

    def set_scalar(self, name: str, value: float) -> None:
        if name == "extraction.bias":
            self.extraction.bias = float(value)
        elif name == "grounding.out_b":
            self.grounding.out_b = float(value)
        else:
            raise KeyError(name)

    def parameter_count(self) -> int:
        return sum(p.size for p in self.parameters().values()) + len(self.scalar_parameters())

    def with_threshold(self, threshold: float) -> "CmidModel":
        return replace_config(self, flag_threshold=float(threshold))


def replace_config(model: CmidModel, **changes) -> CmidModel:
    model.config = replace(model.config, **changes)
    return model


def init_model(
    config: ModelConfig,
    sectors: Sequence[str],
    seed: int = 0,
    version: str = "aiwash-0.1.0",
) -> CmidModel:
    """Deterministic initialization of every head.

    The extraction bias starts at logit(0.6) over near-zero weights so span
    selection is permissive before training; the grounding output head starts
    at zero so the grounding index opens at 0.5.
    """
    rng = np.random.default_rng((seed, 0xA1))
    dim = config.shared_dim
    extraction = ExtractionHead(
        start_weights=rng.normal(0.0, 0.02, dim) / np.sqrt(dim),
        end_weights=rng.normal(0.0, 0.02, dim) / np.sqrt(dim),
        bias=float(np.log(0.6 / 0.4)),
    )
    nli = NliHead(
        weights=rng.normal(0.0, 0.1, (3, 2 * dim)) / np.sqrt(2 * dim),
        bias=np.zeros(3, dtype=np.float64),
    )
    grounding = GroundingNet(
        w1=rng.normal(0.0, 1.0, (HIDDEN_1, LAYOUT_SIZE)) * np.sqrt(2.0 / LAYOUT_SIZE),
        b1=np.full(HIDDEN_1, 0.01, dtype=np.float64),
        w2=rng.normal(0.0, 1.0, (HIDDEN_2, HIDDEN_1)) * np.sqrt(2.0 / HIDDEN_1),
        b2=np.full(HIDDEN_2, 0.01, dtype=np.float64),
        out_w=np.zeros(HIDDEN_2, dtype=np.float64),
        out_b=0.0,
        layout_version=config.layout_version,
    )
    table = {
        sector: rng.normal(0.0, 0.1, SECTOR_EMBED_DIM)
        for sector in sorted(set(sectors) | {UNKNOWN_SECTOR})
    }
    gate = GateNet(
        weights=rng.normal(0.0, 0.1, (FUSION_INPUT_DIM, GATE_INPUT_DIM))
        / np.sqrt(GATE_INPUT_DIM),
        bias=np.zeros(FUSION_INPUT_DIM, dtype=np.float64),
        sector_table=table,
    )
    motivation = MotivationHead(
        weights=np.zeros((MOTIVATION_CATEGORY_COUNT, MOTIVATION_INPUT_DIM), dtype=np.float64),
        bias=np.zeros(MOTIVATION_CATEGORY_COUNT, dtype=np.float64),
    )
    return CmidModel(
        config=config,
        extraction=extraction,
        nli=nli,
        grounding=grounding,
        gate=gate,
        motivation=motivation,
        version=version,
    )
