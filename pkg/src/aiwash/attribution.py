"""Exact Shapley attribution of a risk score to its four input signals.

With only four signals the 16 coalition values are enumerated directly, so
the attributions are exact rather than sampled. A signal's contribution is
measured against a neutral baseline (no contradiction, full support, zero
intensity, full grounding) whose fused score is exactly 50.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial

import numpy as np

from .core import SignalVector
from .fusion import compute_awrs

SIGNAL_NAMES = ("contradiction", "support_deficit", "intensity", "grounding_deficit")

BASELINE = SignalVector(cci=0.0, ess=1.0, cii=0.0, tgi=1.0)

_N = 4


@dataclass(frozen=True)
class Attribution:
    """Per-signal Shapley values and pairwise interactions for one score."""

    awrs: float
    baseline: float
    shapley: tuple[float, float, float, float]
    interactions: tuple[tuple[float, ...], ...]  # 4x4, zero diagonal

    def as_record(self) -> dict:
        return {
            "awrs": self.awrs,
            "baseline": self.baseline,
            "shapley": {name: val for name, val in zip(SIGNAL_NAMES, self.shapley)},
            "interactions": [list(row) for row in self.interactions],
        }


def coalition_value(signals: SignalVector, gate: np.ndarray, members: frozenset[int]) -> float:
    """Fused score with the signals outside ``members`` held at baseline.

    Membership indices follow the fusion input order: contradiction,
    support deficit, intensity, grounding deficit.
    """
    actual = signals.fusion_input()
    base = BASELINE.fusion_input()
    mixed = np.asarray(
        [actual[i] if i in members else base[i] for i in range(_N)], dtype=np.float64
    )
    vec = SignalVector(
        cci=float(mixed[0]),
        ess=float(1.0 - mixed[1]),
        cii=float(mixed[2]),
        tgi=float(1.0 - mixed[3]),
    )
    return compute_awrs(vec, gate)


def _all_values(signals: SignalVector, gate: np.ndarray) -> dict[frozenset[int], float]:
    values: dict[frozenset[int], float] = {}
    for r in range(_N + 1):
        for members in combinations(range(_N), r):
            key = frozenset(members)
            values[key] = coalition_value(signals, gate, key)
    return values


def shapley_values(signals: SignalVector, gate: np.ndarray) -> Attribution:
    """Exact Shapley values plus the pairwise interaction index.

    The Shapley values sum to the difference between the full score and the
    baseline score (efficiency). The interaction matrix is symmetric with a
    zero diagonal; entry (i, j) averages the discrete cross-difference of
    adding i and j together versus separately over all coalitions of the
    remaining signals.
    """
    values = _all_values(signals, gate)
    full = values[frozenset(range(_N))]
    empty = values[frozenset()]

    phi = np.zeros(_N, dtype=np.float64)
    others = [[j for j in range(_N) if j != i] for i in range(_N)]
    for i in range(_N):
        for r in range(_N):
            weight = factorial(r) * factorial(_N - r - 1) / factorial(_N)
            for subset in combinations(others[i], r):
                s = frozenset(subset)
                phi[i] += weight * (values[s | {i}] - values[s])

    inter = np.zeros((_N, _N), dtype=np.float64)
    for i in range(_N):
        for j in range(i + 1, _N):
            rest = [k for k in range(_N) if k not in (i, j)]
            total = 0.0
            for r in range(len(rest) + 1):
                weight = factorial(r) * factorial(_N - r - 2) / factorial(_N - 1)
                for subset in combinations(rest, r):
                    s = frozenset(subset)
                    delta = (
                        values[s | {i, j}]
                        - values[s | {i}]
                        - values[s | {j}]
                        + values[s]
                    )
                    total += weight * delta
            inter[i, j] = total
            inter[j, i] = total

    return Attribution(
        awrs=float(full),
        baseline=float(empty),
        shapley=tuple(float(v) for v in phi),
        interactions=tuple(tuple(float(v) for v in row) for row in inter),
    )
