"""Shared fixtures: a small deterministic corpus and an initialized model."""
from __future__ import annotations

import numpy as np
import pytest

from aiwash.fusion import ModelConfig, init_model
from aiwash.grounding import fit_panel_stats
from aiwash.synth import SyntheticConfig, generate_corpus

TEST_DIM = 64


@pytest.fixture(scope="session")
def small_corpus():
    bundles, manifest = generate_corpus(SyntheticConfig(n_firms=14, n_quarters=2, seed=29))
    return bundles, manifest


@pytest.fixture(scope="session")
def small_bundles(small_corpus):
    return small_corpus[0]


@pytest.fixture(scope="session")
def base_model(small_bundles):
    model = init_model(
        ModelConfig(shared_dim=TEST_DIM),
        sectors=sorted({b.sector for b in small_bundles}),
        seed=0,
    )
    model.panel_stats = fit_panel_stats(
        (b.operational for b in small_bundles), model.config.layout_version
    )
    return model


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)
