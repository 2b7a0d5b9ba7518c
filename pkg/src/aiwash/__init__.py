"""Disclosure-integrity scoring for AI capability claims.

The package ingests firm-quarter disclosure bundles (text plus image and
video evidence plus operational records), extracts capability claims,
checks them against retrieved evidence, grounds them in operational data,
and fuses the signals into a 0-100 washing risk score with exact Shapley
attributions and reviewable evidence reports.
"""
from .core import (
    Claim,
    ComputeQuarter,
    EvidenceItem,
    FirmQuarterBundle,
    GoldLabels,
    JobsQuarter,
    OperationalRecords,
    PatentQuarter,
    RndQuarter,
    SignalVector,
    TextDoc,
    validate_bundle,
)
from .errors import AiwashError, SchemaError, ValidationFailure
from .fusion import CmidModel, ModelConfig, compute_awrs, init_model
from .pipeline import Prediction, predict
from .attribution import Attribution, shapley_values
from .checkpoint import load_model, save_model
from .report import EvidenceReport, build_report
from .synth import SyntheticConfig, generate_corpus, perturb_bundle
from .train import Dataset, TrainConfig, fit, gradient_check, split_by_firm

__version__ = "0.1.0"

__all__ = [
    "AiwashError",
    "Attribution",
    "Claim",
    "CmidModel",
    "ComputeQuarter",
    "Dataset",
    "EvidenceItem",
    "EvidenceReport",
    "FirmQuarterBundle",
    "GoldLabels",
    "JobsQuarter",
    "ModelConfig",
    "OperationalRecords",
    "PatentQuarter",
    "Prediction",
    "RndQuarter",
    "SchemaError",
    "SignalVector",
    "SyntheticConfig",
    "TextDoc",
    "TrainConfig",
    "ValidationFailure",
    "build_report",
    "compute_awrs",
    "fit",
    "generate_corpus",
    "gradient_check",
    "init_model",
    "load_model",
    "perturb_bundle",
    "predict",
    "save_model",
    "shapley_values",
    "split_by_firm",
    "validate_bundle",
    "__version__",
]
