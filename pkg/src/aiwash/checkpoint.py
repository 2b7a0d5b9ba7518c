"""Versioned JSON checkpoints for trained models.

Arrays are stored row-major as plain lists with shapes; floats rely on
Python repr, which round-trips exactly, so save -> load -> save is
byte-identical. The format id is checked on load so stale checkpoints fail
loudly instead of mis-assembling.
"""
from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .errors import AiwashError
from .fusion import (
    MODEL_FORMAT,
    CmidModel,
    GateNet,
    ModelConfig,
    MotivationHead,
)
from .grounding import GroundingNet, PanelStats
from .reasoner import ExtractionHead, NliHead


class CheckpointError(AiwashError):
    def __init__(self, message: str, code: str = "CHECKPOINT_ERROR"):
        super().__init__(message, code=code)


def model_to_record(model: CmidModel) -> dict:
    params = {}
    for name, arr in model.parameters().items():
        params[name] = {"shape": list(arr.shape), "data": arr.ravel().tolist()}
    config = asdict(model.config)
    config["loss_weights"] = list(config["loss_weights"])
    return {
        "format": MODEL_FORMAT,
        "version": model.version,
        "config": config,
        "params": params,
        "scalars": dict(model.scalar_parameters()),
        "panel_stats": model.panel_stats.to_record() if model.panel_stats else None,
    }


def _array(entry: dict, name: str) -> np.ndarray:
    arr = np.asarray(entry["data"], dtype=np.float64).reshape(entry["shape"])
    if not np.all(np.isfinite(arr)):
        raise CheckpointError(f"non-finite values in parameter {name!r}")
    return arr


def model_from_record(record: dict) -> CmidModel:
    if record.get("format") != MODEL_FORMAT:
        raise CheckpointError(
            f"unsupported checkpoint format {record.get('format')!r}", code="FORMAT_MISMATCH"
        )
    try:
        config_rec = dict(record["config"])
        config_rec["loss_weights"] = tuple(config_rec["loss_weights"])
        config = ModelConfig(**config_rec)
        params = record["params"]
    except (KeyError, TypeError) as exc:
        raise CheckpointError(f"malformed checkpoint record: {exc}") from exc

    def get(name: str) -> np.ndarray:
        try:
            return _array(params[name], name)
        except KeyError:
            raise CheckpointError(f"checkpoint missing parameter {name!r}") from None

    sector_table = {}
    for name in params:
        if name.startswith("gate.sector."):
            sector_table[name[len("gate.sector.") :]] = get(name)

    scalars = record["scalars"]
    model = CmidModel(
        config=config,
        extraction=ExtractionHead(
            start_weights=get("extraction.start_weights"),
            end_weights=get("extraction.end_weights"),
            bias=float(scalars["extraction.bias"]),
        ),
        nli=NliHead(weights=get("nli.weights"), bias=get("nli.bias")),
        grounding=GroundingNet(
            w1=get("grounding.w1"),
            b1=get("grounding.b1"),
            w2=get("grounding.w2"),
            b2=get("grounding.b2"),
            out_w=get("grounding.out_w"),
            out_b=float(scalars["grounding.out_b"]),
            layout_version=config.layout_version,
        ),
        gate=GateNet(weights=get("gate.weights"), bias=get("gate.bias"), sector_table=sector_table),
        motivation=MotivationHead(weights=get("motivation.weights"), bias=get("motivation.bias")),
        panel_stats=(
            PanelStats.from_record(record["panel_stats"]) if record.get("panel_stats") else None
        ),
        version=record.get("version", "aiwash-0.1.0"),
    )
    return model


def save_model(model: CmidModel, path: str | Path) -> None:
    record = model_to_record(model)
    text = json.dumps(record, sort_keys=True, separators=(",", ":"))
    Path(path).write_text(text + "\n", encoding="utf-8")


def load_model(path: str | Path) -> CmidModel:
    try:
        record = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CheckpointError(f"malformed checkpoint: {exc}") from exc
    return model_from_record(record)
