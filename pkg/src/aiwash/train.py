"""Joint training of every head with hand-derived analytic gradients.

The loss is a weighted sum of four terms: class-weighted binary
cross-entropy on the washing probability, mean squared error on the
normalized severity score, cross-entropy on gold claim-evidence entailment
pairs, and cross-entropy on the motivation category. Optimization is Adam
with decoupled weight decay; gradients are validated against central finite
differences by ``gradient_check``.
"""
from __future__ import annotations

import copy
import logging
from dataclasses import dataclass

import numpy as np

from .core import FirmQuarterBundle
from .errors import TrainError
from .fusion import CmidModel
from .grounding import fit_panel_stats
from .pipeline import BundleForward, PreparedBundle, forward_bundle, make_provider, prepare_bundle

logger = logging.getLogger(__name__)

_CLIP = 1e-9  # probability clip for the detection log-loss

SCALAR_PARAMS = ("extraction.bias", "grounding.out_b")


@dataclass
class TrainConfig:
    epochs: int = 60
    batch_size: int = 64
    learning_rate: float = 1e-3
    weight_decay: float = 1e-5
    patience: int = 8
    seed: int = 0
    ablation: str = "full"
    betas: tuple[float, float] = (0.9, 0.999)
    adam_eps: float = 1e-8


@dataclass
class Dataset:
    train: list[FirmQuarterBundle]
    dev: list[FirmQuarterBundle]


@dataclass
class FitResult:
    model: CmidModel
    history: list[dict]
    best_epoch: int
    threshold: float


def split_by_firm(
    bundles: list[FirmQuarterBundle], dev_fraction: float = 0.2, seed: int = 0
) -> Dataset:
    """Deterministic firm-level split so no firm straddles train and dev."""
    firms = sorted({b.firm_id for b in bundles})
    rng = np.random.default_rng((seed, 0xDE))
    order = rng.permutation(len(firms))
    n_dev = max(1, int(round(dev_fraction * len(firms)))) if len(firms) > 1 else 0
    dev_firms = {firms[i] for i in order[:n_dev]}
    train = [b for b in bundles if b.firm_id not in dev_firms]
    dev = [b for b in bundles if b.firm_id in dev_firms]
    return Dataset(train=train, dev=dev)


def _zero_grads(model: CmidModel) -> dict[str, np.ndarray | float]:
    grads: dict[str, np.ndarray | float] = {
        name: np.zeros_like(arr) for name, arr in model.parameters().items()
    }
    for name in SCALAR_PARAMS:
        grads[name] = 0.0
    return grads


def _softmax_backward(probs: np.ndarray, dprobs: np.ndarray) -> np.ndarray:
    """Jacobian-vector product through a row-wise softmax."""
    inner = (dprobs * probs).sum(axis=-1, keepdims=True)
    return probs * (dprobs - inner)


def _backward_bundle(
    model: CmidModel,
    prep: PreparedBundle,
    fw: BundleForward,
    d_p_wash: float,
    d_mot_logits: np.ndarray | None,
    grads: dict,
) -> None:
    """Accumulate parameter gradients for one bundle.

    The claim-span selection and evidence retrieval are treated as fixed;
    gradients flow through confidences, entailment probabilities, the
    grounding MLP, the gate, and the motivation head.
    """
    gate = fw.gate
    x = fw.x
    m = len(fw.selection)

    d_x = np.zeros(4, dtype=np.float64)
    d_ctx = np.zeros(8, dtype=np.float64)

    if d_mot_logits is not None:
        grads["motivation.weights"] += np.outer(d_mot_logits, fw.mot_in)
        grads["motivation.bias"] += d_mot_logits
        d_mot_in = model.motivation.weights.T @ d_mot_logits
        d_x += d_mot_in[:4]
        d_ctx += d_mot_in[4:]

    if d_p_wash != 0.0:
        d_inner = d_p_wash * fw.p_wash * (1.0 - fw.p_wash)
        d_gate = d_inner * x
        d_x += d_inner * gate
        d_u = d_gate * gate * (1.0 - gate)
        grads["gate.weights"] += np.outer(d_u, fw.gate_in)
        grads["gate.bias"] += d_u
        d_gate_in = model.gate.weights.T @ d_u
        grads[f"gate.sector.{fw.sector_key}"] += d_gate_in[:16]
        d_ctx += d_gate_in[16:]

    d_cci = d_x[0]
    d_ess = -d_x[1]
    d_cii = d_x[2]
    d_tgi = -d_x[3]

    if fw.mode == "full" and d_tgi != 0.0:
        t = fw.tgi
        d_lin = d_tgi * t * (1.0 - t)
        h1 = np.maximum(fw.a1, 0.0)
        h2 = np.maximum(fw.a2, 0.0)
        grads["grounding.out_w"] += d_lin * h2
        grads["grounding.out_b"] += d_lin
        d_h2 = d_lin * model.grounding.out_w
        d_a2 = d_h2 * (fw.a2 > 0.0)
        grads["grounding.w2"] += np.outer(d_a2, h1)
        grads["grounding.b2"] += d_a2
        d_h1 = model.grounding.w2.T @ d_a2
        d_a1 = d_h1 * (fw.a1 > 0.0)
        grads["grounding.w1"] += np.outer(d_a1, prep.op_values)
        grads["grounding.b1"] += d_a1

    if m == 0:
        return

    w = fw.weights
    d_w = np.zeros(m, dtype=np.float64)
    d_contra = np.zeros(m, dtype=np.float64)
    d_supp = np.zeros(m, dtype=np.float64)

    mass = fw.weight_mass_with_pairs
    if mass > 0.0 and d_cci != 0.0:
        has = fw.has_pairs
        d_contra[has] = d_cci * w[has] / mass
        d_w[has] += d_cci * (fw.contra[has] - fw.cci) / mass
    d_w += d_ess * fw.supp
    d_supp += d_ess * w
    d_w += d_cii * fw.intensity

    if fw.pair_probs.shape[0]:
        d_q = np.zeros_like(fw.pair_probs)
        for i in range(m):
            if fw.contra_rows[i] >= 0 and d_contra[i] != 0.0:
                d_q[fw.contra_rows[i], 2] += d_contra[i]
            if fw.supp_rows[i] >= 0 and d_supp[i] != 0.0:
                d_q[fw.supp_rows[i], 0] += d_supp[i]
        if np.any(d_q):
            d_logits = _softmax_backward(fw.pair_probs, d_q)
            grads["nli.weights"] += d_logits.T @ fw.pair_feats
            grads["nli.bias"] += d_logits.sum(axis=0)

    # Confidence paths: normalized claim weights plus the mean-confidence
    # context slot.
    total_conf = fw.conf.sum()
    d_conf = np.full(m, d_ctx[5] / m, dtype=np.float64)
    if total_conf > 0.0:
        d_conf += (d_w - float(d_w @ w)) / total_conf
    d_z = d_conf * fw.conf * (1.0 - fw.conf)
    for i, (doc_idx, s, e) in enumerate(fw.selection):
        if d_z[i] == 0.0:
            continue
        hidden = prep.docs[doc_idx].hidden
        grads["extraction.start_weights"] += d_z[i] * hidden[s]
        grads["extraction.end_weights"] += d_z[i] * hidden[e - 1]
        grads["extraction.bias"] += d_z[i]


def batch_loss(
    model: CmidModel,
    preps: list[PreparedBundle],
    mode: str = "full",
    *,
    compute_grads: bool = True,
    fixed_selections: list[list[tuple[int, int, int]]] | None = None,
) -> tuple[float, dict[str, float], dict | None]:
    """Mean multi-task loss over a batch, optionally with gradients.

    Bundles without gold labels are skipped by the detection and regression
    terms; the entailment term runs over every gold pair in the batch; the
    motivation term runs over bundles with a motivation label. Raises
    EMPTY_BATCH on an empty batch.
    """
    if not preps:
        raise TrainError("empty training batch", code="EMPTY_BATCH")
    lam1, lam2, lam3, lam4 = model.config.loss_weights
    class_weight = model.config.class_weight()

    forwards: list[BundleForward] = []
    labeled = []
    motivated = []
    total_gold_pairs = 0
    for idx, prep in enumerate(preps):
        fixed = fixed_selections[idx] if fixed_selections is not None else None
        fw = forward_bundle(model, prep, mode, fixed_selection=fixed)
        forwards.append(fw)
        labels = prep.bundle.labels
        if labels is not None:
            labeled.append(idx)
            if labels.m is not None:
                motivated.append(idx)
        if mode != "text-only" and prep.gold_nli_feats is not None:
            total_gold_pairs += prep.gold_nli_feats.shape[0]

    n_labeled = len(labeled)
    n_motivated = len(motivated)

    det = 0.0
    reg = 0.0
    nli = 0.0
    mot = 0.0
    grads = _zero_grads(model) if compute_grads else None

    for idx, (prep, fw) in enumerate(zip(preps, forwards)):
        labels = prep.bundle.labels
        d_p_wash = 0.0
        d_mot_logits = None
        if labels is not None and n_labeled:
            p = min(max(fw.p_wash, _CLIP), 1.0 - _CLIP)
            y = labels.y
            det += (-class_weight * y * np.log(p) - (1 - y) * np.log(1.0 - p)) / n_labeled
            target = labels.s / 100.0
            reg += (fw.p_wash - target) ** 2 / n_labeled
            if compute_grads:
                d_det = (-class_weight * y / p + (1 - y) / (1.0 - p)) / n_labeled
                if fw.p_wash < _CLIP or fw.p_wash > 1.0 - _CLIP:
                    d_det = 0.0
                d_reg = 2.0 * (fw.p_wash - target) / n_labeled
                d_p_wash = lam1 * d_det + lam2 * d_reg
            if labels.m is not None and n_motivated:
                target_idx = labels.m - 1
                q = max(fw.mot_probs[target_idx], _CLIP)
                mot += -np.log(q) / n_motivated
                if compute_grads:
                    one_hot = np.zeros(5, dtype=np.float64)
                    one_hot[target_idx] = 1.0
                    d_mot_logits = lam4 * (fw.mot_probs - one_hot) / n_motivated
        if mode != "text-only" and prep.gold_nli_feats is not None and total_gold_pairs:
            logits = prep.gold_nli_feats @ model.nli.weights.T + model.nli.bias
            shifted = logits - logits.max(axis=1, keepdims=True)
            log_probs = shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))
            rows = np.arange(len(prep.gold_nli_labels))
            nli += -log_probs[rows, prep.gold_nli_labels].sum() / total_gold_pairs
            if compute_grads:
                probs = np.exp(log_probs)
                probs[rows, prep.gold_nli_labels] -= 1.0
                scale = lam3 / total_gold_pairs
                grads["nli.weights"] += scale * probs.T @ prep.gold_nli_feats
                grads["nli.bias"] += scale * probs.sum(axis=0)
        if compute_grads:
            _backward_bundle(model, prep, fw, d_p_wash, d_mot_logits, grads)

    total = lam1 * det + lam2 * reg + lam3 * nli + lam4 * mot
    terms = {"det": float(det), "reg": float(reg), "nli": float(nli), "mot": float(mot)}
    return float(total), terms, grads


@dataclass
class _AdamState:
    m: dict
    v: dict
    t: int = 0


def _adam_init(model: CmidModel) -> _AdamState:
    m = {name: np.zeros_like(arr) for name, arr in model.parameters().items()}
    v = {name: np.zeros_like(arr) for name, arr in model.parameters().items()}
    for name in SCALAR_PARAMS:
        m[name] = 0.0
        v[name] = 0.0
    return _AdamState(m=m, v=v)


def _adam_step(model: CmidModel, grads: dict, state: _AdamState, cfg: TrainConfig) -> None:
    b1, b2 = cfg.betas
    state.t += 1
    bias1 = 1.0 - b1**state.t
    bias2 = 1.0 - b2**state.t
    params = model.parameters()
    for name, arr in params.items():
        g = grads[name]
        state.m[name] = b1 * state.m[name] + (1.0 - b1) * g
        state.v[name] = b2 * state.v[name] + (1.0 - b2) * g * g
        m_hat = state.m[name] / bias1
        v_hat = state.v[name] / bias2
        arr -= cfg.learning_rate * (
            m_hat / (np.sqrt(v_hat) + cfg.adam_eps) + cfg.weight_decay * arr
        )
    scalars = model.scalar_parameters()
    for name in SCALAR_PARAMS:
        g = grads[name]
        state.m[name] = b1 * state.m[name] + (1.0 - b1) * g
        state.v[name] = b2 * state.v[name] + (1.0 - b2) * g * g
        m_hat = state.m[name] / bias1
        v_hat = state.v[name] / bias2
        value = scalars[name]
        model.set_scalar(
            name,
            value
            - cfg.learning_rate * (m_hat / (np.sqrt(v_hat) + cfg.adam_eps) + cfg.weight_decay * value),
        )


def _snapshot(model: CmidModel) -> dict:
    snap = {name: arr.copy() for name, arr in model.parameters().items()}
    snap.update(model.scalar_parameters())
    return snap


def _restore(model: CmidModel, snap: dict) -> None:
    for name, arr in model.parameters().items():
        arr[...] = snap[name]
    for name in SCALAR_PARAMS:
        model.set_scalar(name, snap[name])


def f1_score(y_true: np.ndarray, y_pred: np.ndarray) -> float:
    tp = int(np.sum((y_true == 1) & (y_pred == 1)))
    fp = int(np.sum((y_true == 0) & (y_pred == 1)))
    fn = int(np.sum((y_true == 1) & (y_pred == 0)))
    if tp == 0:
        return 0.0
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    return 2.0 * precision * recall / (precision + recall)


def best_threshold(scores, labels, current: float) -> tuple[float, float]:
    """Threshold maximizing F1 of (score >= threshold) against labels.

    When the current threshold already attains the maximum it is kept;
    otherwise ties prefer the candidate closest to the current value, then
    the larger one. Returns (threshold, f1).
    """
    scores = np.asarray(scores, dtype=np.float64)
    labels = np.asarray(labels, dtype=np.int64)
    candidates = sorted(set(scores.tolist()) | {0.0, 100.0, float(current)})
    best: tuple[float, float] | None = None
    current_f1 = None
    for theta in candidates:
        f1 = f1_score(labels, (scores >= theta).astype(np.int64))
        if theta == current:
            current_f1 = f1
        if (
            best is None
            or f1 > best[1] + 1e-12
            or (
                abs(f1 - best[1]) <= 1e-12
                and (abs(theta - current), -theta) < (abs(best[0] - current), -best[0])
            )
        ):
            best = (float(theta), float(f1))
    assert best is not None
    if current_f1 is not None and current_f1 >= best[1] - 1e-12:
        return float(current), float(current_f1)
    return best


def fit(dataset: Dataset, model_init: CmidModel, config: TrainConfig) -> FitResult:
    """Mini-batch training with early stopping on dev loss.

    Deterministic for a fixed seed: panel statistics come from the training
    split, batches are shuffled with a seeded generator, and the best-dev
    parameter snapshot is restored before the flag threshold is calibrated
    on the dev split. Raises DIVERGED when the loss goes non-finite.
    """
    if not dataset.train:
        raise TrainError("training split is empty", code="EMPTY_BATCH")
    model = copy.deepcopy(model_init)
    mode = config.ablation

    model.panel_stats = fit_panel_stats(
        (b.operational for b in dataset.train), model.config.layout_version
    )

    provider = make_provider(model)
    train_preps = [prepare_bundle(b, model, provider=provider, mode=mode) for b in dataset.train]
    dev_preps = [prepare_bundle(b, model, provider=provider, mode=mode) for b in dataset.dev]

    state = _adam_init(model)
    rng = np.random.default_rng((config.seed, 0x7EA1))
    history: list[dict] = []
    best_dev = np.inf
    best_snap = _snapshot(model)
    best_epoch = -1
    since_best = 0

    for epoch in range(config.epochs):
        order = rng.permutation(len(train_preps))
        epoch_loss = 0.0
        n_batches = 0
        for start in range(0, len(order), config.batch_size):
            batch = [train_preps[i] for i in order[start : start + config.batch_size]]
            loss, _, grads = batch_loss(model, batch, mode)
            if not np.isfinite(loss):
                raise TrainError(f"loss diverged at epoch {epoch}", code="DIVERGED")
            _adam_step(model, grads, state, config)
            epoch_loss += loss
            n_batches += 1
        train_loss = epoch_loss / max(n_batches, 1)

        if dev_preps:
            dev_loss, dev_terms, _ = batch_loss(model, dev_preps, mode, compute_grads=False)
        else:
            dev_loss, dev_terms = train_loss, {}
        if not np.isfinite(dev_loss):
            raise TrainError(f"dev loss diverged at epoch {epoch}", code="DIVERGED")
        history.append(
            {"epoch": epoch, "train_loss": float(train_loss), "dev_loss": float(dev_loss), **{f"dev_{k}": v for k, v in dev_terms.items()}}
        )
        logger.debug("epoch %d train %.5f dev %.5f", epoch, train_loss, dev_loss)

        if dev_loss < best_dev - 1e-9:
            best_dev = dev_loss
            best_snap = _snapshot(model)
            best_epoch = epoch
            since_best = 0
        else:
            since_best += 1
            if since_best > config.patience:
                break

    _restore(model, best_snap)

    calib_preps = dev_preps or train_preps
    scores = []
    labels = []
    for prep in calib_preps:
        if prep.bundle.labels is None:
            continue
        fw = forward_bundle(model, prep, mode)
        scores.append(fw.awrs)
        labels.append(prep.bundle.labels.y)
    threshold = model.config.flag_threshold
    if scores and any(labels):
        threshold, _ = best_threshold(scores, labels, model.config.flag_threshold)
    model.with_threshold(threshold)
    return FitResult(model=model, history=history, best_epoch=best_epoch, threshold=float(threshold))


@dataclass
class GradientCheckResult:
    max_relative_error: float
    checked: int
    worst_parameter: str


def gradient_check(
    model: CmidModel,
    bundles: list[FirmQuarterBundle],
    *,
    epsilon: float = 1e-5,
    sample: int = 500,
    seed: int = 0,
    mode: str = "full",
) -> GradientCheckResult:
    """Compare analytic gradients to central differences on a frozen batch.

    Claim selection is pinned at the evaluation point so both sides
    differentiate the same (smooth) function. At least ``sample`` randomly
    chosen scalar parameters are checked (all of them if fewer exist).
    Relative error uses a 1e-6 absolute floor in the denominator.
    """
    provider = make_provider(model)
    preps = [prepare_bundle(b, model, provider=provider, mode=mode) for b in bundles]
    fixed = [forward_bundle(model, p, mode).selection for p in preps]

    _, _, grads = batch_loss(model, preps, mode, fixed_selections=fixed)

    def loss_only() -> float:
        total, _, _ = batch_loss(model, preps, mode, compute_grads=False, fixed_selections=fixed)
        return total

    params = model.parameters()
    coords: list[tuple[str, int]] = []
    for name in sorted(params):
        coords.extend((name, i) for i in range(params[name].size))
    coords.extend((name, -1) for name in SCALAR_PARAMS)

    rng = np.random.default_rng((seed, 0x9C))
    if len(coords) > sample:
        chosen = rng.choice(len(coords), size=sample, replace=False)
        coords = [coords[i] for i in sorted(chosen)]

    max_err = 0.0
    worst = ""
    for name, flat in coords:
        if flat < 0:
            base = model.scalar_parameters()[name]
            model.set_scalar(name, base + epsilon)
            up = loss_only()
            model.set_scalar(name, base - epsilon)
            down = loss_only()
            model.set_scalar(name, base)
            analytic = grads[name]
        else:
            arr = params[name]
            base = arr.flat[flat]
            arr.flat[flat] = base + epsilon
            up = loss_only()
            arr.flat[flat] = base - epsilon
            down = loss_only()
            arr.flat[flat] = base
            analytic = grads[name].flat[flat]
        numeric = (up - down) / (2.0 * epsilon)
        err = abs(analytic - numeric) / max(abs(analytic), abs(numeric), 1e-6)
        if err > max_err:
            max_err = err
            worst = f"{name}[{flat}]"
    return GradientCheckResult(max_relative_error=float(max_err), checked=len(coords), worst_parameter=worst)
