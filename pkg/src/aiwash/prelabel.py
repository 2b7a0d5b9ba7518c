"""Rule-based pre-labeling of panel data and rating-based label synthesis.

Stage one flags firms whose AI disclosure frequency is loud while their AI
investment is thin, judged against industry-year percentile cutoffs. The
continuous training label comes from the first principal component of a
multi-rater severity matrix, rescaled to [0, 100].
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .core import FirmQuarterBundle, parse_quarter
from .errors import PrelabelError
from .ingest import Lexicon, default_ai_lexicon, match_ai_terms, tokenize

logger = logging.getLogger(__name__)

MIN_CELL_SIZE = 4


def percentile(values, q: float) -> float:
    """Linear-interpolation percentile (the common type-7 definition).

    q is in [0, 100]. Raises EMPTY_INPUT on an empty sequence.
    """
    arr = sorted(float(v) for v in values)
    if not arr:
        raise PrelabelError("percentile of empty input", code="EMPTY_INPUT")
    if not 0.0 <= q <= 100.0:
        raise ValueError(f"percentile rank out of range: {q}")
    if len(arr) == 1:
        return arr[0]
    h = (len(arr) - 1) * (q / 100.0)
    lo = int(np.floor(h))
    hi = min(lo + 1, len(arr) - 1)
    return arr[lo] + (h - lo) * (arr[hi] - arr[lo])


@dataclass(frozen=True)
class PanelObservation:
    """One firm-year row of the disclosure/investment panel."""

    firm_id: str
    industry: str
    year: int
    disclosure_freq: float
    ai_investment: float


@dataclass(frozen=True)
class CellCutoffs:
    industry: str
    year: int
    n_obs: int
    freq_p75: float
    invest_p25: float


@dataclass(frozen=True)
class PrelabelResult:
    flags: dict[tuple[str, int], set[str]]  # (industry, year) -> flagged firm ids
    cutoffs: tuple[CellCutoffs, ...]
    skipped_cells: tuple[tuple[str, int, int], ...]  # (industry, year, n_obs)

    def flagged_firms(self) -> set[str]:
        out: set[str] = set()
        for firms in self.flags.values():
            out.update(firms)
        return out


def stage1_prelabel(observations: list[PanelObservation]) -> PrelabelResult:
    """Flag loud-but-thin firms within each industry-year cell.

    A firm is flagged when its disclosure frequency is strictly above the
    cell's 75th percentile and its AI investment strictly below the cell's
    25th percentile. Cells with fewer than four observations cannot support
    the cutoffs and are skipped (logged, surfaced in the result).
    """
    if not observations:
        raise PrelabelError("no panel observations", code="EMPTY_INPUT")
    cells: dict[tuple[str, int], list[PanelObservation]] = {}
    for obs in observations:
        cells.setdefault((obs.industry, obs.year), []).append(obs)

    flags: dict[tuple[str, int], set[str]] = {}
    cutoffs = []
    skipped = []
    for key in sorted(cells):
        rows = cells[key]
        if len(rows) < MIN_CELL_SIZE:
            skipped.append((key[0], key[1], len(rows)))
            logger.info(
                "prelabel: skipping cell %s/%d with %d observations", key[0], key[1], len(rows)
            )
            continue
        freq_p75 = percentile([r.disclosure_freq for r in rows], 75.0)
        invest_p25 = percentile([r.ai_investment for r in rows], 25.0)
        cutoffs.append(
            CellCutoffs(
                industry=key[0], year=key[1], n_obs=len(rows), freq_p75=freq_p75, invest_p25=invest_p25
            )
        )
        flagged = {
            r.firm_id
            for r in rows
            if r.disclosure_freq > freq_p75 and r.ai_investment < invest_p25
        }
        flags[key] = flagged
    return PrelabelResult(flags=flags, cutoffs=tuple(cutoffs), skipped_cells=tuple(skipped))


def _power_iteration(cov: np.ndarray, tol: float = 1e-10, max_iter: int = 10000) -> np.ndarray:
    """Dominant eigenvector of a symmetric PSD matrix."""
    k = cov.shape[0]
    v = np.ones(k, dtype=np.float64) / np.sqrt(k)
    for _ in range(max_iter):
        w = cov @ v
        norm = np.linalg.norm(w)
        if norm < tol:
            raise PrelabelError(
                "rating covariance has no dominant direction", code="DEGENERATE_RATINGS"
            )
        w = w / norm
        if w @ v < 0:
            w = -w
        if np.max(np.abs(w - v)) < tol:
            return w
        v = w
    return v


def derive_awrs_label(ratings: np.ndarray) -> np.ndarray:
    """Continuous 0-100 labels from a (firms x criteria) rating matrix.

    The first principal component is extracted (covariance with ddof=1,
    power iteration), oriented so it correlates positively with the mean
    rating, and min-max rescaled to [0, 100]. Raises DEGENERATE_RATINGS
    when the matrix cannot support a spread (fewer than two rows, or no
    variance anywhere).
    """
    mat = np.asarray(ratings, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] < 2 or mat.shape[1] < 1:
        raise PrelabelError(
            "need at least two firms and one criterion", code="DEGENERATE_RATINGS"
        )
    centered = mat - mat.mean(axis=0, keepdims=True)
    cov = (centered.T @ centered) / (mat.shape[0] - 1)
    if not np.any(np.abs(cov) > 1e-12):
        raise PrelabelError("ratings have no variance", code="DEGENERATE_RATINGS")
    component = _power_iteration(cov)
    scores = centered @ component
    row_means = mat.mean(axis=1)
    anchor = row_means - row_means.mean()
    if float(scores @ anchor) < 0.0:
        scores = -scores
    spread = scores.max() - scores.min()
    if spread <= 0.0:
        raise PrelabelError(
            "principal scores are constant", code="DEGENERATE_RATINGS"
        )
    return 100.0 * (scores - scores.min()) / spread


def panel_from_corpus(
    bundles: list[FirmQuarterBundle], lexicon: Lexicon | None = None
) -> list[PanelObservation]:
    """Firm-year panel rows computed from disclosure bundles.

    Disclosure frequency is AI terms per thousand tokens over the year's
    documents. Investment is a composite of patent filings, posting volume,
    and R&D intensity from each bundle's own window, z-scored per component
    across the panel and summed.
    """
    lex = lexicon or default_ai_lexicon()
    grouped: dict[tuple[str, str, int], list[FirmQuarterBundle]] = {}
    for b in bundles:
        year = parse_quarter(b.quarter)[0]
        grouped.setdefault((b.firm_id, b.sector, year), []).append(b)

    keys = sorted(grouped)
    freq = np.zeros(len(keys))
    raw = np.zeros((len(keys), 3))
    for i, key in enumerate(keys):
        hits = 0
        tokens = 0
        patents = 0.0
        volume = 0.0
        intensity: list[float] = []
        for b in grouped[key]:
            for doc in b.texts:
                toks = tokenize(doc)
                tokens += len(toks.tokens)
                hits += len(match_ai_terms(toks, lex).hits)
            patents += sum(p.ai_count for p in b.operational.patents if not p.missing)
            volume += sum(j.volume for j in b.operational.jobs if not j.missing)
            intensity.extend(
                r.amount / r.revenue
                for r in b.operational.rnd
                if not r.missing and r.revenue > 0
            )
        freq[i] = 1000.0 * hits / max(tokens, 1)
        raw[i] = (patents, volume, float(np.mean(intensity)) if intensity else 0.0)

    std = raw.std(axis=0)
    std[std < 1e-9] = 1.0
    z = (raw - raw.mean(axis=0)) / std
    invest = z.sum(axis=1)
    return [
        PanelObservation(
            firm_id=key[0],
            industry=key[1],
            year=key[2],
            disclosure_freq=float(freq[i]),
            ai_investment=float(invest[i]),
        )
        for i, key in enumerate(keys)
    ]
