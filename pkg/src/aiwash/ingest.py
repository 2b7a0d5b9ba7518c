"""Corpus ingestion: tokenization, AI-term lexicon matching, bundle JSON codec.

The bundle wire format is NDJSON, one record per line, with a required
``schema_version`` of ``aiwash.bundle.v1``. Field names mirror the core
domain types one-to-one; optional fields default explicitly on parse.
"""
from __future__ import annotations

import hashlib
import json
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

from .core import (
    ComputeQuarter,
    EvidenceItem,
    FirmQuarterBundle,
    GoldLabels,
    JobsQuarter,
    OperationalRecords,
    PatentQuarter,
    RndQuarter,
    TextDoc,
    validate_bundle,
)
from .errors import SchemaError, ValidationFailure

SCHEMA_VERSION = "aiwash.bundle.v1"

# CJK ranges tokenized one character per token; everything else splits on
# whitespace. Covers unified ideographs, extension A, and compatibility forms.
_CJK_RANGES = ((0x3400, 0x4DBF), (0x4E00, 0x9FFF), (0xF900, 0xFAFF))


def _is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


@dataclass(frozen=True)
class TokenizedDoc:
    """Tokens plus (byte_start, byte_end) offsets into the UTF-8 body."""

    doc_id: str
    body: str
    tokens: tuple[str, ...]
    offsets: tuple[tuple[int, int], ...]


def tokenize(doc: TextDoc) -> TokenizedDoc:
    """Whitespace tokenizer that splits CJK runs per character.

    Offsets are byte positions into the UTF-8 encoding of the body, so
    ``body.encode()[start:end].decode() == token`` for every token.
    """
    tokens: list[str] = []
    offsets: list[tuple[int, int]] = []
    byte_pos = 0
    run = []  # [(char, byte_start)] for the current non-space, non-CJK run

    def flush():
        if run:
            start = run[0][1]
            text = "".join(ch for ch, _ in run)
            tokens.append(text)
            offsets.append((start, start + len(text.encode("utf-8"))))
            run.clear()

    for ch in doc.body:
        width = len(ch.encode("utf-8"))
        if ch.isspace():
            flush()
        elif _is_cjk(ch):
            flush()
            tokens.append(ch)
            offsets.append((byte_pos, byte_pos + width))
        else:
            run.append((ch, byte_pos))
        byte_pos += width
    flush()
    return TokenizedDoc(doc.doc_id, doc.body, tuple(tokens), tuple(offsets))


def _normalize_term(term: str) -> str:
    return " ".join(unicodedata.normalize("NFKC", term).lower().split())


@dataclass(frozen=True)
class Lexicon:
    """Normalized, deduplicated term list with a content-derived version."""

    terms: tuple[str, ...]
    version: str

    @classmethod
    def from_terms(cls, terms: Iterable[str], version: str | None = None) -> "Lexicon":
        normalized = sorted({_normalize_term(t) for t in terms if _normalize_term(t)})
        if not normalized:
            raise ValueError("lexicon must contain at least one term")
        if version is None:
            digest = hashlib.sha256("\n".join(normalized).encode("utf-8")).hexdigest()
            version = digest[:12]
        return cls(tuple(normalized), version)

    @classmethod
    def from_file(cls, path: str | Path, version: str | None = None) -> "Lexicon":
        """Plain text, one term per line; ``#`` starts a comment."""
        terms = []
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                terms.append(line)
        return cls.from_terms(terms, version)


_DEFAULT_AI_LEXICON: Lexicon | None = None


def default_ai_lexicon() -> Lexicon:
    """The packaged AI disclosure term list, loaded once."""
    global _DEFAULT_AI_LEXICON
    if _DEFAULT_AI_LEXICON is None:
        from importlib import resources

        path = resources.files("aiwash") / "data" / "ai_terms.txt"
        _DEFAULT_AI_LEXICON = Lexicon.from_file(str(path))
    return _DEFAULT_AI_LEXICON


@dataclass(frozen=True)
class TermHit:
    term: str
    start_token: int
    end_token: int  # half-open


@dataclass(frozen=True)
class TermMatchResult:
    hits: tuple[TermHit, ...]
    disclosure_frequency: float  # hits per 1000 tokens


def match_ai_terms(doc: TokenizedDoc, lexicon: Lexicon) -> TermMatchResult:
    """Greedy longest-match scan over the token sequence.

    Matching is case-insensitive and multiword-aware: each lexicon term is
    tokenized with the same tokenizer, and at every position the longest
    matching term wins; matches never overlap.
    """
    term_tokens: dict[tuple[str, ...], str] = {}
    max_len = 1
    for term in lexicon.terms:
        toks = tokenize(TextDoc("t", term)).tokens
        if toks:
            term_tokens[toks] = term
            max_len = max(max_len, len(toks))

    lowered = tuple(t.lower() for t in doc.tokens)
    hits: list[TermHit] = []
    i = 0
    n = len(lowered)
    while i < n:
        matched = None
        for width in range(min(max_len, n - i), 0, -1):
            window = lowered[i : i + width]
            if window in term_tokens:
                matched = (term_tokens[window], width)
                break
        if matched is None:
            i += 1
        else:
            term, width = matched
            hits.append(TermHit(term, i, i + width))
            i += width
    freq = 1000.0 * len(hits) / max(1, n)
    return TermMatchResult(tuple(hits), freq)


# ---------------------------------------------------------------------------
# Bundle JSON codec
# ---------------------------------------------------------------------------


def _require(record: dict, key: str, path: str):
    if key not in record:
        raise SchemaError(f"missing required field {path}{key}")
    return record[key]


def _float_or_none(value, path: str) -> float | None:
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"expected number at {path}")
    return float(value)


def bundle_to_record(bundle: FirmQuarterBundle) -> dict:
    """Plain-dict form matching the NDJSON schema (inverse of record_to_bundle)."""
    record: dict = {
        "schema_version": SCHEMA_VERSION,
        "firm_id": bundle.firm_id,
        "quarter": bundle.quarter,
        "sector": bundle.sector,
        "texts": [{"doc_id": t.doc_id, "body": t.body} for t in bundle.texts],
        "evidence_items": [
            {
                "evidence_id": e.evidence_id,
                "modality": e.modality,
                "surface_text": e.surface_text,
                "feature_payload": list(e.feature_payload)
                if e.feature_payload is not None
                else None,
                "timestamp": e.timestamp,
            }
            for e in bundle.evidence_items
        ],
        "operational": {
            "patents": [
                {
                    "quarter": p.quarter,
                    "ai_count": p.ai_count,
                    "total_count": p.total_count,
                    "forward_citations": list(p.forward_citations),
                    "granted_count": p.granted_count,
                    "missing": p.missing,
                }
                for p in bundle.operational.patents
            ],
            "jobs": [
                {
                    "quarter": j.quarter,
                    "volume": j.volume,
                    "skill_tags": list(j.skill_tags),
                    "seniority_counts": {
                        "junior": j.seniority_counts[0],
                        "mid": j.seniority_counts[1],
                        "senior": j.seniority_counts[2],
                    },
                    "skill_alignment": j.skill_alignment,
                    "missing": j.missing,
                }
                for j in bundle.operational.jobs
            ],
            "rnd": [
                {
                    "quarter": r.quarter,
                    "amount": r.amount,
                    "revenue": r.revenue,
                    "capitalized_fraction": r.capitalized_fraction,
                    "missing": r.missing,
                }
                for r in bundle.operational.rnd
            ],
            "compute": [
                {
                    "quarter": c.quarter,
                    "gpu_spend": c.gpu_spend,
                    "server_spend": c.server_spend,
                    "cloud_contract_value": c.cloud_contract_value,
                    "missing": c.missing,
                }
                for c in bundle.operational.compute
            ],
        },
        "labels": None,
    }
    if bundle.labels is not None:
        record["labels"] = {
            "y": bundle.labels.y,
            "s": bundle.labels.s,
            "m": bundle.labels.m,
            "nli_pairs": [list(p) for p in bundle.labels.nli_pairs]
            if bundle.labels.nli_pairs is not None
            else None,
        }
    return record


def record_to_bundle(record: dict) -> FirmQuarterBundle:
    """Decode a plain dict into a bundle; raises SchemaError on shape problems.

    Does not validate domain invariants; see parse_bundle for the full path.
    """
    if not isinstance(record, dict):
        raise SchemaError("bundle record must be a JSON object")
    version = _require(record, "schema_version", "")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")
    firm_id = _require(record, "firm_id", "")
    quarter = _require(record, "quarter", "")
    sector = record.get("sector", "unknown")
    if not isinstance(firm_id, str) or not isinstance(quarter, str):
        raise SchemaError("firm_id and quarter must be strings")

    texts = []
    for i, t in enumerate(record.get("texts", [])):
        if not isinstance(t, dict):
            raise SchemaError(f"expected object at texts[{i}]")
        texts.append(
            TextDoc(str(_require(t, "doc_id", f"texts[{i}].")), str(_require(t, "body", f"texts[{i}].")))
        )

    items = []
    for i, e in enumerate(record.get("evidence_items", [])):
        if not isinstance(e, dict):
            raise SchemaError(f"expected object at evidence_items[{i}]")
        payload = e.get("feature_payload")
        if payload is not None:
            if not isinstance(payload, list):
                raise SchemaError(f"feature_payload must be a list at evidence_items[{i}]")
            payload = tuple(_float_or_none(v, f"evidence_items[{i}].feature_payload") for v in payload)
        items.append(
            EvidenceItem(
                evidence_id=str(_require(e, "evidence_id", f"evidence_items[{i}].")),
                modality=str(_require(e, "modality", f"evidence_items[{i}].")),
                surface_text=str(e.get("surface_text", "")),
                feature_payload=payload,
                timestamp=_float_or_none(e.get("timestamp"), f"evidence_items[{i}].timestamp"),
            )
        )

    op_rec = record.get("operational", {}) or {}
    if not isinstance(op_rec, dict):
        raise SchemaError("operational must be an object")

    def _rows(name):
        rows = op_rec.get(name, [])
        if not isinstance(rows, list):
            raise SchemaError(f"operational.{name} must be a list")
        for i, row in enumerate(rows):
            if not isinstance(row, dict):
                raise SchemaError(f"expected object at operational.{name}[{i}]")
        return rows

    patents = tuple(
        PatentQuarter(
            quarter=str(_require(p, "quarter", "operational.patents[].")),
            ai_count=int(p.get("ai_count", 0)),
            total_count=int(p.get("total_count", 0)),
            forward_citations=tuple(int(c) for c in p.get("forward_citations", [])),
            granted_count=int(p.get("granted_count", 0)),
            missing=bool(p.get("missing", False)),
        )
        for p in _rows("patents")
    )
    jobs = []
    for j in _rows("jobs"):
        sen = j.get("seniority_counts", {}) or {}
        if not isinstance(sen, dict):
            raise SchemaError("seniority_counts must be an object")
        jobs.append(
            JobsQuarter(
                quarter=str(_require(j, "quarter", "operational.jobs[].")),
                volume=int(j.get("volume", 0)),
                skill_tags=tuple(str(t) for t in j.get("skill_tags", [])),
                seniority_counts=(
                    int(sen.get("junior", 0)),
                    int(sen.get("mid", 0)),
                    int(sen.get("senior", 0)),
                ),
                skill_alignment=float(j.get("skill_alignment", 0.0)),
                missing=bool(j.get("missing", False)),
            )
        )
    rnd = tuple(
        RndQuarter(
            quarter=str(_require(r, "quarter", "operational.rnd[].")),
            amount=float(r.get("amount", 0.0)),
            revenue=float(r.get("revenue", 0.0)),
            capitalized_fraction=float(r.get("capitalized_fraction", 0.0)),
            missing=bool(r.get("missing", False)),
        )
        for r in _rows("rnd")
    )
    compute = tuple(
        ComputeQuarter(
            quarter=str(_require(c, "quarter", "operational.compute[].")),
            gpu_spend=float(c.get("gpu_spend", 0.0)),
            server_spend=float(c.get("server_spend", 0.0)),
            cloud_contract_value=float(c.get("cloud_contract_value", 0.0)),
            missing=bool(c.get("missing", False)),
        )
        for c in _rows("compute")
    )

    labels = None
    raw_labels = record.get("labels")
    if raw_labels is not None:
        if not isinstance(raw_labels, dict):
            raise SchemaError("labels must be an object or null")
        pairs = raw_labels.get("nli_pairs")
        if pairs is not None:
            if not isinstance(pairs, list):
                raise SchemaError("labels.nli_pairs must be a list")
            decoded = []
            for i, p in enumerate(pairs):
                if not isinstance(p, (list, tuple)) or len(p) != 3:
                    raise SchemaError(f"labels.nli_pairs[{i}] must be a 3-element list")
                decoded.append((str(p[0]), str(p[1]), str(p[2])))
            pairs = tuple(decoded)
        labels = GoldLabels(
            y=int(_require(raw_labels, "y", "labels.")),
            s=float(_require(raw_labels, "s", "labels.")),
            m=int(raw_labels["m"]) if raw_labels.get("m") is not None else None,
            nli_pairs=pairs,
        )

    return FirmQuarterBundle(
        firm_id=firm_id,
        quarter=quarter,
        sector=str(sector),
        texts=tuple(texts),
        evidence_items=tuple(items),
        operational=OperationalRecords(patents, tuple(jobs), rnd, compute),
        labels=labels,
    )


def parse_bundle(raw: bytes | str) -> FirmQuarterBundle:
    """Decode one NDJSON record and validate it.

    Raises SchemaError (with byte offset where known) on malformed input and
    ValidationFailure (wrapping all violations) on invariant breaches.
    """
    if isinstance(raw, bytes):
        raw = raw.decode("utf-8")
    try:
        record = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", byte_offset=exc.pos) from exc
    bundle = record_to_bundle(record)
    violations = validate_bundle(bundle)
    if violations:
        raise ValidationFailure(violations)
    return bundle


def dumps_bundle(bundle: FirmQuarterBundle) -> str:
    """Canonical single-line JSON for one bundle (stable key order)."""
    return json.dumps(bundle_to_record(bundle), sort_keys=True, separators=(",", ":"))


def read_corpus(path: str | Path) -> Iterator[FirmQuarterBundle]:
    """Iterate bundles from an NDJSON file, validating each line."""
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_bundle(line)
            except SchemaError as exc:
                raise SchemaError(
                    f"{path}:{line_no}: {exc}", byte_offset=exc.byte_offset
                ) from exc


def write_corpus(bundles: Iterable[FirmQuarterBundle], out: IO[str] | str | Path) -> int:
    """Write bundles as NDJSON; returns the number written."""
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8") as fh:
            return write_corpus(bundles, fh)
    count = 0
    for bundle in bundles:
        out.write(dumps_bundle(bundle))
        out.write("\n")
        count += 1
    return count
