"""Manifest-driven corpus loading and batch document scoring.

A manifest is a CSV file with header ``doc_id,path,label``; paths are
relative to the manifest's directory and must stay inside it. Documents
that cannot be read or segment to nothing are skipped with a reason and
never abort the run.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    DuplicateDocIdError,
    EmptyRunError,
    ManifestError,
    PathTraversalError,
)
from .intensity import AdjectiveLexicon, DocumentProfile, adjective_rate, profile_document
from .lexicon import EmotionWordList
from .stats import SampleSummary, summarize
from .textproc import DEFAULT_ABBREVIATIONS, segment_document

MANIFEST_FIELDS = ("doc_id", "path", "label")


@dataclass(frozen=True)
class ManifestEntry:
    doc_id: str
    path: str
    label: str


@dataclass(frozen=True)
class CorpusManifest:
    entries: tuple[ManifestEntry, ...]
    root: Path

    def labels(self) -> list[str]:
        """Distinct labels in first-appearance order."""
        seen: list[str] = []
        for entry in self.entries:
            if entry.label not in seen:
                seen.append(entry.label)
        return seen

    def resolve(self, entry: ManifestEntry) -> Path:
        return (self.root / entry.path).resolve()


@dataclass(frozen=True)
class CorpusRun:
    """Profiles plus skip records; together they cover the manifest exactly.

    ``adjective_rates`` and ``labels`` are keyed by doc_id and carry the
    extra columns of the flat CSV output.
    """

    profiles: tuple[DocumentProfile, ...]
    skipped: tuple[tuple[str, str], ...]
    group_summaries: dict[str, SampleSummary]
    adjective_rates: dict[str, float]
    labels: dict[str, str]


def load_manifest(path) -> CorpusManifest:
    """Parse and validate a manifest CSV.

    Duplicate doc_ids, paths escaping the manifest directory, and
    references to missing files are rejected here rather than at run
    time.
    """
    manifest_path = Path(path)
    if not manifest_path.is_file():
        raise ManifestError(f"manifest not found: {manifest_path}")
    root = manifest_path.resolve().parent
    entries: list[ManifestEntry] = []
    seen: set[str] = set()
    with manifest_path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != MANIFEST_FIELDS:
            raise ManifestError(
                f"{manifest_path}: header must be {','.join(MANIFEST_FIELDS)}, "
                f"got {reader.fieldnames}"
            )
        for row_no, row in enumerate(reader, start=2):
            doc_id = (row["doc_id"] or "").strip()
            rel_path = (row["path"] or "").strip()
            label = (row["label"] or "").strip()
            if not doc_id or not rel_path or not label:
                raise ManifestError(f"{manifest_path}: row {row_no} has empty fields")
            if doc_id in seen:
                raise DuplicateDocIdError(
                    f"{manifest_path}: duplicate doc_id {doc_id!r}"
                )
            seen.add(doc_id)
            resolved = (root / rel_path).resolve()
            if not resolved.is_relative_to(root):
                raise PathTraversalError(
                    f"{manifest_path}: path {rel_path!r} escapes the manifest directory"
                )
            if not resolved.is_file():
                raise ManifestError(
                    f"{manifest_path}: doc {doc_id!r} references missing file {rel_path!r}"
                )
            entries.append(ManifestEntry(doc_id=doc_id, path=rel_path, label=label))
    return CorpusManifest(entries=tuple(entries), root=root)


def run_corpus(
    manifest: CorpusManifest,
    words: EmotionWordList,
    adjectives: AdjectiveLexicon,
    std_mode: str = "population",
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> CorpusRun:
    """Score every manifest entry in order; per-document failures skip.

    Group summaries are sample-deviation summaries of mean_ei per label,
    computed over the documents that scored.
    """
    profiles: list[DocumentProfile] = []
    skipped: list[tuple[str, str]] = []
    adj_rates: dict[str, float] = {}
    labels: dict[str, str] = {}
    for entry in manifest.entries:
        target = manifest.resolve(entry)
        try:
            text = target.read_text(encoding="utf-8")
        except OSError as exc:
            skipped.append((entry.doc_id, f"unreadable file: {exc.strerror or exc}"))
            continue
        except UnicodeDecodeError:
            skipped.append((entry.doc_id, "invalid UTF-8"))
            continue
        doc = segment_document(entry.doc_id, text, abbreviations)
        if not doc.sentences:
            skipped.append((entry.doc_id, "empty after segmentation"))
            continue
        profiles.append(profile_document(doc, words, std_mode=std_mode))
        adj_rates[entry.doc_id] = adjective_rate(doc, adjectives)
        labels[entry.doc_id] = entry.label
    if not profiles:
        raise EmptyRunError("every document in the corpus was skipped")

    group_summaries: dict[str, SampleSummary] = {}
    for label in manifest.labels():
        values = [p.mean_ei for p in profiles if labels[p.doc_id] == label]
        if values:
            group_summaries[label] = summarize(values)
    return CorpusRun(
        profiles=tuple(profiles),
        skipped=tuple(skipped),
        group_summaries=group_summaries,
        adjective_rates=adj_rates,
        labels=labels,
    )


def run_to_json_dict(run: CorpusRun) -> dict:
    """JSON-ready view of a run: profiles, group summaries, skip records."""
    return {
        "profiles": [
            {
                "doc_id": p.doc_id,
                "label": run.labels[p.doc_id],
                "n_sentences": p.n_sentences,
                "mean_ei": p.mean_ei,
                "std_ei": p.std_ei,
                "adjective_rate": run.adjective_rates[p.doc_id],
                "series": [
                    {"ei": s.ei, "n_words": s.n_words, "n_emotional": s.n_emotional}
                    for s in p.series
                ],
            }
            for p in run.profiles
        ],
        "group_summaries": {
            label: {"n": s.n, "mean": s.mean, "sd": s.sd}
            for label, s in run.group_summaries.items()
        },
        "skipped": [{"doc_id": d, "reason": r} for d, r in run.skipped],
    }


def run_to_csv_rows(run: CorpusRun) -> list[tuple]:
    """Rows for the flat per-document CSV, header included."""
    rows: list[tuple] = [
        ("doc_id", "label", "n_sentences", "mean_ei", "std_ei", "adjective_rate")
    ]
    for p in run.profiles:
        rows.append(
            (
                p.doc_id,
                run.labels[p.doc_id],
                p.n_sentences,
                p.mean_ei,
                p.std_ei,
                run.adjective_rates[p.doc_id],
            )
        )
    return rows
