"""Per-sentence emotion intensity, per-document summaries, adjective rate.

A sentence's intensity is the fraction of its tokens found in the high
emotion word list. A document is summarized by the mean and standard
deviation of its sentence series; the series is the whole population of
that document's sentences, so the default deviation uses divisor n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import ArgumentError, EmptyDocumentError, LexiconParseError
from .lexicon import EmotionWordList, is_emotional
from .textproc import Document, Sentence

STD_MODES = ("population", "sample")


@dataclass(frozen=True)
class SentenceScore:
    ei: float
    n_words: int
    n_emotional: int

    def __post_init__(self) -> None:
        if self.n_words < 1:
            raise ArgumentError("n_words must be positive")
        if not 0 <= self.n_emotional <= self.n_words:
            raise ArgumentError("n_emotional out of range")
        if self.ei != self.n_emotional / self.n_words:
            raise ArgumentError("ei does not equal n_emotional / n_words")


@dataclass(frozen=True)
class DocumentProfile:
    """Sentence score series plus its mean/std summary for one document."""

    doc_id: str
    series: tuple[SentenceScore, ...]
    mean_ei: float
    std_ei: float

    def __post_init__(self) -> None:
        if not self.series:
            raise ArgumentError("profile series must be non-empty")
        if self.std_ei < 0:
            raise ArgumentError("std_ei must be non-negative")

    @property
    def n_sentences(self) -> int:
        return len(self.series)


@dataclass(frozen=True)
class AdjectiveLexicon:
    """Known adjectives plus ordered suffix rules for everything else.

    A token is an adjective iff it is in ``adjectives``; otherwise the
    longest matching suffix rule decides, and no match means no.
    """

    adjectives: frozenset[str]
    suffix_rules: tuple[tuple[str, bool], ...] = ()

    def is_adjective(self, token: str) -> bool:
        word = token.casefold()
        if word in self.adjectives:
            return True
        best: tuple[str, bool] | None = None
        for suffix, flag in self.suffix_rules:
            if word.endswith(suffix) and (best is None or len(suffix) > len(best[0])):
                best = (suffix, flag)
        return best[1] if best is not None else False


def ei_sentence(sentence: Sentence, words: EmotionWordList) -> SentenceScore:
    n = len(sentence.tokens)
    hits = sum(is_emotional(words, tok) for tok in sentence.tokens)
    return SentenceScore(ei=hits / n, n_words=n, n_emotional=hits)


def profile_document(
    doc: Document, words: EmotionWordList, std_mode: str = "population"
) -> DocumentProfile:
    """Score every sentence in order and summarize the series.

    ``std_mode`` selects the divisor: "population" (n, the default) or
    "sample" (n - 1). Either way a single-sentence document has std 0.
    """
    if std_mode not in STD_MODES:
        raise ArgumentError(f"std_mode must be one of {STD_MODES}, got {std_mode!r}")
    if not doc.sentences:
        raise EmptyDocumentError(f"{doc.doc_id}: no sentences to score")
    series = tuple(ei_sentence(s, words) for s in doc.sentences)
    values = [s.ei for s in series]
    n = len(values)
    mean = math.fsum(values) / n
    divisor = n if std_mode == "population" else n - 1
    if divisor == 0 or all(v == values[0] for v in values):
        std = 0.0  # constant series is exactly spread-free
    else:
        std = math.sqrt(math.fsum((v - mean) ** 2 for v in values) / divisor)
    return DocumentProfile(doc_id=doc.doc_id, series=series, mean_ei=mean, std_ei=std)


def adjective_rate(doc: Document, adjectives: AdjectiveLexicon) -> float:
    """Fraction of the document's tokens flagged as adjectives."""
    total = sum(len(s.tokens) for s in doc.sentences)
    if total == 0:
        raise EmptyDocumentError(f"{doc.doc_id}: no tokens")
    flagged = sum(
        adjectives.is_adjective(tok) for s in doc.sentences for tok in s.tokens
    )
    return flagged / total


def load_adjectives(path) -> frozenset[str]:
    """One adjective per line; blank lines and # comments ignored."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.casefold())
    if not words:
        raise LexiconParseError(f"no adjectives in {path}")
    return frozenset(words)


def load_suffix_rules(path) -> tuple[tuple[str, bool], ...]:
    """Rules are ``suffix<TAB>adj|notadj``, one per line."""
    rules: list[tuple[str, bool]] = []
    for line_no, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or fields[1] not in ("adj", "notadj") or not fields[0]:
            raise LexiconParseError(f"bad suffix rule {line!r}", line_no)
        rules.append((fields[0].casefold(), fields[1] == "adj"))
    if not rules:
        raise LexiconParseError(f"no suffix rules in {path}")
    return tuple(rules)


def load_adjective_lexicon(adjectives_path, suffix_rules_path) -> AdjectiveLexicon:
    return AdjectiveLexicon(
        adjectives=load_adjectives(adjectives_path),
        suffix_rules=load_suffix_rules(suffix_rules_path),
    )
