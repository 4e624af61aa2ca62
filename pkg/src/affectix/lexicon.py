"""Affect lexicon parsing and percentile-based emotion word lists.

The lexicon file is plain UTF-8 text, one entry per line:

    word<TAB>pleasantness<TAB>activation<TAB>imagery

Lines starting with ``#`` and blank lines are ignored; the decimal point
is ``.`` and there is no header row. Words are case-folded on load and
duplicates keep their first occurrence.

The "high emotion" vocabulary is the union of two pleasantness tails:
the bottom ``lower_frac`` and top ``upper_frac`` of entries ranked by
(pleasantness, word). Selection is rank based, so any strictly
increasing rescaling of the pleasantness column leaves it unchanged.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import BinaryIO

from .errors import ArgumentError, LexiconParseError, LexiconTooSmallError

log = logging.getLogger(__name__)

MIN_LEXICON_SIZE = 10

# Tail fractions are snapped to 6 decimal digits before the ceiling so
# that e.g. 0.2 of 50 words is 10, not 11 (0.2 has no exact binary form).
_FRAC_DENOMINATOR_LIMIT = 10**6


@dataclass(frozen=True)
class DalEntry:
    """One rated word: pleasantness, activation, imagery."""

    word: str
    pleasantness: float
    activation: float
    imagery: float

    def __post_init__(self) -> None:
        if not self.word or any(c.isspace() for c in self.word):
            raise ArgumentError(f"invalid lexicon word: {self.word!r}")
        if self.word != self.word.casefold():
            raise ArgumentError(f"lexicon word must be case-folded: {self.word!r}")
        for name in ("pleasantness", "activation", "imagery"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ArgumentError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class AffectLexicon:
    """Word -> DalEntry map plus the provenance label of its source file."""

    entries: dict[str, DalEntry]
    source_id: str
    duplicate_count: int = 0

    def __post_init__(self) -> None:
        if len(self.entries) < MIN_LEXICON_SIZE:
            raise LexiconTooSmallError(
                f"{self.source_id}: {len(self.entries)} entries, "
                f"need at least {MIN_LEXICON_SIZE}"
            )
        for key, entry in self.entries.items():
            if entry.word != key:
                raise ArgumentError(f"entry keyed {key!r} holds word {entry.word!r}")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries


@dataclass(frozen=True)
class EmotionWordList:
    """The two pleasantness tails of a lexicon; membership means "emotional"."""

    positive: frozenset[str]
    negative: frozenset[str]
    lower_frac: float
    upper_frac: float
    source_id: str

    def __post_init__(self) -> None:
        if self.positive & self.negative:
            raise ArgumentError("positive and negative tails overlap")


def parse_dal(stream: BinaryIO, source_id: str) -> AffectLexicon:
    """Parse a lexicon file from a binary stream.

    Malformed lines raise :class:`LexiconParseError` naming the line;
    fewer than 10 valid entries raise :class:`LexiconTooSmallError`.
    """
    data = stream.read()
    entries: dict[str, DalEntry] = {}
    duplicates = 0
    for line_no, raw in enumerate(data.split(b"\n"), start=1):
        try:
            line = raw.decode("utf-8").rstrip("\r")
        except UnicodeDecodeError as exc:
            raise LexiconParseError(f"invalid UTF-8 ({exc.reason})", line_no) from exc
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise LexiconParseError(
                f"expected 4 tab-separated fields, got {len(fields)}", line_no
            )
        word = fields[0].casefold()
        if not word or any(c.isspace() for c in word):
            raise LexiconParseError(f"invalid word field {fields[0]!r}", line_no)
        try:
            ratings = [float(f) for f in fields[1:]]
        except ValueError as exc:
            raise LexiconParseError(f"non-numeric rating in {line!r}", line_no) from exc
        if not all(math.isfinite(r) for r in ratings):
            raise LexiconParseError(f"non-finite rating in {line!r}", line_no)
        if word in entries:
            duplicates += 1
            continue
        entries[word] = DalEntry(word, *ratings)
    if len(entries) < MIN_LEXICON_SIZE:
        raise LexiconTooSmallError(
            f"{source_id}: {len(entries)} valid entries, need at least {MIN_LEXICON_SIZE}"
        )
    if duplicates:
        log.warning(
            "%s: %d duplicate word(s) ignored, first occurrence kept",
            source_id,
            duplicates,
        )
    return AffectLexicon(entries=entries, source_id=source_id, duplicate_count=duplicates)


def load_lexicon(path) -> AffectLexicon:
    """Parse a lexicon file from disk, using the file name as source_id."""
    from pathlib import Path

    p = Path(path)
    with p.open("rb") as fh:
        return parse_dal(fh, source_id=p.name)


def _tail_size(frac: float, n: int) -> int:
    f = Fraction(frac).limit_denominator(_FRAC_DENOMINATOR_LIMIT)
    return -((-f.numerator * n) // f.denominator)  # exact ceil(frac * n)


def build_emotion_list(
    lex: AffectLexicon, lower_frac: float = 0.2, upper_frac: float = 0.2
) -> EmotionWordList:
    """Rank entries by (pleasantness, word) and take both tails.

    negative holds the first ceil(lower_frac * n) words of the ascending
    ranking, positive the last ceil(upper_frac * n). Ties on pleasantness
    resolve lexicographically, which makes the split deterministic.
    """
    for name, frac in (("lower_frac", lower_frac), ("upper_frac", upper_frac)):
        if not 0 < frac <= 0.5:
            raise ArgumentError(f"{name} must be in (0, 0.5], got {frac}")
    if lower_frac + upper_frac > 1:
        raise ArgumentError(
            f"lower_frac + upper_frac must be <= 1, got {lower_frac + upper_frac}"
        )
    n = len(lex.entries)
    n_lo = _tail_size(lower_frac, n)
    n_hi = _tail_size(upper_frac, n)
    if n_lo + n_hi > n:
        raise ArgumentError(
            f"tails overlap: ceil({lower_frac}*{n}) + ceil({upper_frac}*{n}) "
            f"= {n_lo + n_hi} > {n}"
        )
    ranked = sorted(lex.entries.values(), key=lambda e: (e.pleasantness, e.word))
    negative = frozenset(e.word for e in ranked[:n_lo])
    positive = frozenset(e.word for e in ranked[n - n_hi :])
    return EmotionWordList(
        positive=positive,
        negative=negative,
        lower_frac=lower_frac,
        upper_frac=upper_frac,
        source_id=lex.source_id,
    )


def is_emotional(words: EmotionWordList, word: str) -> int:
    """1 if the (already case-folded) word sits in either tail, else 0."""
    return 1 if word in words.positive or word in words.negative else 0
