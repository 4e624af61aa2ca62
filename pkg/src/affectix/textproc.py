"""Sentence segmentation and word tokenization.

Splitting is rule based. A sentence ends at ``.``, ``!``, ``?``, ``…``
or at a blank line (a run containing two or more newlines). A period
does not split when the word right before it is a known abbreviation or
a single letter, so "Dr. Smith arrived." stays one sentence. Tokens are
maximal runs of letters, keeping internal apostrophes and hyphens
("don't", "well-known"); digit and punctuation runs are dropped and
every token is case-folded.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ArgumentError

DEFAULT_ABBREVIATIONS = frozenset(
    {
        "dr", "mr", "mrs", "ms", "prof", "rev", "sr", "jr", "st",
        "etc", "vs", "eg", "ie", "cf", "al", "ca", "no", "vol",
        "fig", "approx", "dept", "est", "inc", "ltd", "co", "mt",
    }
)

_TERMINALS = ".!?…"
_JOINERS = "'’‐-"


@dataclass(frozen=True)
class Sentence:
    """Normalized tokens plus the byte span they came from."""

    tokens: tuple[str, ...]
    raw_span: tuple[int, int]

    def __post_init__(self) -> None:
        start, end = self.raw_span
        if start < 0 or end <= start:
            raise ArgumentError(f"bad raw_span {self.raw_span}")
        for tok in self.tokens:
            if not tok or not any(c.isalpha() for c in tok):
                raise ArgumentError(f"bad token {tok!r}")

    @property
    def n_words(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Document:
    doc_id: str
    sentences: tuple[Sentence, ...]
    source_chars: int

    def __post_init__(self) -> None:
        prev_end = -1
        for s in self.sentences:
            if not s.tokens:
                raise ArgumentError("empty sentence stored in document")
            if s.raw_span[0] < prev_end:
                raise ArgumentError("sentence spans overlap or are out of order")
            prev_end = s.raw_span[1]

    @property
    def n_tokens(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)


def _preceding_word(text: str, pos: int) -> str:
    """The letter run ending right before text[pos], case-folded."""
    j = pos
    while j > 0 and text[j - 1].isalpha():
        j -= 1
    return text[j:pos].casefold()


def _append_trimmed(spans: list[tuple[int, int]], text: str, start: int, end: int) -> None:
    segment = text[start:end]
    lead = len(segment) - len(segment.lstrip())
    trail = len(segment) - len(segment.rstrip())
    s, e = start + lead, end - trail
    if s < e:
        spans.append((s, e))


def split_sentences(
    text: str, abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS
) -> list[tuple[int, int]]:
    """Return character-offset spans of the sentences in ``text``.

    Spans are trimmed of surrounding whitespace and never empty; text
    after the last terminal forms a final sentence.
    """
    spans: list[tuple[int, int]] = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch in _TERMINALS:
            if ch == ".":
                word = _preceding_word(text, i)
                if word and (word in abbreviations or len(word) == 1):
                    i += 1
                    continue
            j = i + 1
            while j < n and text[j] in _TERMINALS:
                j += 1
            _append_trimmed(spans, text, start, j)
            start = j
            i = j
        elif ch == "\n":
            j = i
            newlines = 0
            while j < n and text[j] in "\r\n":
                newlines += text[j] == "\n"
                j += 1
            if newlines >= 2:
                _append_trimmed(spans, text, start, i)
                start = j
            i = j
        else:
            i += 1
    _append_trimmed(spans, text, start, n)
    return spans


def tokenize(text: str) -> list[str]:
    """Case-folded word tokens of a sentence span.

    A token is a maximal run of letters, where an apostrophe or hyphen
    with letters on both sides stays inside the run. str.isalpha is the
    letter predicate, so digit-like symbols never produce tokens.
    """
    tokens: list[str] = []
    i, n = 0, len(text)
    while i < n:
        if not text[i].isalpha():
            i += 1
            continue
        j = i
        while j < n:
            if text[j].isalpha():
                j += 1
            elif text[j] in _JOINERS and j + 1 < n and text[j + 1].isalpha():
                j += 2
            else:
                break
        tokens.append(text[i:j].casefold())
        i = j
    return tokens


class _ByteOffsets:
    """Converts ascending character offsets to UTF-8 byte offsets."""

    def __init__(self, text: str):
        self._text = text
        self._char_pos = 0
        self._byte_pos = 0

    def at(self, char_offset: int) -> int:
        if char_offset < self._char_pos:
            raise ArgumentError("byte offset queries must be ascending")
        self._byte_pos += len(self._text[self._char_pos : char_offset].encode("utf-8"))
        self._char_pos = char_offset
        return self._byte_pos


def segment_document(
    doc_id: str,
    text: str,
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> Document:
    """Split, tokenize and package ``text``; token-empty sentences are dropped."""
    offsets = _ByteOffsets(text)
    sentences = []
    for start, end in split_sentences(text, abbreviations):
        tokens = tokenize(text[start:end])
        if not tokens:
            continue
        sentences.append(Sentence(tuple(tokens), (offsets.at(start), offsets.at(end))))
    return Document(doc_id=doc_id, sentences=tuple(sentences), source_chars=len(text))


def load_abbreviations(path) -> frozenset[str]:
    """One abbreviation per line; blank lines and # comments ignored."""
    out = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.add(line.casefold())
    return frozenset(out)
