import io

import pytest

from affectix import resources
from affectix.intensity import AdjectiveLexicon
from affectix.lexicon import build_emotion_list, parse_dal


def make_lexicon(pairs, source_id="test-lex"):
    """Build an AffectLexicon from (word, pleasantness) pairs."""
    lines = "".join(f"{w}\t{p}\t1.0\t1.0\n" for w, p in pairs)
    return parse_dal(io.BytesIO(lines.encode("utf-8")), source_id)


def ranked_lexicon(n, prefix="w"):
    """n words with distinct pleasantness 1..n; w01 ranks lowest."""
    width = len(str(n))
    return make_lexicon([(f"{prefix}{i:0{width}d}", float(i)) for i in range(1, n + 1)])


@pytest.fixture(scope="session")
def fixture_lexicon():
    return resources.default_lexicon()

@pytest.fixture(scope="session")
def fixture_words(fixture_lexicon):
    return build_emotion_list(fixture_lexicon)


@pytest.fixture(scope="session")
def fixture_adjectives():
    return resources.default_adjective_lexicon()


@pytest.fixture()
def plain_adjectives():
    return AdjectiveLexicon(adjectives=frozenset({"beautiful", "quiet", "old"}))


def write_corpus(root, docs, manifest_name="manifest.csv", label="x"):
    """Write doc files plus a manifest; docs is {doc_id: text} or
    {doc_id: (text, label)}."""
    root.mkdir(parents=True, exist_ok=True)
    rows = ["doc_id,path,label"]
    for doc_id, value in docs.items():
        text, doc_label = value if isinstance(value, tuple) else (value, label)
        path = root / f"{doc_id}.txt"
        path.write_text(text, encoding="utf-8")
        rows.append(f"{doc_id},{doc_id}.txt,{doc_label}")
    manifest = root / manifest_name
    manifest.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return manifest
