"""Corpus model: tokenized documents and token/type statistics.

A document is an ordered list of sentences, each an ordered list of tokens.
Word tokens are maximal runs of letters or ideographs (internal apostrophes
and hyphens allowed), numerals are digit runs, and every other non-space
character is a one-character punctuation token. Sentences end at terminal
punctuation (. ! ? and their fullwidth counterparts) and at every newline,
which acts as a hard break. Scripts without word spacing must arrive
pre-segmented, tokens separated by whitespace.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyInput, FormatError, InvalidEncoding

WORD = "word"
NUMERAL = "numeral"
PUNCTUATION = "punctuation"

_TERMINAL = frozenset(".!?。！？")
_WORD_JOINERS = frozenset("'’-")
_NUMERAL_JOINERS = frozenset(".,")


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    normalized: str
    kind: str
    sentence_index: int
    position_in_sentence: int


@dataclass(frozen=True)
class Document:
    id: str
    label: str
    language: str
    sentences: tuple[tuple[Token, ...], ...]

    def __post_init__(self):
        for si, sent in enumerate(self.sentences):
            if not sent:
                raise ValueError(f"document {self.id}: empty sentence {si}")

    @property
    def word_count(self) -> int:
        return sum(1 for tok in self.tokens() if tok.kind == WORD)

    def tokens(self):
        for sent in self.sentences:
            yield from sent

    def word_tokens(self):
        for tok in self.tokens():
            if tok.kind == WORD:
                yield tok

    def sentence_words(self, sentence_index: int) -> tuple[Token, ...]:
        return tuple(t for t in self.sentences[sentence_index] if t.kind == WORD)


@dataclass(frozen=True)
class Corpus:
    id: str
    language: str
    documents: tuple[Document, ...]
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_id = {}
        for doc in self.documents:
            if doc.id in by_id:
                raise ValueError(f"duplicate document id {doc.id!r}")
            if doc.language != self.language:
                raise ValueError(
                    f"document {doc.id!r} is {doc.language!r}, corpus is {self.language!r}")
            by_id[doc.id] = doc
        object.__setattr__(self, "_by_id", by_id)

    def document(self, doc_id: str) -> Document:
        return self._by_id[doc_id]

    def has_sentence(self, doc_id: str, sentence_index: int) -> bool:
        doc = self._by_id.get(doc_id)
        return doc is not None and 0 <= sentence_index < len(doc.sentences)

    def sentence(self, doc_id: str, sentence_index: int) -> tuple[Token, ...]:
        return self._by_id[doc_id].sentences[sentence_index]


@dataclass(frozen=True)
class CorpusStats:
    word_tokens: int
    word_types: int
    per_document: tuple[tuple[str, int, int], ...]


def _lex_line(line: str):
    """Split one line into (surface, kind) pairs."""
    out = []
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if ch.isspace():
            i += 1
        elif ch.isalpha():
            j = i + 1
            while j < n:
                c = line[j]
                if c.isalpha():
                    j += 1
                elif c in _WORD_JOINERS and j + 1 < n and line[j + 1].isalpha():
                    j += 2
                else:
                    break
            out.append((line[i:j], WORD))
            i = j
        elif ch.isdigit():
            j = i + 1
            while j < n:
                c = line[j]
                if c.isdigit():
                    j += 1
                elif c in _NUMERAL_JOINERS and j + 1 < n and line[j + 1].isdigit():
                    j += 2
                else:
                    break
            out.append((line[i:j], NUMERAL))
            i = j
        else:
            out.append((ch, PUNCTUATION))
            i += 1
    return out


def ingest_document(raw: str, language: str, label: str, doc_id: str | None = None) -> Document:
    """Tokenize plain text into a sentence-segmented document.

    Raises EmptyInput if no word token results.
    """
    sentences: list[list[tuple[str, str]]] = []
    current: list[tuple[str, str]] = []

    def flush():
        if current:
            sentences.append(list(current))
            current.clear()

    for line in raw.split("\n"):
        for surface, kind in _lex_line(line):
            current.append((surface, kind))
            if kind == PUNCTUATION and surface in _TERMINAL:
                flush()
        flush()

    token_rows = tuple(
        tuple(
            Token(surface, surface.casefold(), kind, si, pos)
            for pos, (surface, kind) in enumerate(sent)
        )
        for si, sent in enumerate(sentences)
    )
    doc = Document(doc_id if doc_id is not None else label, label, language, token_rows)
    if doc.word_count == 0:
        raise EmptyInput(f"document {doc.id!r}: no word tokens in input")
    return doc


def document_to_text(doc: Document) -> str:
    """One line per sentence, token surfaces joined by single spaces.

    Re-ingesting the result reproduces the document's tokens, so this is the
    canonical pre-segmented serialization.
    """
    return "\n".join(" ".join(tok.surface for tok in sent) for sent in doc.sentences)


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Token/type counts over normalized forms of word tokens only."""
    corpus_forms = set()
    per_document = []
    total = 0
    for doc in corpus.documents:
        doc_forms = set()
        doc_tokens = 0
        for tok in doc.word_tokens():
            doc_tokens += 1
            doc_forms.add(tok.normalized)
        corpus_forms |= doc_forms
        total += doc_tokens
        per_document.append((doc.id, doc_tokens, len(doc_forms)))
    return CorpusStats(total, len(corpus_forms), tuple(per_document))


def read_text_file(path) -> str:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidEncoding(f"{path}: {exc}") from None


def load_corpus(manifest_path, language: str, corpus_id: str) -> Corpus:
    """Build a corpus from a manifest (document_id <TAB> label <TAB> path).

    Paths are resolved relative to the manifest's directory. Lines starting
    with '#' and blank lines are skipped.
    """
    manifest_path = Path(manifest_path)
    base = manifest_path.parent
    documents = []
    text = read_text_file(manifest_path)
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 3:
            raise FormatError(
                f"manifest row needs document_id<TAB>label<TAB>path, got {line!r}",
                line=lineno)
        doc_id, label, rel = parts
        raw = read_text_file(base / rel)
        documents.append(ingest_document(raw, language, label, doc_id=doc_id))
    return Corpus(corpus_id, language, tuple(documents))


def write_stats_csv(stats: CorpusStats, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["doc_id", "word_tokens", "word_types"])
    for doc_id, tokens, types in stats.per_document:
        writer.writerow([doc_id, tokens, types])
