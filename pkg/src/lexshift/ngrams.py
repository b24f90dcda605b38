"""Word n-gram (lexical bundle) extraction with a frequency threshold.

Windows slide over word tokens only: punctuation and numerals are skipped,
not break points. By default windows stay inside sentence boundaries and
tokens are case-folded, so sentence-initial variants group together. All
overlapping occurrences count.
"""

import csv
from dataclasses import dataclass
from typing import NamedTuple

from .corpus import WORD, Corpus
from .dictionary import Dictionary
from .errors import LanguageMismatch


@dataclass(frozen=True, slots=True)
class NGramSpec:
    n_min: int = 3
    n_max: int = 7
    min_freq: int = 3
    cross_sentence: bool = False
    case_fold: bool = True

    def __post_init__(self):
        if self.n_min < 1:
            raise ValueError(f"n_min must be >= 1, got {self.n_min}")
        if self.n_max < self.n_min:
            raise ValueError(f"n_max {self.n_max} < n_min {self.n_min}")
        if self.min_freq < 1:
            raise ValueError(f"min_freq must be >= 1, got {self.min_freq}")


class Occurrence(NamedTuple):
    document_id: str
    sentence_index: int
    start_position: int


@dataclass(frozen=True, slots=True)
class NGramEntry:
    tokens: tuple[str, ...]
    length: int
    freq: int
    occurrences: tuple[Occurrence, ...]


@dataclass(frozen=True, slots=True)
class NGramReport:
    entries: tuple[NGramEntry, ...]
    type_count: int
    token_count: int


def _make_report(index: dict) -> NGramReport:
    entries = tuple(
        NGramEntry(tokens, len(tokens), len(occs), tuple(occs))
        for tokens, occs in sorted(
            index.items(), key=lambda kv: (-len(kv[1]), len(kv[0]), kv[0]))
    )
    return NGramReport(entries, len(entries), sum(e.freq for e in entries))


def extract_ngrams(corpus: Corpus, spec: NGramSpec | None = None) -> NGramReport:
    """All n-grams in the spec's length range with freq >= spec.min_freq.

    Entries are sorted by descending frequency, then length, then the token
    sequence; each occurrence records the document, the sentence of the
    window's first word, and that word's position in its sentence.
    """
    spec = spec or NGramSpec()
    index: dict[tuple[str, ...], list[Occurrence]] = {}
    for doc in corpus.documents:
        if spec.cross_sentence:
            sequences = [[t for t in doc.tokens() if t.kind == WORD]]
        else:
            sequences = [[t for t in sent if t.kind == WORD]
                         for sent in doc.sentences]
        for seq in sequences:
            top = min(spec.n_max, len(seq))
            for n in range(spec.n_min, top + 1):
                for i in range(len(seq) - n + 1):
                    window = seq[i:i + n]
                    key = tuple(t.normalized if spec.case_fold else t.surface
                                for t in window)
                    occ = Occurrence(doc.id, window[0].sentence_index,
                                     window[0].position_in_sentence)
                    index.setdefault(key, []).append(occ)
    index = {k: v for k, v in index.items() if len(v) >= spec.min_freq}
    return _make_report(index)


def filter_by_category(report: NGramReport, dictionary: Dictionary,
                       category_id: int) -> NGramReport:
    """Keep entries where at least one token matches the category."""
    dictionary.category(category_id)  # raises UnknownCategory
    kept = {}
    for entry in report.entries:
        if any(category_id in dictionary.match_token(tok.casefold())
               for tok in entry.tokens):
            kept[entry.tokens] = list(entry.occurrences)
    return _make_report(kept)


def filter_by_language_category(report: NGramReport, corpus: Corpus,
                                dictionary: Dictionary,
                                category_id: int) -> NGramReport:
    """filter_by_category with the corpus/dictionary language check."""
    if corpus.language != dictionary.language:
        raise LanguageMismatch(
            f"corpus is {corpus.language!r}, dictionary is {dictionary.language!r}")
    return filter_by_category(report, dictionary, category_id)


def write_ngrams_csv(report: NGramReport, stream) -> None:
    """Columns: ngram, length, freq, doc_distribution (doc:count;...)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["ngram", "length", "freq", "doc_distribution"])
    for entry in report.entries:
        dist: dict[str, int] = {}
        for occ in entry.occurrences:
            dist[occ.document_id] = dist.get(occ.document_id, 0) + 1
        dist_text = ";".join(f"{doc}:{count}" for doc, count in dist.items())
        writer.writerow([" ".join(entry.tokens), entry.length, entry.freq, dist_text])
