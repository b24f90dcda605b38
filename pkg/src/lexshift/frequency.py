"""Per-document category frequencies, top-word tables, chapter differences.

A category frequency is 100 * hits / word_total for one document, the
percent-of-words convention of dictionary word counting. Full precision is
kept internally; display values round half away from zero to 2 decimals,
and cross-corpus statistics are computed on those displayed values because
published tables carry 2 decimals.
"""

import csv
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .corpus import Corpus
from .dictionary import Dictionary
from .errors import FormatError, LabelMismatch, LanguageMismatch


def round_half_away(x: float, ndigits: int = 2) -> float:
    """Round to ndigits with ties away from zero (so 0.675 -> 0.68)."""
    q = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True, slots=True)
class FrequencyRecord:
    document_id: str
    label: str
    category_id: int
    hit_count: int | None
    word_total: int | None
    frequency: float

    @property
    def display_frequency(self) -> float:
        return round_half_away(self.frequency, 2)


@dataclass(frozen=True, slots=True)
class WordRankEntry:
    category_id: int
    word: str
    count: int
    rank: int


@dataclass(frozen=True, slots=True)
class ChapterDelta:
    label: str
    delta: float
    is_max: bool


def _match_counts(corpus: Corpus, dictionary: Dictionary):
    """Yield (document, {category_id: hits}, word_total) per document."""
    cache: dict[str, frozenset[int]] = {}
    for doc in corpus.documents:
        counts: dict[int, int] = {}
        total = 0
        for tok in doc.word_tokens():
            total += 1
            cats = cache.get(tok.normalized)
            if cats is None:
                cats = dictionary.match_token(tok.normalized)
                cache[tok.normalized] = cats
            for cid in cats:
                counts[cid] = counts.get(cid, 0) + 1
        yield doc, counts, total


def category_frequencies(corpus: Corpus, dictionary: Dictionary) -> list[FrequencyRecord]:
    """One record per (document, category), categories in id order."""
    if corpus.language != dictionary.language:
        raise LanguageMismatch(
            f"corpus is {corpus.language!r}, dictionary is {dictionary.language!r}")
    cat_ids = sorted(c.id for c in dictionary.categories)
    records = []
    for doc, counts, total in _match_counts(corpus, dictionary):
        for cid in cat_ids:
            hits = counts.get(cid, 0)
            freq = 100.0 * hits / total if total else 0.0
            records.append(FrequencyRecord(doc.id, doc.label, cid, hits, total, freq))
    return records


def top_words(corpus: Corpus, dictionary: Dictionary, category_id: int,
              k: int) -> list[WordRankEntry]:
    """Top-k matching words by corpus-wide token count, ties alphabetical."""
    if corpus.language != dictionary.language:
        raise LanguageMismatch(
            f"corpus is {corpus.language!r}, dictionary is {dictionary.language!r}")
    dictionary.category(category_id)  # raises UnknownCategory
    if k < 1:
        raise ValueError("k must be >= 1")
    counts: dict[str, int] = {}
    cache: dict[str, bool] = {}
    for doc in corpus.documents:
        for tok in doc.word_tokens():
            hit = cache.get(tok.normalized)
            if hit is None:
                hit = category_id in dictionary.match_token(tok.normalized)
                cache[tok.normalized] = hit
            if hit:
                counts[tok.normalized] = counts.get(tok.normalized, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return [WordRankEntry(category_id, word, count, rank)
            for rank, (word, count) in enumerate(ranked, start=1)]


def chapter_diff(left: list[FrequencyRecord], right: list[FrequencyRecord],
                 category_id: int,
                 right_category_id: int | None = None) -> list[ChapterDelta]:
    """Per-label difference of displayed frequencies, largest |delta| flagged.

    Both lists must cover the same ordered labels. right_category_id lets the
    two sides use different category ids (cross-language dictionaries).
    """
    if right_category_id is None:
        right_category_id = category_id
    lrecs = [r for r in left if r.category_id == category_id]
    rrecs = [r for r in right if r.category_id == right_category_id]
    llabels = [r.label for r in lrecs]
    rlabels = [r.label for r in rrecs]
    if llabels != rlabels:
        raise LabelMismatch(f"left labels {llabels} != right labels {rlabels}")
    if not lrecs:
        raise LabelMismatch(f"no records for category {category_id}")
    deltas = [round_half_away(l.display_frequency - r.display_frequency, 2)
              for l, r in zip(lrecs, rrecs)]
    max_idx = max(range(len(deltas)), key=lambda i: (abs(deltas[i]), -i))
    return [ChapterDelta(label, delta, i == max_idx)
            for i, (label, delta) in enumerate(zip(llabels, deltas))]


def write_frequency_csv(records: list[FrequencyRecord], dictionary: Dictionary,
                        stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["doc_id", "category_name", "hit_count", "word_total", "frequency"])
    for rec in records:
        name = dictionary.category(rec.category_id).name
        writer.writerow([rec.document_id, name,
                         "" if rec.hit_count is None else rec.hit_count,
                         "" if rec.word_total is None else rec.word_total,
                         f"{rec.display_frequency:.2f}"])


def load_frequency_csv(path, category_id: int = 0) -> list[FrequencyRecord]:
    """Load fixture rows of label,frequency into records (no token counts)."""
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise FormatError(f"expected label,frequency, got {row!r}", line=lineno)
            label = row[0].strip()
            try:
                value = float(row[1])
            except ValueError:
                raise FormatError(f"non-numeric frequency {row[1]!r}",
                                  line=lineno) from None
            records.append(FrequencyRecord(label, label, category_id, None, None, value))
    if not records:
        raise FormatError(f"{path}: no data rows")
    return records
