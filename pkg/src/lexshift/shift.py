"""Classify what happens to category-bearing n-grams in the translation.

Every occurrence of a source n-gram that carries the watched category is
looked up through the sentence alignment and labeled:

* unaligned - the source sentence has no translation (omitted sentence);
* dropped   - translation exists but carries no token of the category;
* added     - the translation carries more category tokens than the n-gram;
* preserved - otherwise.

"Dropped" is a recall-oriented proxy: it flags both true omissions and
replacements with out-of-category wording, and the attached KWIC context
plus aligned target text support the human call between the two. Counting
cannot distinguish them without word-level alignment.
"""

import json
from dataclasses import dataclass

from .align import ParallelCorpus, aligned_targets
from .corpus import WORD, Corpus, Document
from .dictionary import Dictionary
from .errors import LanguageMismatch
from .frequency import ChapterDelta, category_frequencies, chapter_diff
from .ngrams import NGramEntry, NGramReport, NGramSpec, Occurrence, \
    extract_ngrams, filter_by_category

PRESERVED = "preserved"
DROPPED = "dropped"
ADDED = "added"
UNALIGNED = "unaligned"
CLASSIFICATIONS = (PRESERVED, DROPPED, ADDED, UNALIGNED)


@dataclass(frozen=True, slots=True)
class ShiftFinding:
    ngram: NGramEntry
    occurrence: Occurrence
    source_sentence: tuple[str, ...]
    target_sentences: tuple[tuple[str, ...], ...]
    source_category_hits: int
    target_category_hits: int
    classification: str
    kwic: tuple[str, str, str]


@dataclass(frozen=True, slots=True)
class ShiftSummaryRow:
    ngram_text: str
    length: int
    freq: int
    counts: dict[str, int]


@dataclass(frozen=True, slots=True)
class ShiftReport:
    source_category: int
    target_category: int
    spec: NGramSpec
    ngram_report: NGramReport
    findings: tuple[ShiftFinding, ...]
    summary: tuple[ShiftSummaryRow, ...]
    per_chapter_deltas: tuple[ChapterDelta, ...]


def classify_occurrence(source_hits: int, target_hits: int,
                        has_target: bool) -> str:
    """Label one occurrence; source_hits must be >= 1."""
    if not has_target:
        return UNALIGNED
    if target_hits == 0:
        return DROPPED
    if target_hits > source_hits:
        return ADDED
    return PRESERVED


def kwic(corpus: Corpus, pattern: list[str], width: int) -> list[tuple[str, str, str]]:
    """Concordance lines for a word sequence over each document's word stream.

    Matching is case-insensitive; contexts are word tokens, truncated at
    document boundaries. Width 0 yields the node only.
    """
    if not pattern:
        raise ValueError("pattern must be non-empty")
    if width < 0:
        raise ValueError("width must be >= 0")
    needle = [w.casefold() for w in pattern]
    n = len(needle)
    lines = []
    for doc in corpus.documents:
        words = [t for t in doc.tokens() if t.kind == WORD]
        forms = [t.normalized for t in words]
        for i in range(len(forms) - n + 1):
            if forms[i:i + n] == needle:
                lines.append(_kwic_line(words, i, n, width))
    return lines


def _kwic_line(words, start, length, width):
    left = " ".join(t.surface for t in words[max(0, start - width):start])
    node = " ".join(t.surface for t in words[start:start + length])
    right = " ".join(t.surface for t in words[start + length:start + length + width])
    return (left, node, right)


def _kwic_for_occurrence(doc: Document, occ: Occurrence, length: int, width: int):
    """KWIC line for a known window position inside a document."""
    words = [t for t in doc.tokens() if t.kind == WORD]
    for i, tok in enumerate(words):
        if (tok.sentence_index, tok.position_in_sentence) == (
                occ.sentence_index, occ.start_position):
            return _kwic_line(words, i, length, width)
    raise ValueError(f"occurrence {occ} not found in document {doc.id!r}")


def build_shift_report(pc: ParallelCorpus, src_dict: Dictionary,
                       tgt_dict: Dictionary, src_category: int,
                       tgt_category: int, spec: NGramSpec | None = None,
                       kwic_width: int = 5) -> ShiftReport:
    """Extract source n-grams of the category and classify every occurrence."""
    if pc.source.language != src_dict.language:
        raise LanguageMismatch(
            f"source corpus is {pc.source.language!r}, dictionary is "
            f"{src_dict.language!r}")
    if pc.target.language != tgt_dict.language:
        raise LanguageMismatch(
            f"target corpus is {pc.target.language!r}, dictionary is "
            f"{tgt_dict.language!r}")
    src_dict.category(src_category)
    tgt_dict.category(tgt_category)
    spec = spec or NGramSpec()

    report = filter_by_category(extract_ngrams(pc.source, spec), src_dict,
                                src_category)

    tgt_hit_cache: dict[str, bool] = {}

    def target_hits(ref) -> int:
        sent = pc.target.sentence(*ref)
        hits = 0
        for tok in sent:
            if tok.kind != WORD:
                continue
            hit = tgt_hit_cache.get(tok.normalized)
            if hit is None:
                hit = tgt_category in tgt_dict.match_token(tok.normalized)
                tgt_hit_cache[tok.normalized] = hit
            hits += hit
        return hits

    findings = []
    summary = []
    for entry in report.entries:
        src_hits = sum(
            1 for tok in entry.tokens
            if src_category in src_dict.match_token(tok.casefold()))
        counts = {c: 0 for c in CLASSIFICATIONS}
        for occ in entry.occurrences:
            doc = pc.source.document(occ.document_id)
            refs = aligned_targets(pc, (occ.document_id, occ.sentence_index))
            tgt_sents = tuple(
                tuple(t.surface for t in pc.target.sentence(*ref)) for ref in refs)
            hits = sum(target_hits(ref) for ref in refs)
            label = classify_occurrence(src_hits, hits, bool(refs))
            counts[label] += 1
            findings.append(ShiftFinding(
                ngram=entry,
                occurrence=occ,
                source_sentence=tuple(
                    t.surface for t in doc.sentences[occ.sentence_index]),
                target_sentences=tgt_sents,
                source_category_hits=src_hits,
                target_category_hits=hits,
                classification=label,
                kwic=_kwic_for_occurrence(doc, occ, entry.length, kwic_width)))
        summary.append(ShiftSummaryRow(" ".join(entry.tokens), entry.length,
                                       entry.freq, counts))

    deltas = chapter_diff(
        category_frequencies(pc.source, src_dict),
        category_frequencies(pc.target, tgt_dict),
        src_category, right_category_id=tgt_category) if _labels_match(pc) else ()
    return ShiftReport(src_category, tgt_category, spec, report,
                       tuple(findings), tuple(summary), tuple(deltas))


def _labels_match(pc: ParallelCorpus) -> bool:
    # Chapter deltas only make sense when both corpora share document labels.
    return ([d.label for d in pc.source.documents]
            == [d.label for d in pc.target.documents])


def render_markdown(report: ShiftReport, pc: ParallelCorpus,
                    src_dict: Dictionary, tgt_dict: Dictionary) -> str:
    """Deterministic markdown report: summary table, deltas, then one
    section per n-gram with KWIC lines and aligned target text."""
    src_name = src_dict.category(report.source_category).name
    tgt_name = tgt_dict.category(report.target_category).name
    spec = report.spec
    out = []
    out.append("# Attitudinal shift report")
    out.append("")
    out.append(f"Source category: {src_name} (id {report.source_category}), "
               f"corpus `{pc.source.id}` ({pc.source.language})")
    out.append(f"Target category: {tgt_name} (id {report.target_category}), "
               f"corpus `{pc.target.id}` ({pc.target.language})")
    out.append(f"N-grams: length {spec.n_min}-{spec.n_max}, minimum frequency "
               f"{spec.min_freq}, "
               f"{'crossing' if spec.cross_sentence else 'within'} sentences, "
               f"{'case-folded' if spec.case_fold else 'case-sensitive'}")
    out.append("")
    out.append(f"{report.ngram_report.type_count} n-gram types, "
               f"{report.ngram_report.token_count} tokens carry the category; "
               f"{len(report.findings)} occurrences classified.")
    out.append("")
    out.append("## Summary")
    out.append("")
    out.append("| n-gram | length | freq | preserved | dropped | added | unaligned |")
    out.append("|---|---|---|---|---|---|---|")
    for row in report.summary:
        c = row.counts
        out.append(f"| {row.ngram_text} | {row.length} | {row.freq} "
                   f"| {c[PRESERVED]} | {c[DROPPED]} | {c[ADDED]} "
                   f"| {c[UNALIGNED]} |")
    out.append("")
    if report.per_chapter_deltas:
        out.append(f"## Per-chapter frequency difference ({src_name})")
        out.append("")
        out.append("| chapter | delta | largest |")
        out.append("|---|---|---|")
        for d in report.per_chapter_deltas:
            out.append(f"| {d.label} | {d.delta:.2f} | {'*' if d.is_max else ''} |")
        out.append("")
    for row, group in zip(report.summary, _grouped_findings(report)):
        out.append(f"## {row.ngram_text}")
        out.append("")
        for f in group:
            occ = f.occurrence
            out.append(f"- [{f.classification}] {occ.document_id} "
                       f"sentence {occ.sentence_index} position {occ.start_position} "
                       f"(category tokens: source {f.source_category_hits}, "
                       f"target {f.target_category_hits})")
            left, node, right = f.kwic
            out.append(f"  - kwic: {left} [{node}] {right}".rstrip())
            if f.target_sentences:
                for sent in f.target_sentences:
                    out.append(f"  - target: {' '.join(sent)}")
            else:
                out.append("  - target: (no aligned sentence)")
        out.append("")
    return "\n".join(out).rstrip("\n") + "\n"


def _grouped_findings(report: ShiftReport):
    by_key: dict[str, list[ShiftFinding]] = {}
    for f in report.findings:
        by_key.setdefault(" ".join(f.ngram.tokens), []).append(f)
    return [by_key.get(row.ngram_text, []) for row in report.summary]


def render_json(report: ShiftReport, pc: ParallelCorpus, src_dict: Dictionary,
                tgt_dict: Dictionary) -> str:
    payload = {
        "source_category": {
            "id": report.source_category,
            "name": src_dict.category(report.source_category).name,
            "corpus": pc.source.id,
            "language": pc.source.language,
        },
        "target_category": {
            "id": report.target_category,
            "name": tgt_dict.category(report.target_category).name,
            "corpus": pc.target.id,
            "language": pc.target.language,
        },
        "spec": {
            "n_min": report.spec.n_min,
            "n_max": report.spec.n_max,
            "min_freq": report.spec.min_freq,
            "cross_sentence": report.spec.cross_sentence,
            "case_fold": report.spec.case_fold,
        },
        "summary": [
            {"ngram": row.ngram_text, "length": row.length, "freq": row.freq,
             "counts": row.counts}
            for row in report.summary
        ],
        "per_chapter_deltas": [
            {"label": d.label, "delta": d.delta, "is_max": d.is_max}
            for d in report.per_chapter_deltas
        ],
        "findings": [
            {
                "ngram": " ".join(f.ngram.tokens),
                "document_id": f.occurrence.document_id,
                "sentence_index": f.occurrence.sentence_index,
                "start_position": f.occurrence.start_position,
                "source_category_hits": f.source_category_hits,
                "target_category_hits": f.target_category_hits,
                "classification": f.classification,
                "kwic": list(f.kwic),
                "source_sentence": " ".join(f.source_sentence),
                "target_sentences": [" ".join(s) for s in f.target_sentences],
            }
            for f in report.findings
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
