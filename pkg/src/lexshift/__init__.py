"""lexshift: corpus analytics for attitudinal shifts across a translation.

The pipeline combines dictionary-based category frequencies, a gated
two-sample comparison procedure, word n-gram extraction, sentence-level
alignment, and an occurrence-by-occurrence shift report.
"""

from .align import (AlignmentPair, ParallelCorpus, align_corpora,
                    aligned_targets, gale_church_align, load_alignment,
                    serialize_alignment)
from .corpus import (Corpus, CorpusStats, Document, Token, corpus_stats,
                     document_to_text, ingest_document, load_corpus)
from .dictionary import (Category, Dictionary, Pattern, load_hierarchy,
                         match_token, parse_dic)
from .frequency import (ChapterDelta, FrequencyRecord, WordRankEntry,
                        category_frequencies, chapter_diff,
                        load_frequency_csv, round_half_away, top_words)
from .ngrams import (NGramEntry, NGramReport, NGramSpec, Occurrence,
                     extract_ngrams, filter_by_category)
from .shift import (ShiftFinding, ShiftReport, build_shift_report,
                    classify_occurrence, kwic, render_json, render_markdown)
from .stats import (ComparisonPlan, DescriptiveStats, Sample, TestResult,
                    compare_samples, describe, mann_whitney_u, shapiro_wilk,
                    two_sample_t, variance_equal_test)

__version__ = "0.1.0"

__all__ = [
    "AlignmentPair", "Category", "ChapterDelta", "ComparisonPlan", "Corpus",
    "CorpusStats", "DescriptiveStats", "Dictionary", "Document",
    "FrequencyRecord", "NGramEntry", "NGramReport", "NGramSpec", "Occurrence",
    "ParallelCorpus", "Pattern", "Sample", "ShiftFinding", "ShiftReport",
    "TestResult", "Token", "WordRankEntry", "align_corpora",
    "aligned_targets", "build_shift_report", "category_frequencies",
    "chapter_diff", "classify_occurrence", "compare_samples", "corpus_stats",
    "describe", "document_to_text", "extract_ngrams", "filter_by_category",
    "gale_church_align", "ingest_document", "kwic", "load_alignment",
    "load_corpus", "load_frequency_csv", "load_hierarchy", "mann_whitney_u",
    "match_token", "parse_dic", "render_json", "render_markdown",
    "round_half_away", "serialize_alignment", "shapiro_wilk", "top_words",
    "two_sample_t", "variance_equal_test",
]
