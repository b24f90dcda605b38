"""The full pipeline: where does the translation change the attitude?

Every occurrence of an anger-bearing bundle in the source is traced through
the sentence alignment and labeled preserved, dropped, added, or unaligned.
Dropped and unaligned mark softening (replacement or omission); added marks
intensification.
"""

from pathlib import Path

from lexshift import (build_shift_report, load_alignment, load_corpus,
                      load_hierarchy, parse_dic)
from lexshift.corpus import read_text_file

ROOT = Path(__file__).resolve().parent.parent / "fixtures"


def load_dict(name, tree, language):
    return load_hierarchy(
        parse_dic(read_text_file(ROOT / "dictionaries" / name), language),
        read_text_file(ROOT / "dictionaries" / tree))


source = load_corpus(ROOT / "source_corpus" / "manifest.tsv", "en", "source")
target = load_corpus(ROOT / "target_corpus" / "manifest.tsv", "zh", "target")
pc = load_alignment(source, target, read_text_file(ROOT / "alignment.tsv"))
en_dict = load_dict("sample_en.dic", "sample_en_hierarchy.tsv", "en")
zh_dict = load_dict("sample_zh.dic", "sample_zh_hierarchy.tsv", "zh")

report = build_shift_report(pc, en_dict, zh_dict,
                            en_dict.category_by_name("anger").id,
                            zh_dict.category_by_name("anger").id)

print("== Summary: occurrences per bundle ==")
print(f"{'bundle':26s} {'freq':>4s} {'pres':>5s} {'drop':>5s} "
      f"{'add':>4s} {'unal':>5s}")
for row in report.summary:
    c = row.counts
    print(f"{row.ngram_text:26s} {row.freq:4d} {c['preserved']:5d} "
          f"{c['dropped']:5d} {c['added']:4d} {c['unaligned']:5d}")

print("\n== Chapter-level anger difference (source minus target) ==")
for d in report.per_chapter_deltas:
    flag = "  <- largest gap" if d.is_max else ""
    print(f"chapter {d.label}: {d.delta:+.2f}{flag}")

print("\n== The shifts a reviewer would inspect ==")
for f in report.findings:
    if f.classification == "preserved":
        continue
    left, node, right = f.kwic
    print(f"\n[{f.classification}] '{' '.join(f.ngram.tokens)}' in "
          f"{f.occurrence.document_id} sentence {f.occurrence.sentence_index}")
    print(f"  {left} [{node}] {right}".rstrip())
    if f.target_sentences:
        for sent in f.target_sentences:
            print(f"  target: {' '.join(sent)}")
    else:
        print("  target: (sentence omitted in translation)")
