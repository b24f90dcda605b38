import random

import pytest

from lexshift import (Corpus, NGramSpec, extract_ngrams, filter_by_category,
                      ingest_document, parse_dic)
from lexshift.errors import UnknownCategory
from oracles import naive_ngrams

DIC = "%\n1\taffect\n2\tanger\n%\nwar\t2\t1\n"


def _corpus(text, doc_id="d1", language="en"):
    return Corpus("c", language, (ingest_document(text, language, "1", doc_id),))


def test_repeated_sentence_family():
    text = "the war to end all wars.\nthe war to end all wars.\nthe war to end all wars."
    report = extract_ngrams(_corpus(text), NGramSpec())
    # one 6-word sentence seen three times: 4+3+2+1 windows of lengths 3-6
    assert report.type_count == 10
    assert all(e.freq == 3 for e in report.entries)
    assert report.token_count == 30
    lengths = sorted(e.length for e in report.entries)
    assert lengths == [3, 3, 3, 3, 4, 4, 4, 5, 5, 6]


def test_min_freq_filters_out_pairs():
    report = extract_ngrams(_corpus("a b a b a b."), NGramSpec(min_freq=3))
    assert report.type_count == 0


def test_overlapping_occurrences_all_count():
    report = extract_ngrams(_corpus("b a b a b."),
                            NGramSpec(n_min=3, n_max=3, min_freq=2))
    entry = {" ".join(e.tokens): e for e in report.entries}["b a b"]
    assert entry.freq == 2
    assert [o.start_position for o in entry.occurrences] == [0, 2]


def test_spec_validation():
    with pytest.raises(ValueError):
        NGramSpec(n_min=0)
    with pytest.raises(ValueError):
        NGramSpec(n_min=4, n_max=3)
    with pytest.raises(ValueError):
        NGramSpec(min_freq=0)


def test_windows_skip_punctuation_but_not_sentences():
    # comma and numeral sit inside the window; the full stop ends it
    report = extract_ngrams(_corpus("war, 12 war war. war war war."),
                            NGramSpec(n_min=3, n_max=3, min_freq=2))
    entry = {" ".join(e.tokens): e for e in report.entries}["war war war"]
    assert entry.freq == 2


def test_cross_sentence_flag():
    text = "one two. three four."
    within = extract_ngrams(_corpus(text), NGramSpec(n_min=3, n_max=3, min_freq=1))
    across = extract_ngrams(_corpus(text),
                            NGramSpec(n_min=3, n_max=3, min_freq=1,
                                      cross_sentence=True))
    assert within.type_count == 0
    assert {" ".join(e.tokens) for e in across.entries} == {"one two three",
                                                            "two three four"}


def test_case_fold_toggle():
    text = "In this war.\nin this war.\nIn this war."
    folded = extract_ngrams(_corpus(text), NGramSpec(n_min=3, n_max=3))
    exact = extract_ngrams(_corpus(text),
                           NGramSpec(n_min=3, n_max=3, case_fold=False))
    assert folded.type_count == 1
    assert folded.entries[0].freq == 3
    assert exact.type_count == 0  # 2 vs 1 casing variants, both under min_freq


def test_sorting_order():
    text = ("z z z. z z z. z z z. z z z.\n"
            "a a a. a a a. a a a. a a a.\n"
            "b c d. b c d. b c d.")
    report = extract_ngrams(_corpus(text), NGramSpec(n_min=3, n_max=3))
    names = [" ".join(e.tokens) for e in report.entries]
    assert names == ["a a a", "z z z", "b c d"]  # freq desc, then lexical


def _random_corpus(rng, max_tokens=500):
    alphabet = [chr(97 + i) for i in range(rng.randint(2, 20))]
    docs = []
    budget = rng.randint(30, max_tokens)
    doc_count = rng.randint(1, 3)
    for d in range(doc_count):
        lines = []
        spent = 0
        while spent < budget // doc_count:
            n = rng.randint(1, 12)
            words = [rng.choice(alphabet) for _ in range(n)]
            spent += n
            lines.append(" ".join(words) + rng.choice([".", "!", "?"]))
        docs.append(ingest_document("\n".join(lines), "en", str(d + 1),
                                    doc_id=f"d{d + 1}"))
    return Corpus("c", "en", tuple(docs))


def _report_as_dict(report):
    return {e.tokens: [tuple(o) for o in e.occurrences] for e in report.entries}


def test_oracle_equivalence_seeded():
    rng = random.Random(7)
    for _ in range(20):
        corp = _random_corpus(rng)
        n_min = rng.randint(1, 3)
        spec = NGramSpec(n_min=n_min, n_max=n_min + rng.randint(0, 4),
                         min_freq=rng.randint(1, 3),
                         cross_sentence=rng.random() < 0.5)
        mine = _report_as_dict(extract_ngrams(corp, spec))
        ref = naive_ngrams(corp, spec.n_min, spec.n_max, spec.min_freq,
                           spec.cross_sentence, spec.case_fold)
        assert mine == {k: [tuple(o) for o in v] for k, v in ref.items()}


def test_subgram_monotonicity_seeded():
    rng = random.Random(21)
    for _ in range(10):
        corp = _random_corpus(rng, max_tokens=200)
        spec = NGramSpec(n_min=2, n_max=5, min_freq=1)
        report = extract_ngrams(corp, spec)
        freq = {e.tokens: e.freq for e in report.entries}
        for entry in report.entries:
            for sub_len in range(spec.n_min, entry.length):
                for start in range(entry.length - sub_len + 1):
                    sub = entry.tokens[start:start + sub_len]
                    assert freq[sub] >= entry.freq, (entry.tokens, sub)


def test_self_concatenation_doubles_frequencies():
    rng = random.Random(4)
    corp = _random_corpus(rng, max_tokens=120)
    clones = tuple(
        ingest_document("\n".join(" ".join(t.surface for t in s)
                                  for s in doc.sentences),
                        "en", doc.label, doc_id=doc.id + "x")
        for doc in corp.documents)
    doubled = Corpus("c2", "en", corp.documents + clones)
    spec = NGramSpec(n_min=2, n_max=4, min_freq=1)
    base = {e.tokens: e.freq for e in extract_ngrams(corp, spec).entries}
    twice = {e.tokens: e.freq for e in extract_ngrams(doubled, spec).entries}
    assert twice == {k: 2 * v for k, v in base.items()}


def test_filter_by_category():
    corp = _corpus("in this war. in this war. in this war.\n"
                   "good manners and. good manners and. good manners and.")
    dic = parse_dic(DIC, "en")
    report = extract_ngrams(corp, NGramSpec())
    assert report.type_count == 2
    filtered = filter_by_category(report, dic, 2)
    assert [" ".join(e.tokens) for e in filtered.entries] == ["in this war"]
    assert filtered.type_count == 1
    assert filtered.token_count == 3


def test_filter_no_matches_gives_empty_report():
    corp = _corpus("calm calm calm. calm calm calm. calm calm calm.")
    dic = parse_dic(DIC, "en")
    filtered = filter_by_category(extract_ngrams(corp, NGramSpec()), dic, 2)
    assert filtered.type_count == 0
    assert filtered.token_count == 0


def test_filter_by_ancestor_is_superset(source_corpus, en_dict):
    report = extract_ngrams(source_corpus, NGramSpec())
    anger = filter_by_category(report, en_dict, 3)
    affect = filter_by_category(report, en_dict, 1)
    assert {e.tokens for e in anger.entries} <= {e.tokens for e in affect.entries}


def test_filter_unknown_category():
    corp = _corpus("war war war.")
    dic = parse_dic(DIC, "en")
    with pytest.raises(UnknownCategory):
        filter_by_category(extract_ngrams(corp, NGramSpec()), dic, 404)
