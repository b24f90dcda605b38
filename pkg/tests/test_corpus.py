import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexshift import Corpus, corpus_stats, document_to_text, ingest_document
from lexshift.corpus import (NUMERAL, PUNCTUATION, WORD, load_corpus,
                             read_text_file)
from lexshift.errors import EmptyInput, FormatError, InvalidEncoding


def words(doc):
    return [t.surface for t in doc.word_tokens()]


def test_two_sentence_ingest():
    doc = ingest_document("The war. The war!", "en", "c1")
    assert len(doc.sentences) == 2
    assert doc.word_count == 4
    assert corpus_stats(Corpus("c", "en", (doc,))).word_types == 2


def test_presegmented_chinese():
    doc = ingest_document("我们 反对 战争 。", "zh", "c1")
    assert len(doc.sentences) == 1
    assert doc.word_count == 3
    assert doc.sentences[0][-1].kind == PUNCTUATION


def test_token_kinds_and_positions():
    doc = ingest_document("War began in 1943.", "en", "c1")
    kinds = [t.kind for t in doc.sentences[0]]
    assert kinds == [WORD, WORD, WORD, NUMERAL, PUNCTUATION]
    assert [t.position_in_sentence for t in doc.sentences[0]] == [0, 1, 2, 3, 4]
    assert doc.word_count == 3  # numerals are not words


def test_apostrophes_and_hyphens_stay_inside_words():
    doc = ingest_document("Don't self-translate.", "en", "c1")
    assert words(doc) == ["Don't", "self-translate"]
    assert doc.sentences[0][0].normalized == "don't"


def test_newline_is_a_hard_break():
    doc = ingest_document("one line\nanother line", "en", "c1")
    assert len(doc.sentences) == 2


def test_fullwidth_terminals_split():
    doc = ingest_document("好 ！ 好 ？ 好 。", "zh", "c1")
    assert len(doc.sentences) == 3


def test_no_empty_sentences():
    doc = ingest_document("Stop... now.\n\n\nDone.", "en", "c1")
    assert all(len(s) > 0 for s in doc.sentences)


def test_empty_input_rejected():
    with pytest.raises(EmptyInput):
        ingest_document("123 ... 456", "en", "c1")
    with pytest.raises(EmptyInput):
        ingest_document("", "en", "c1")


def test_corpus_stats_tokens_vs_types():
    doc = ingest_document("the war the war", "en", "c1")
    stats = corpus_stats(Corpus("c", "en", (doc,)))
    assert stats.word_tokens == 4
    assert stats.word_types == 2


def test_corpus_stats_all_distinct():
    text = " ".join(f"w{chr(97 + i // 26)}{chr(97 + i % 26)}" for i in range(100))
    doc = ingest_document(text, "en", "c1")
    stats = corpus_stats(Corpus("c", "en", (doc,)))
    assert stats.word_tokens == 100
    assert stats.word_types == 100


def test_case_folding_merges_types():
    doc = ingest_document("War war WAR", "en", "c1")
    stats = corpus_stats(Corpus("c", "en", (doc,)))
    assert (stats.word_tokens, stats.word_types) == (3, 1)


def test_per_document_counts_sum_to_corpus(source_corpus):
    stats = corpus_stats(source_corpus)
    assert sum(t for _, t, _ in stats.per_document) == stats.word_tokens
    per_doc_types = [ty for _, _, ty in stats.per_document]
    assert max(per_doc_types) <= stats.word_types <= sum(per_doc_types)


@settings(max_examples=60)
@given(st.text(min_size=1, max_size=200))
def test_ingest_is_deterministic(text):
    try:
        first = ingest_document(text, "en", "c1")
    except EmptyInput:
        return
    second = ingest_document(text, "en", "c1")
    assert first == second


@settings(max_examples=60)
@given(st.text(alphabet="ab .!?\n'-战争。", min_size=1, max_size=120))
def test_serialize_reingest_is_idempotent(text):
    try:
        doc = ingest_document(text, "en", "c1")
    except EmptyInput:
        return
    once = document_to_text(doc)
    again = document_to_text(ingest_document(once, "en", "c1"))
    assert once == again


def test_load_corpus_manifest(fixtures_dir):
    corp = load_corpus(fixtures_dir / "source_corpus" / "manifest.tsv", "en", "src")
    assert [d.id for d in corp.documents] == ["en1", "en2", "en3"]
    assert [d.label for d in corp.documents] == ["1", "2", "3"]
    assert all(d.language == "en" for d in corp.documents)


def test_malformed_manifest_row(tmp_path):
    (tmp_path / "m.tsv").write_text("only-two\tfields\n", encoding="utf-8")
    with pytest.raises(FormatError) as err:
        load_corpus(tmp_path / "m.tsv", "en", "c")
    assert err.value.line == 1


def test_invalid_encoding(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"\xff\xfe war")
    with pytest.raises(InvalidEncoding):
        read_text_file(bad)


def test_duplicate_document_ids_rejected():
    d1 = ingest_document("one.", "en", "a", doc_id="x")
    d2 = ingest_document("two.", "en", "b", doc_id="x")
    with pytest.raises(ValueError):
        Corpus("c", "en", (d1, d2))
