from pathlib import Path

import pytest

from lexshift import (Sample, load_alignment, load_corpus, load_frequency_csv,
                      load_hierarchy, parse_dic)
from lexshift.corpus import read_text_file

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def sample_from_csv(path, label):
    return Sample([r.frequency for r in load_frequency_csv(path)], label)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def table_a_anger():
    return sample_from_csv(FIXTURES / "tables" / "table1_corpus_a_anger.csv", "A")


@pytest.fixture(scope="session")
def table_b_anger():
    return sample_from_csv(FIXTURES / "tables" / "table1_corpus_b_anger.csv", "B")


@pytest.fixture(scope="session")
def table_c_anger():
    return sample_from_csv(FIXTURES / "tables" / "table5_corpus_c_anger.csv", "C")


@pytest.fixture(scope="session")
def table_d_anger():
    return sample_from_csv(FIXTURES / "tables" / "table5_corpus_d_anger.csv", "D")


@pytest.fixture(scope="session")
def en_dict():
    dic = parse_dic(read_text_file(FIXTURES / "dictionaries" / "sample_en.dic"), "en")
    return load_hierarchy(
        dic, read_text_file(FIXTURES / "dictionaries" / "sample_en_hierarchy.tsv"))


@pytest.fixture(scope="session")
def zh_dict():
    dic = parse_dic(read_text_file(FIXTURES / "dictionaries" / "sample_zh.dic"), "zh")
    return load_hierarchy(
        dic, read_text_file(FIXTURES / "dictionaries" / "sample_zh_hierarchy.tsv"))


@pytest.fixture(scope="session")
def source_corpus():
    return load_corpus(FIXTURES / "source_corpus" / "manifest.tsv", "en", "source")


@pytest.fixture(scope="session")
def target_corpus():
    return load_corpus(FIXTURES / "target_corpus" / "manifest.tsv", "zh", "target")


@pytest.fixture(scope="session")
def parallel(source_corpus, target_corpus):
    return load_alignment(source_corpus, target_corpus,
                          read_text_file(FIXTURES / "alignment.tsv"))
