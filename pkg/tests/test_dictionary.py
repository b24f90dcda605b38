import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexshift import Dictionary, load_hierarchy, parse_dic
from lexshift.dictionary import Category, Pattern
from lexshift.errors import (CycleDetected, DuplicatePattern, FormatError,
                             UnknownCategory)
from oracles import naive_match

MINI = "%\n1\tanger\n%\nwar\t1\nbitter*\t1\n"


def test_parse_minimal_dic():
    dic = parse_dic(MINI, "en")
    assert len(dic.categories) == 1
    assert len(dic.patterns) == 2
    assert {p.stem for p in dic.patterns} == {"war", "bitter"}
    assert any(p.wildcard for p in dic.patterns)


def test_entry_with_undeclared_category():
    with pytest.raises(UnknownCategory):
        parse_dic("%\n1\tanger\n%\nwar\t99\n", "en")


def test_missing_closing_percent():
    with pytest.raises(FormatError):
        parse_dic("%\n1\tanger\nwar\t1\n", "en")


def test_malformed_category_line_carries_line_number():
    with pytest.raises(FormatError) as err:
        parse_dic("%\nnot-an-id\tanger\n%\n", "en")
    assert err.value.line == 2


def test_duplicate_category_id():
    with pytest.raises(FormatError):
        parse_dic("%\n1\tanger\n1\tother\n%\n", "en")


def test_duplicate_pattern():
    with pytest.raises(DuplicatePattern):
        parse_dic("%\n1\tanger\n%\nwar\t1\nwar\t1\n", "en")


def test_literal_and_wildcard_same_stem_allowed():
    dic = parse_dic("%\n1\ta\n2\tb\n%\nwar\t1\nwar*\t2\n", "en")
    assert dic.match_token("war") == {1}       # literal wins on exact form
    assert dic.match_token("wars") == {2}      # wildcard catches extensions


def test_hierarchy_closure():
    dic = parse_dic("%\n1\taffect\n2\tnegemo\n3\tanger\n%\nwar\t3\n", "en")
    closed = load_hierarchy(dic, "3\t2\n2\t1\n")
    assert closed.match_token("war") == {1, 2, 3}
    assert closed.category(3).parent == 2
    assert closed.category(2).parent == 1
    assert closed.category(1).parent is None


def test_empty_tree_is_identity():
    dic = parse_dic(MINI, "en")
    closed = load_hierarchy(dic, "# nothing here\n\n")
    assert closed.match_token("war") == {1}
    assert closed.categories == dic.categories


def test_cycle_detected():
    dic = parse_dic("%\n1\ta\n2\tb\n%\nx\t1\n", "en")
    with pytest.raises(CycleDetected):
        load_hierarchy(dic, "1\t2\n2\t1\n")


def test_unknown_id_in_tree():
    dic = parse_dic(MINI, "en")
    with pytest.raises(UnknownCategory):
        load_hierarchy(dic, "1\t42\n")


def test_hierarchy_too_deep():
    dic = parse_dic("%\n1\ta\n2\tb\n3\tc\n4\td\n%\nx\t4\n", "en")
    with pytest.raises(FormatError):
        load_hierarchy(dic, "4\t3\n3\t2\n2\t1\n")


def test_match_examples(en_dict):
    anger = en_dict.category_by_name("anger").id
    assert anger in en_dict.match_token("war")
    assert en_dict.match_token("war") >= {1, 2, 3}  # ancestors closed in
    assert anger in en_dict.match_token("bitterness")
    assert en_dict.match_token("peace") == frozenset()


def test_matching_is_case_insensitive_via_normalization(en_dict):
    # Callers pass normalized (case-folded) forms; stems are folded at parse.
    dic = parse_dic("%\n1\ta\n%\nWar\t1\n", "en")
    assert dic.match_token("war") == {1}


def test_longest_wildcard_wins():
    dic = parse_dic("%\n1\ta\n2\tb\n%\nbit*\t1\nbitter*\t2\n", "en")
    assert dic.match_token("bitterness") == {2}
    assert dic.match_token("bits") == {1}


def test_category_lookup_errors(en_dict):
    with pytest.raises(UnknownCategory):
        en_dict.category(999)
    with pytest.raises(UnknownCategory):
        en_dict.category_by_name("joy")


def _random_dictionary(rng, max_patterns=60, alphabet="abcde"):
    cats = tuple(Category(i, f"c{i}") for i in range(1, 7))
    seen = set()
    pats = []
    for _ in range(rng.randint(1, max_patterns)):
        stem = "".join(rng.choice(alphabet)
                       for _ in range(rng.randint(1, 6)))
        wildcard = rng.random() < 0.5
        if (stem, wildcard) in seen:
            continue
        seen.add((stem, wildcard))
        ids = frozenset(rng.sample(range(1, 7), rng.randint(1, 3)))
        pats.append(Pattern(stem, wildcard, ids))
    return Dictionary("en", cats, tuple(pats))


def _random_token(rng, patterns, alphabet="abcde"):
    if patterns and rng.random() < 0.5:
        base = rng.choice(patterns).stem
        suffix = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 4)))
        return base + suffix
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 8)))


def test_trie_equals_naive_scan_seeded():
    rng = random.Random(2024)
    for _ in range(25):
        dic = _random_dictionary(rng)
        triples = [(p.stem, p.wildcard, p.category_ids) for p in dic.patterns]
        for _ in range(200):
            token = _random_token(rng, dic.patterns)
            assert dic.match_token(token) == naive_match(triples, token), token


@settings(max_examples=50)
@given(st.data())
def test_trie_equals_naive_scan_property(data):
    stems = data.draw(st.lists(
        st.tuples(st.text(alphabet="abc", min_size=1, max_size=4), st.booleans()),
        min_size=1, max_size=12, unique=True))
    cats = tuple(Category(i, f"c{i}") for i in (1, 2, 3))
    pats = tuple(Pattern(stem, wc, frozenset(data.draw(
        st.sets(st.sampled_from([1, 2, 3]), min_size=1, max_size=3))))
        for stem, wc in stems)
    dic = Dictionary("en", cats, pats)
    token = data.draw(st.text(alphabet="abc", min_size=0, max_size=6))
    triples = [(p.stem, p.wildcard, p.category_ids) for p in pats]
    assert dic.match_token(token) == naive_match(triples, token)


def test_match_is_pure(en_dict):
    assert en_dict.match_token("warfare") == en_dict.match_token("warfare")


def test_parse_accepts_crlf_and_bom():
    text = "﻿%\r\n1\tanger\r\n%\r\nwar\t1\r\nbitter*\t1\r\n"
    dic = parse_dic(text, "en")
    assert dic.match_token("war") == {1}
    assert dic.match_token("bitterly") == {1}


def test_hierarchy_accepts_crlf():
    dic = parse_dic("%\n1\ta\n2\tb\n%\nx\t2\n", "en")
    closed = load_hierarchy(dic, "# note\r\n2\t1\r\n")
    assert closed.match_token("x") == {1, 2}


def test_ancestor_closure_property(en_dict):
    parents = {c.id: c.parent for c in en_dict.categories}
    probes = [p.stem for p in en_dict.patterns] + ["bitterness", "fighting",
                                                   "risks", "nothing"]
    for token in probes:
        cats = en_dict.match_token(token)
        for cid in cats:
            if parents[cid] is not None:
                assert parents[cid] in cats, (token, cid)
