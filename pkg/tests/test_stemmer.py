"""Detachment-rule stemming."""
from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from featureclouds import (
    IdentifierKind,
    StemmerConfig,
    Token,
    WordListError,
    load_exceptions,
    load_lexicon,
    stem_all,
    stem_word,
)


@pytest.mark.parametrize(
    ("word", "root"),
    [
        ("drawing", "draw"),
        ("settings", "set"),
        ("shapes", "shape"),
        ("logging", "log"),
        ("running", "run"),
        ("classes", "class"),
        ("entries", "entry"),
        ("boxes", "box"),
        ("matches", "match"),
        ("wishes", "wish"),
        ("created", "creat"),
        ("class", "class"),
        ("state", "state"),
        ("oval", "oval"),
        ("ovalx", "ovalx"),
        ("rectangley", "rectangley"),
        ("ed", "ed"),
        ("to", "to"),
        ("9", "9"),
        ("42", "42"),
    ],
)
def test_detachment_rules(word, root):
    assert stem_word(word) == root


def test_exceptions_win_over_rules():
    config = StemmerConfig(exceptions={"men": "man", "Mice": "MOUSE"})
    assert stem_word("men", config) == "man"
    assert stem_word("mice", config) == "mouse"


def test_disabled_stemmer_is_identity():
    config = StemmerConfig(enabled=False)
    assert stem_word("settings", config) == "settings"
    assert stem_word("drawing", config) == "drawing"


def test_min_stem_len_blocks_short_strips():
    assert stem_word("sing") == "sing"
    assert stem_word("sing", StemmerConfig(min_stem_len=1)) == "s"


def test_min_stem_len_must_be_positive():
    with pytest.raises(ValueError):
        StemmerConfig(min_stem_len=0)


def test_lexicon_restores_trailing_e():
    config = StemmerConfig(lexicon=frozenset({"make"}))
    assert stem_word("making", config) == "make"


def test_lexicon_prefers_detached_form():
    config = StemmerConfig(lexicon=frozenset({"set", "setting"}))
    assert stem_word("settings", config) == "set"


def test_lexicon_falls_back_to_plural_form():
    config = StemmerConfig(lexicon=frozenset({"setting"}))
    assert stem_word("settings", config) == "setting"


def test_lexicon_with_no_candidate_keeps_original():
    config = StemmerConfig(lexicon=frozenset({"unrelated"}))
    assert stem_word("settings", config) == "settings"


def test_stem_all_keeps_order_and_kind():
    tokens = [
        Token("drawing", IdentifierKind.PACKAGE),
        Token("settings", IdentifierKind.CLASS),
    ]
    assert [(s.text, s.source_kind) for s in stem_all(tokens)] == [
        ("draw", IdentifierKind.PACKAGE),
        ("set", IdentifierKind.CLASS),
    ]


def test_stemming_is_idempotent_on_fixture_vocabulary():
    words = [
        "my", "oval", "get", "ovalx", "ovaly", "set", "draw", "shape",
        "rectangle", "rectanglex", "rectangley",
        "activity", "diagram", "fig", "state", "partition", "action",
        "selection", "call", "u", "m", "l", "prop", "panel", "pool",
        "graph", "model", "layouter", "subactivity", "object", "flow",
        "init", "create", "renderer", "factory", "mode", "place",
        "log", "info", "use", "case", "class", "sequence", "message",
        "deployment", "collaboration", "cognitive", "support",
    ]
    for word in words:
        once = stem_word(word)
        assert stem_word(once) == once


def test_load_exceptions_parses_pairs():
    text = "# irregular forms\nmen man\nMICE Mouse\n\n"
    assert load_exceptions(text) == {"men": "man", "mice": "mouse"}


def test_load_exceptions_rejects_bad_line():
    with pytest.raises(WordListError, match="line 2"):
        load_exceptions("men man\nthree words here maybe\n")


def test_load_lexicon_dedupes_and_lowercases():
    assert load_lexicon("Make\nmake\nset\n# comment\n") == frozenset({"make", "set"})


_words = st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789", min_size=1, max_size=15)


@given(_words)
def test_stem_is_never_empty(word):
    assert stem_word(word)


@given(_words)
def test_stem_never_grows_without_lexicon(word):
    assert len(stem_word(word)) <= len(word)
