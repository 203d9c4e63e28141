"""Identifier splitting."""
from __future__ import annotations

import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from featureclouds import (
    EmptyTokensError,
    FeatureBlock,
    Identifier,
    IdentifierKind,
    split_identifier,
    tokenize_block,
)

# Independent reference implementation: a single regex pass.
_REFERENCE = re.compile(r"[A-Z][a-z]*|[a-z]+|[0-9]+")


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        ("getOvalx", ["get", "ovalx"]),
        ("OvalSettings", ["oval", "settings"]),
        ("Drawing.Shapes.Oval", ["drawing", "shapes", "oval"]),
        ("UMLActivityDiagram", ["u", "m", "l", "activity", "diagram"]),
        ("gET_OptimizeN", ["g", "e", "t", "optimize", "n"]),
        ("Rect2D", ["rect", "2", "d"]),
        ("snake_case_name", ["snake", "case", "name"]),
        ("x", ["x"]),
        ("42", ["42"]),
        ("", []),
        ("__$$__", []),
        ("caféMenu", ["caf", "menu"]),
    ],
)
def test_split_examples(raw, expected):
    assert split_identifier(raw) == expected


def test_tokenize_block_keeps_order_and_kind():
    block = FeatureBlock(
        "b",
        (
            Identifier("MyOval", IdentifierKind.CLASS),
            Identifier("Ovalx", IdentifierKind.ATTRIBUTE),
        ),
    )
    assert [(t.text, t.source_kind) for t in tokenize_block(block)] == [
        ("my", IdentifierKind.CLASS),
        ("oval", IdentifierKind.CLASS),
        ("ovalx", IdentifierKind.ATTRIBUTE),
    ]


def test_tokenize_block_without_tokens_fails():
    block = FeatureBlock("b", (Identifier("$$$"),))
    with pytest.raises(EmptyTokensError):
        tokenize_block(block)


_raw_strings = st.text(
    alphabet=st.characters(min_codepoint=32, max_codepoint=0x2FF),
    max_size=30,
)


@given(_raw_strings)
def test_split_matches_reference_regex(raw):
    assert split_identifier(raw) == [m.lower() for m in _REFERENCE.findall(raw)]


@given(_raw_strings)
def test_joined_tokens_reconstruct_lowercased_alnum(raw):
    kept = "".join(
        ch.lower()
        for ch in raw
        if "a" <= ch <= "z" or "A" <= ch <= "Z" or "0" <= ch <= "9"
    )
    assert "".join(split_identifier(raw)) == kept


@given(_raw_strings)
def test_tokens_are_nonempty_lowercase_alnum(raw):
    for token in split_identifier(raw):
        assert token
        assert all("a" <= ch <= "z" or "0" <= ch <= "9" for ch in token)
