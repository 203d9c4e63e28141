"""Camel-case identifier splitting.

Identifiers are cut into lowercase word tokens at three kinds of boundary:
any character that is not an ASCII letter or digit (the separator itself is
dropped), the position just before each uppercase letter, and every
letter/digit transition. Uppercase runs therefore fall apart into
one-letter tokens ("UML" gives u, m, l); there is deliberately no acronym
grouping, and digit runs survive as tokens of their own ("Rect2D" gives
rect, 2, d).
"""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import FeatureBlock, IdentifierKind
from .errors import EmptyTokensError


@dataclass(frozen=True)
class Token:
    """One word token, still carrying the kind of its source identifier."""

    text: str
    source_kind: IdentifierKind = IdentifierKind.UNKNOWN


def split_identifier(raw: str) -> list[str]:
    """Split one identifier into lowercase tokens.

    Pure function of ``raw``; returns [] when the string holds no ASCII
    letters or digits. Joining the tokens always reconstructs the
    lowercased input minus its separator characters.
    """
    tokens: list[str] = []
    current: list[str] = []
    prev_digit = False
    for ch in raw:
        is_lower = "a" <= ch <= "z"
        is_upper = "A" <= ch <= "Z"
        is_digit = "0" <= ch <= "9"
        if not (is_lower or is_upper or is_digit):
            # Separator: anything non-alphanumeric, including non-ASCII.
            if current:
                tokens.append("".join(current))
                current = []
            continue
        if current and (is_upper or is_digit != prev_digit):
            tokens.append("".join(current))
            current = []
        current.append(ch.lower() if is_upper else ch)
        prev_digit = is_digit
    if current:
        tokens.append("".join(current))
    return tokens


def tokenize_block(block: FeatureBlock) -> list[Token]:
    """Tokenize every identifier of a block, preserving order.

    Tokens keep the identifier order of the block and the split order
    within each identifier, and inherit the identifier's kind. A block
    whose identifiers yield no tokens at all raises EmptyTokensError.
    """
    tokens = [
        Token(text, identifier.kind)
        for identifier in block.identifiers
        for text in split_identifier(identifier.raw)
    ]
    if not tokens:
        raise EmptyTokensError(f"block {block.id!r}: no identifier produced any token")
    return tokens
