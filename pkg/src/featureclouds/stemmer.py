"""Root-form reduction for identifier word tokens.

A small rule-driven stemmer stands in for dictionary lemmatization. An
exceptions map handles irregular forms first (men -> man). Ordered
detachment rules then strip plural endings and the verb suffixes "ing" and
"ed", collapsing a doubled trailing consonant left behind by the strip
(settings -> setting -> sett -> set). An optional lexicon of known roots
arbitrates between candidate forms; without one, the detached form is used
as-is, which can over-stem rare words (created -> creat). Supplying a
lexicon file fixes such cases without code changes.

Tokens shorter than three characters are returned untouched by the
detachment rules so that single letters and digit runs survive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .blocks import IdentifierKind
from .errors import WordListError
from .tokenizer import Token

_VOWELS = frozenset("aeiou")

# Tokens below this length skip the detachment rules entirely.
_SHORT_TOKEN_LEN = 3


@dataclass(frozen=True)
class StemmerConfig:
    """Settings for stem_word.

    ``exceptions`` maps whole words to their root and wins over every rule.
    ``lexicon`` is an optional set of known roots; when present, a detached
    form is only accepted if the lexicon knows it. ``min_stem_len`` is the
    shortest remainder allowed when stripping "ing"/"ed". ``enabled=False``
    turns stemming into the identity function.
    """

    exceptions: Mapping[str, str] = field(default_factory=dict)
    lexicon: frozenset[str] | None = None
    min_stem_len: int = 3
    enabled: bool = True

    def __post_init__(self) -> None:
        if self.min_stem_len < 1:
            raise ValueError("min_stem_len must be at least 1")
        normalized = {
            word.lower(): root.lower() for word, root in dict(self.exceptions).items()
        }
        object.__setattr__(self, "exceptions", normalized)
        if self.lexicon is not None:
            object.__setattr__(
                self, "lexicon", frozenset(word.lower() for word in self.lexicon)
            )


DEFAULT_CONFIG = StemmerConfig()


@dataclass(frozen=True)
class Stem:
    """A stemmed token, still carrying its source identifier kind."""

    text: str
    source_kind: IdentifierKind = IdentifierKind.UNKNOWN


def _detach_plural(word: str) -> str:
    # First matching rule wins; "ss" endings are left alone so "class"
    # style words survive.
    if word.endswith("ies"):
        return word[:-3] + "y"
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith(("ches", "shes", "xes", "zes")):
        return word[:-2]
    if word.endswith("ss"):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word


def _detach_verb_suffix(word: str, min_stem_len: int) -> str:
    stripped = False
    for suffix in ("ing", "ed"):
        if word.endswith(suffix) and len(word) - len(suffix) >= min_stem_len:
            word = word[: -len(suffix)]
            stripped = True
            break
    # Collapse the doubled consonant a strip can expose: logg -> log.
    if stripped and len(word) >= 2 and word[-1] == word[-2] and word[-1] not in _VOWELS:
        word = word[:-1]
    return word


def stem_word(token: str, config: StemmerConfig = DEFAULT_CONFIG) -> str:
    """Reduce one lowercase token to its root form.

    Stage order: exceptions map, plural detachment, verb-suffix detachment,
    then lexicon arbitration over the candidates (detached form, detached
    form + "e", plural-detached form, original). Without a lexicon the
    detached form stands. Never returns the empty string.
    """
    if not config.enabled:
        return token
    root = config.exceptions.get(token)
    if root is not None:
        return root
    if len(token) < _SHORT_TOKEN_LEN:
        plural = detached = token
    else:
        plural = _detach_plural(token)
        detached = _detach_verb_suffix(plural, config.min_stem_len)
    if config.lexicon is None:
        return detached
    for candidate in (detached, detached + "e", plural, token):
        if candidate in config.lexicon:
            return candidate
    return token


def stem_all(tokens: Iterable[Token], config: StemmerConfig = DEFAULT_CONFIG) -> list[Stem]:
    """Stem a token sequence, keeping order and source kinds."""
    return [Stem(stem_word(token.text, config), token.source_kind) for token in tokens]


def load_exceptions(text: str) -> dict[str, str]:
    """Parse an exceptions file: one ``word root`` pair per line.

    Blank lines and ``#`` comments are skipped; anything else with a field
    count other than two is rejected with its line number. Later entries
    for the same word win.
    """
    exceptions: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise WordListError(
                f"line {lineno}: expected 'word root', got {len(fields)} fields"
            )
        word, root = fields
        exceptions[word.lower()] = root.lower()
    return exceptions


def load_lexicon(text: str) -> frozenset[str]:
    """Parse a lexicon file: one known root per line, comments allowed."""
    words: set[str] = set()
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        words.add(stripped.split()[0].lower())
    return frozenset(words)


def load_exceptions_file(path: str | Path) -> dict[str, str]:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise WordListError(f"{p}: {exc}") from exc
    try:
        return load_exceptions(text)
    except WordListError as exc:
        raise WordListError(f"{p}: {exc}") from exc


def load_lexicon_file(path: str | Path) -> frozenset[str]:
    p = Path(path)
    try:
        return load_lexicon(p.read_text(encoding="utf-8"))
    except OSError as exc:
        raise WordListError(f"{p}: {exc}") from exc
