"""Word weighting and name proposal for feature blocks.

The weight of a word is its occurrence count over the block's stems,
scaled by a per-kind multiplier (all multipliers default to 1, making the
weight a plain frequency). Weights are exact rationals so that uncommon
multipliers such as 1/3 never introduce float drift. Proposed names are
the heaviest words under a selection strategy; every ordering breaks
weight ties alphabetically, which keeps the whole path deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .blocks import IdentifierKind
from .errors import EmptyAfterFilterError, EmptyTableError
from .stemmer import Stem

RationalLike = Union[Fraction, int, str, float]


@dataclass(frozen=True)
class KindWeights:
    """Per-kind weight multipliers, defaulting to 1 for every kind.

    Multipliers must be non-negative and at least one must be positive.
    A multiplier of 0 drops that kind's tokens from the table entirely.
    """

    multipliers: Mapping[IdentifierKind, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        full = {kind: Fraction(1) for kind in IdentifierKind}
        for kind, value in dict(self.multipliers).items():
            fraction = Fraction(value)
            if fraction < 0:
                raise ValueError(f"multiplier for {kind.value} must be non-negative")
            full[kind] = fraction
        if not any(full.values()):
            raise ValueError("at least one kind multiplier must be positive")
        object.__setattr__(self, "multipliers", full)

    def of(self, kind: IdentifierKind) -> Fraction:
        return self.multipliers[kind]


UNIFORM_WEIGHTS = KindWeights()


@dataclass(frozen=True)
class WordWeightTable:
    """Distinct stems of one block mapped to their weights."""

    block_id: str
    entries: Mapping[str, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", dict(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def max_weight(self) -> Fraction:
        return max(self.entries.values())


@dataclass(frozen=True)
class TopK:
    """Select the k heaviest words; optionally widen to cover weight ties.

    With expand_ties, every word tied with the k-th weight is included, so
    equal tables can never produce different names depending on hash order.
    """

    k: int = 1
    expand_ties: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")


@dataclass(frozen=True)
class RelativeThreshold:
    """Select every word whose weight is at least tau times the maximum."""

    tau: Fraction

    def __post_init__(self) -> None:
        tau = Fraction(self.tau)
        if not 0 < tau <= 1:
            raise ValueError("tau must be in (0, 1]")
        object.__setattr__(self, "tau", tau)


NamingStrategy = Union[TopK, RelativeThreshold]

DEFAULT_STRATEGY = TopK(k=1, expand_ties=True)


@dataclass(frozen=True)
class NamingResult:
    """Words proposed as a block's name, heaviest first."""

    block_id: str
    words: tuple[str, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.words:
            raise ValueError("a naming result needs at least one word")
        if len(self.words) != len(self.weights):
            raise ValueError("words and weights must run in parallel")
        if len(set(self.words)) != len(self.words):
            raise ValueError("proposed words must be distinct")
        if any(a < b for a, b in zip(self.weights, self.weights[1:])):
            raise ValueError("weights must be non-increasing")

    def label(self) -> str:
        return " ".join(self.words)


def build_weight_table(
    stems: list[Stem],
    kind_weights: KindWeights = UNIFORM_WEIGHTS,
    block_id: str = "",
) -> WordWeightTable:
    """Accumulate per-stem weights for one block.

    Each stem occurrence adds its kind's multiplier to the stem's weight.
    The result is independent of stem order. Raises EmptyTableError when
    every occurrence had multiplier 0.
    """
    if not stems:
        raise ValueError("stems must be non-empty")
    entries: dict[str, Fraction] = {}
    for stem in stems:
        multiplier = kind_weights.of(stem.source_kind)
        if multiplier:
            entries[stem.text] = entries.get(stem.text, Fraction(0)) + multiplier
    if not entries:
        raise EmptyTableError(f"block {block_id!r}: every token was weighted to zero")
    return WordWeightTable(block_id, entries)


def apply_filters(
    table: WordWeightTable,
    short_word_min: int | None = None,
    min_freq: RationalLike | None = None,
) -> WordWeightTable:
    """Drop short or rare words from a table. Both filters default to off.

    ``short_word_min`` keeps only words of at least that many characters;
    ``min_freq`` keeps only words of at least that weight. Removing every
    word raises EmptyAfterFilterError naming the active filters.
    """
    if short_word_min is None and min_freq is None:
        return table
    if short_word_min is not None and short_word_min < 1:
        raise ValueError("short_word_min must be at least 1")
    min_weight = None if min_freq is None else Fraction(min_freq)
    if min_weight is not None and min_weight < 1:
        raise ValueError("min_freq must be at least 1")
    entries = {
        word: weight
        for word, weight in table.entries.items()
        if (short_word_min is None or len(word) >= short_word_min)
        and (min_weight is None or weight >= min_weight)
    }
    if not entries:
        active = []
        if short_word_min is not None:
            active.append(f"short_word_min={short_word_min}")
        if min_weight is not None:
            active.append(f"min_freq={min_weight}")
        raise EmptyAfterFilterError(
            f"block {table.block_id!r}: filters removed every word ({', '.join(active)})"
        )
    return WordWeightTable(table.block_id, entries)


def rank_entries(table: WordWeightTable) -> list[tuple[str, Fraction]]:
    """Table entries sorted by weight descending, then alphabetically."""
    return sorted(table.entries.items(), key=lambda item: (-item[1], item[0]))


def propose_name(
    table: WordWeightTable, strategy: NamingStrategy = DEFAULT_STRATEGY
) -> NamingResult:
    """Pick name words from a weight table under the given strategy."""
    ranked = rank_entries(table)
    if isinstance(strategy, TopK):
        cut = min(strategy.k, len(ranked))
        if strategy.expand_ties:
            pivot = ranked[cut - 1][1]
            chosen = [entry for entry in ranked if entry[1] >= pivot]
        else:
            chosen = ranked[:cut]
    elif isinstance(strategy, RelativeThreshold):
        cutoff = strategy.tau * ranked[0][1]
        chosen = [entry for entry in ranked if entry[1] >= cutoff]
    else:
        raise TypeError(f"unknown naming strategy {strategy!r}")
    return NamingResult(
        table.block_id,
        tuple(word for word, _ in chosen),
        tuple(weight for _, weight in chosen),
    )
