"""Per-block pipeline orchestration.

One configuration object carries every knob of the tokenize, stem, weigh,
filter, name chain, so the CLI subcommands and the evaluator all run the
exact same path. run_block times that chain per block; the wall time is
reported downstream but never asserted on.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .blocks import FeatureBlock
from .naming import (
    DEFAULT_STRATEGY,
    KindWeights,
    NamingResult,
    NamingStrategy,
    UNIFORM_WEIGHTS,
    WordWeightTable,
    apply_filters,
    build_weight_table,
    propose_name,
)
from .stemmer import DEFAULT_CONFIG, StemmerConfig, stem_all
from .tokenizer import tokenize_block


@dataclass(frozen=True)
class PipelineConfig:
    """Everything needed to turn a block into a name."""

    stemmer: StemmerConfig = DEFAULT_CONFIG
    kind_weights: KindWeights = UNIFORM_WEIGHTS
    strategy: NamingStrategy = DEFAULT_STRATEGY
    short_word_min: int | None = None
    min_freq: int | None = None


DEFAULT_PIPELINE = PipelineConfig()


@dataclass(frozen=True)
class BlockOutcome:
    """Everything the pipeline produced for one block.

    ``raw_table`` is the weight table before filters; statistics such as
    distinct-word counts and most frequent words are read from it so that
    filters never distort them. ``table`` is what naming and clouds use.
    """

    block: FeatureBlock
    raw_table: WordWeightTable
    table: WordWeightTable
    naming: NamingResult
    et_ms: float


def block_tables(
    block: FeatureBlock, config: PipelineConfig = DEFAULT_PIPELINE
) -> tuple[WordWeightTable, WordWeightTable]:
    """Tokenize, stem, weigh, and filter one block.

    Returns the (unfiltered, filtered) weight tables; they are the same
    object when no filter is configured.
    """
    tokens = tokenize_block(block)
    stems = stem_all(tokens, config.stemmer)
    raw_table = build_weight_table(stems, config.kind_weights, block.id)
    table = apply_filters(raw_table, config.short_word_min, config.min_freq)
    return raw_table, table


def run_block(block: FeatureBlock, config: PipelineConfig = DEFAULT_PIPELINE) -> BlockOutcome:
    """Run the full naming pipeline on one block, timing it."""
    start = time.perf_counter()
    raw_table, table = block_tables(block, config)
    naming = propose_name(table, config.strategy)
    et_ms = (time.perf_counter() - start) * 1000.0
    return BlockOutcome(block, raw_table, table, naming, et_ms)


def run_blocks(
    blocks: Sequence[FeatureBlock],
    config: PipelineConfig = DEFAULT_PIPELINE,
    jobs: int | None = None,
) -> list[BlockOutcome]:
    """Run the pipeline over many blocks, optionally in parallel.

    ``jobs`` defaults to the machine's CPU count. Results always come back
    in input order regardless of worker count, so output is deterministic.
    """
    workers = jobs if jobs is not None else (os.cpu_count() or 1)
    if workers < 1:
        raise ValueError("jobs must be at least 1")
    if workers == 1 or len(blocks) <= 1:
        return [run_block(block, config) for block in blocks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda block: run_block(block, config), blocks))
