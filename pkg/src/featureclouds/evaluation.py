"""Scoring proposed names against manual ground truth.

A manual name is normalized into a set of relevant stems with the same
splitter and stemmer the pipeline uses, so "draw_oval" and "DrawOval"
describe the same feature. Precision is the share of proposed words that
are relevant, recall the share of relevant words that were proposed; both
are exact rationals. Corpus evaluation additionally collects per-block
statistics (class count, distinct word count, pipeline wall time, most
frequent words) and renders everything as CSV or an aligned text table.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .blocks import Corpus, IdentifierKind, TruthMap
from .errors import CorpusError, TruthError
from .naming import NamingResult, rank_entries
from .pipeline import DEFAULT_PIPELINE, PipelineConfig, run_blocks
from .stemmer import DEFAULT_CONFIG, StemmerConfig, stem_word
from .tokenizer import split_identifier

CSV_COLUMNS = (
    "block_id",
    "manual_name",
    "proposed_name",
    "recall",
    "precision",
    "noc",
    "now",
    "et_ms",
    "mfw1",
    "mfw2",
)


@dataclass(frozen=True)
class RelevantWordSet:
    """The stems a manual feature name consists of."""

    block_id: str
    words: frozenset[str]


@dataclass(frozen=True)
class EvaluationResult:
    """Metrics for one block with ground truth."""

    block_id: str
    retrieved: tuple[str, ...]
    relevant: frozenset[str]
    correct: frozenset[str]
    precision: Fraction
    recall: Fraction


@dataclass(frozen=True)
class BlockStats:
    """Descriptive statistics for one block.

    ``noc`` counts identifiers tagged as classes, ``now`` counts distinct
    stems before any filter, ``et_ms`` is the pipeline wall time, ``mfw``
    holds the up-to-two heaviest (stem, weight) pairs of the unfiltered
    table, alphabetical among equals.
    """

    block_id: str
    noc: int
    now: int
    et_ms: float
    mfw: tuple[tuple[str, Fraction], ...]


@dataclass(frozen=True)
class BlockReport:
    """Everything reported about one block; metrics only with truth."""

    block_id: str
    proposed: NamingResult
    stats: BlockStats | None = None
    manual_name: str | None = None
    result: EvaluationResult | None = None


@dataclass(frozen=True)
class EvaluationReport:
    """Per-block reports plus corpus-level metric means.

    Means cover only the blocks that have ground truth; they are None when
    no block does. ``unmatched_truth_ids`` lists truth entries that matched
    no block in the corpus, sorted, so typos in truth files surface.
    """

    blocks: tuple[BlockReport, ...]
    mean_precision: Fraction | None
    mean_recall: Fraction | None
    unmatched_truth_ids: tuple[str, ...] = ()


def normalize_name(
    manual: str, stemmer: StemmerConfig = DEFAULT_CONFIG, block_id: str = ""
) -> RelevantWordSet:
    """Turn a manual feature name into its set of relevant stems.

    Uses the identifier splitter and the stemmer, then deduplicates, so
    "draw_oval" yields {draw, oval} and "Logging" yields {log}.
    """
    stems = frozenset(stem_word(token, stemmer) for token in split_identifier(manual))
    if not stems:
        raise TruthError(f"manual name {manual!r} contains no usable words")
    return RelevantWordSet(block_id, stems)


def evaluate_block(proposed: NamingResult, relevant: RelevantWordSet) -> EvaluationResult:
    """Precision and recall of one proposed name against its truth."""
    if not relevant.words:
        raise ValueError("relevant word set must be non-empty")
    correct = frozenset(proposed.words) & relevant.words
    return EvaluationResult(
        proposed.block_id,
        proposed.words,
        relevant.words,
        correct,
        precision=Fraction(len(correct), len(proposed.words)),
        recall=Fraction(len(correct), len(relevant.words)),
    )


def evaluate_corpus(
    corpus: Corpus,
    truth: TruthMap,
    config: PipelineConfig = DEFAULT_PIPELINE,
    jobs: int | None = None,
) -> EvaluationReport:
    """Run the pipeline over a corpus and score blocks that have truth.

    Every block gets a stats row; metric columns stay empty for blocks
    without a manual name. Worker count never changes the report.
    """
    if not corpus.blocks:
        raise CorpusError("corpus contains no blocks")
    known = set(corpus.ids())
    unmatched = tuple(sorted(tid for tid in truth.entries if tid not in known))
    outcomes = run_blocks(corpus.blocks, config, jobs)

    reports: list[BlockReport] = []
    precisions: list[Fraction] = []
    recalls: list[Fraction] = []
    for outcome in outcomes:
        block = outcome.block
        noc = sum(1 for i in block.identifiers if i.kind is IdentifierKind.CLASS)
        stats = BlockStats(
            block_id=block.id,
            noc=noc,
            now=len(outcome.raw_table.entries),
            et_ms=outcome.et_ms,
            mfw=tuple(rank_entries(outcome.raw_table)[:2]),
        )
        manual = truth.get(block.id)
        result = None
        if manual is not None:
            relevant = normalize_name(manual, config.stemmer, block.id)
            result = evaluate_block(outcome.naming, relevant)
            precisions.append(result.precision)
            recalls.append(result.recall)
        reports.append(BlockReport(block.id, outcome.naming, stats, manual, result))

    mean_precision = sum(precisions) / len(precisions) if precisions else None
    mean_recall = sum(recalls) / len(recalls) if recalls else None
    return EvaluationReport(tuple(reports), mean_precision, mean_recall, unmatched)


def format_percent(value: Fraction) -> str:
    """Integer-percent rendering used by the table format: 1/3 -> "33%"."""
    return f"{round(value * 100)}%"


def _mfw_cell(stats: BlockStats | None, index: int) -> str:
    if stats is None or index >= len(stats.mfw):
        return ""
    stem, weight = stats.mfw[index]
    if weight.denominator == 1:
        return f"{stem} ({weight.numerator})"
    return f"{stem} ({weight})"


def _row_cells(report: BlockReport, percent: bool) -> list[str]:
    result = report.result
    if result is None:
        recall = precision = ""
    elif percent:
        recall = format_percent(result.recall)
        precision = format_percent(result.precision)
    else:
        recall = f"{float(result.recall):.4f}"
        precision = f"{float(result.precision):.4f}"
    stats = report.stats
    return [
        report.block_id,
        report.manual_name or "",
        report.proposed.label(),
        recall,
        precision,
        str(stats.noc) if stats else "",
        str(stats.now) if stats else "",
        f"{stats.et_ms:.3f}" if stats else "",
        _mfw_cell(stats, 0),
        _mfw_cell(stats, 1),
    ]


def emit_report(report: EvaluationReport, format: str = "csv") -> str:
    """Render a report as CSV (4-decimal metrics) or an aligned table.

    The table format shows metrics as integer percents. Both formats share
    the same column set and row order.
    """
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for block in report.blocks:
            writer.writerow(_row_cells(block, percent=False))
        return buffer.getvalue()
    if format == "table":
        rows = [list(CSV_COLUMNS)]
        rows.extend(_row_cells(block, percent=True) for block in report.blocks)
        widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
        lines = [
            "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
            for row in rows
        ]
        return "\n".join(lines) + "\n"
    raise ValueError(f"format must be 'csv' or 'table', not {format!r}")


def summary_lines(report: EvaluationReport) -> list[str]:
    """Human-readable corpus summary: means plus unmatched-truth warnings."""
    lines = []
    scored = sum(1 for block in report.blocks if block.result is not None)
    lines.append(f"blocks: {len(report.blocks)} ({scored} with ground truth)")
    if report.mean_recall is not None and report.mean_precision is not None:
        lines.append(
            f"mean recall: {float(report.mean_recall):.4f}  "
            f"mean precision: {float(report.mean_precision):.4f}"
        )
    for tid in report.unmatched_truth_ids:
        lines.append(f"warning: truth entry {tid!r} matches no block")
    return lines
