"""Name feature implementation blocks from their identifiers.

The pipeline splits identifier names into word tokens, reduces them to
root forms, weights the words by frequency, proposes the heaviest words as
the block's name, and can render the whole vocabulary as a word cloud or
score proposed names against manually assigned ones.
"""
from .blocks import (
    Corpus,
    FeatureBlock,
    Identifier,
    IdentifierKind,
    TruthMap,
    format_block,
    load_block_file,
    load_corpus,
    load_truth,
    load_truth_file,
    parse_block_file,
)
from .cloud import (
    CloudConfig,
    CloudEntry,
    WordCloud,
    build_cloud,
    font_size,
    layout_spiral,
    layout_typewriter,
    order_words,
    render_svg,
    render_text,
)
from .errors import (
    BlockParseError,
    ConfigError,
    CorpusError,
    DataError,
    EmptyAfterFilterError,
    EmptyBlockError,
    EmptyTableError,
    EmptyTokensError,
    FeatureCloudsError,
    LayoutOverflowError,
    PipelineError,
    TruthError,
    WordListError,
)
from .evaluation import (
    BlockReport,
    BlockStats,
    EvaluationReport,
    EvaluationResult,
    RelevantWordSet,
    emit_report,
    evaluate_block,
    evaluate_corpus,
    format_percent,
    normalize_name,
)
from .figures import render_metrics_figure
from .naming import (
    KindWeights,
    NamingResult,
    RelativeThreshold,
    TopK,
    WordWeightTable,
    apply_filters,
    build_weight_table,
    propose_name,
    rank_entries,
)
from .pipeline import BlockOutcome, PipelineConfig, block_tables, run_block, run_blocks
from .stemmer import (
    Stem,
    StemmerConfig,
    load_exceptions,
    load_exceptions_file,
    load_lexicon,
    load_lexicon_file,
    stem_all,
    stem_word,
)
from .tokenizer import Token, split_identifier, tokenize_block

__version__ = "0.1.0"

__all__ = [
    "BlockOutcome",
    "BlockParseError",
    "BlockReport",
    "BlockStats",
    "CloudConfig",
    "CloudEntry",
    "ConfigError",
    "Corpus",
    "CorpusError",
    "DataError",
    "EmptyAfterFilterError",
    "EmptyBlockError",
    "EmptyTableError",
    "EmptyTokensError",
    "EvaluationReport",
    "EvaluationResult",
    "FeatureBlock",
    "FeatureCloudsError",
    "Identifier",
    "IdentifierKind",
    "KindWeights",
    "LayoutOverflowError",
    "NamingResult",
    "PipelineConfig",
    "PipelineError",
    "RelativeThreshold",
    "RelevantWordSet",
    "Stem",
    "StemmerConfig",
    "Token",
    "TopK",
    "TruthError",
    "TruthMap",
    "WordCloud",
    "WordListError",
    "WordWeightTable",
    "apply_filters",
    "build_cloud",
    "build_weight_table",
    "block_tables",
    "emit_report",
    "evaluate_block",
    "evaluate_corpus",
    "font_size",
    "format_block",
    "format_percent",
    "layout_spiral",
    "layout_typewriter",
    "load_block_file",
    "load_corpus",
    "load_exceptions",
    "load_exceptions_file",
    "load_lexicon",
    "load_lexicon_file",
    "load_truth",
    "load_truth_file",
    "normalize_name",
    "order_words",
    "parse_block_file",
    "propose_name",
    "rank_entries",
    "render_metrics_figure",
    "render_svg",
    "render_text",
    "run_block",
    "run_blocks",
    "split_identifier",
    "stem_all",
    "stem_word",
    "tokenize_block",
]
