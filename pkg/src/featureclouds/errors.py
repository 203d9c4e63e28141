"""Exception hierarchy for the featureclouds package.

Two broad families matter to callers. DataError covers everything wrong
with the inputs themselves: unreadable files, malformed lines, bad config
values. PipelineError covers valid inputs that a processing stage cannot
turn into a result, such as a block whose every token was filtered away or
a word cloud that does not fit its canvas. The CLI maps DataError to exit
code 2 and PipelineError to exit code 3.
"""


class FeatureCloudsError(Exception):
    """Base class for every error raised by this package."""


class DataError(FeatureCloudsError):
    """Input data is missing, unreadable, or malformed."""


class BlockParseError(DataError):
    """A block file line does not follow the expected format."""


class EmptyBlockError(BlockParseError):
    """A block file contains no identifiers at all."""


class CorpusError(DataError):
    """A corpus directory is missing, unreadable, or inconsistent."""


class TruthError(DataError):
    """A ground-truth file is malformed or contradicts itself."""


class WordListError(DataError):
    """A stemmer exceptions or lexicon file has a malformed line."""


class ConfigError(DataError):
    """A configuration file or setting cannot be parsed."""


class PipelineError(FeatureCloudsError):
    """A processing stage produced nothing usable from valid input."""


class EmptyTokensError(PipelineError):
    """Tokenization yielded no tokens for a block."""


class EmptyTableError(PipelineError):
    """Every token of a block was weighted to zero."""


class EmptyAfterFilterError(PipelineError):
    """The configured filters removed every word of a block."""


class LayoutOverflowError(PipelineError):
    """A word cloud cannot be placed inside the configured canvas."""
