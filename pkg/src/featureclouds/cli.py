"""Command-line interface.

Four subcommands cover the whole pipeline: ``tokens`` shows the staged
splitting of one block, ``name`` proposes names, ``cloud`` renders a word
cloud file, ``eval`` scores a corpus against ground truth and can render a
metrics chart next to the report.

Settings resolve in three layers: command-line flags win over the config
file (``--config`` or the FEATURECLOUDS_CONFIG environment variable),
which wins over built-in defaults. The config file holds ``key = value``
lines whose keys mirror the long flag names.

Exit codes: 0 success, 1 usage error, 2 missing or malformed input data,
3 pipeline failure such as a layout that cannot fit its canvas.
"""
from __future__ import annotations

import enum
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Mapping, Sequence

import click

from .blocks import (
    FeatureBlock,
    IdentifierKind,
    TruthMap,
    load_block_file,
    load_corpus,
    load_truth_file,
)
from .cloud import (
    ALPHABETICAL,
    FREQUENCY,
    LAYOUTS,
    TYPEWRITER,
    CloudConfig,
    build_cloud,
    render_svg,
    render_text,
)
from .errors import ConfigError, DataError, PipelineError
from .evaluation import emit_report, evaluate_corpus, summary_lines
from .figures import render_metrics_figure
from .naming import KindWeights, RelativeThreshold, TopK, UNIFORM_WEIGHTS
from .pipeline import PipelineConfig, block_tables, run_blocks
from .stemmer import (
    StemmerConfig,
    load_exceptions_file,
    load_lexicon_file,
    stem_word,
)
from .tokenizer import split_identifier

PROG = "featureclouds"
CONFIG_ENV_VAR = "FEATURECLOUDS_CONFIG"


class ExitStatus(enum.IntEnum):
    OK = 0
    USAGE = 1
    DATA = 2
    PIPELINE = 3


@dataclass(frozen=True)
class RunConfig:
    """Flag, config-file, and default settings merged for one invocation."""

    pipeline: PipelineConfig
    cloud: CloudConfig
    jobs: int | None
    report_format: str | None


_KNOWN_KEYS = frozenset(
    {
        "exceptions",
        "lexicon",
        "no_stem",
        "kind_weight",
        "top_k",
        "expand_ties",
        "threshold",
        "short_word_min",
        "min_freq",
        "layout",
        "order",
        "annotate_freq",
        "canvas",
        "jobs",
        "format",
    }
)

_TRUE_WORDS = frozenset({"1", "true", "yes", "on"})
_FALSE_WORDS = frozenset({"0", "false", "no", "off"})


def _parse_config_file(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    settings: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        key = key.strip().lower().replace("-", "_")
        if not sep or not key:
            raise ConfigError(f"{path}: line {lineno}: expected 'key = value'")
        settings[key] = value.strip()
    return settings


def _load_settings(config_path: str | None) -> dict[str, str]:
    path = config_path or os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    settings = _parse_config_file(path)
    unknown = set(settings) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"{path}: unknown settings: {', '.join(sorted(unknown))}")
    return settings


def _config_bool(settings: Mapping[str, str], key: str, default: bool) -> bool:
    raw = settings.get(key)
    if raw is None:
        return default
    lowered = raw.lower()
    if lowered in _TRUE_WORDS:
        return True
    if lowered in _FALSE_WORDS:
        return False
    raise ConfigError(f"config {key}: expected a boolean, got {raw!r}")


def _config_int(settings: Mapping[str, str], key: str, minimum: int = 1) -> int:
    raw = settings[key]
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"config {key}: expected an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"config {key}: must be at least {minimum}")
    return value


def _parse_kind_weights(
    values: Sequence[str], error: Callable[[str], Exception]
) -> KindWeights:
    multipliers: dict[IdentifierKind, Fraction] = {}
    for value in values:
        for item in value.split(","):
            item = item.strip()
            if not item:
                continue
            kind_name, sep, raw = item.partition("=")
            if not sep:
                raise error(f"kind weight {item!r} must look like class=2")
            try:
                kind = IdentifierKind(kind_name.strip().lower())
            except ValueError:
                raise error(f"unknown identifier kind {kind_name.strip()!r}") from None
            try:
                value = Fraction(raw.strip())
            except (ValueError, ZeroDivisionError):
                raise error(f"bad weight {raw.strip()!r} for kind {kind.value}") from None
            multipliers[kind] = value
    try:
        return KindWeights(multipliers)
    except ValueError as exc:
        raise error(str(exc)) from None


def _parse_threshold(text: str, error: Callable[[str], Exception]) -> RelativeThreshold:
    try:
        tau = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise error(f"threshold must be a number, got {text!r}") from None
    try:
        return RelativeThreshold(tau)
    except ValueError as exc:
        raise error(str(exc)) from None


def _parse_canvas(text: str, error: Callable[[str], Exception]) -> tuple[int, int]:
    width_text, sep, height_text = text.lower().partition("x")
    if sep:
        try:
            width, height = int(width_text), int(height_text)
        except ValueError:
            width = height = 0
        if width >= 1 and height >= 1:
            return width, height
    raise error(f"canvas must look like 800x600, got {text!r}")


def _run_config(params: Mapping[str, Any]) -> RunConfig:
    settings = _load_settings(params.get("config_path"))

    exceptions_path = params.get("exceptions_path") or settings.get("exceptions")
    lexicon_path = params.get("lexicon_path") or settings.get("lexicon")
    no_stem = params.get("no_stem")
    if no_stem is None:
        no_stem = _config_bool(settings, "no_stem", False)
    stemmer = StemmerConfig(
        exceptions=load_exceptions_file(exceptions_path) if exceptions_path else {},
        lexicon=load_lexicon_file(lexicon_path) if lexicon_path else None,
        enabled=not no_stem,
    )

    flag_values = tuple(params.get("kind_weight") or ())
    if flag_values:
        kind_weights = _parse_kind_weights(flag_values, click.UsageError)
    elif "kind_weight" in settings:
        kind_weights = _parse_kind_weights((settings["kind_weight"],), ConfigError)
    else:
        kind_weights = UNIFORM_WEIGHTS

    expand_ties = params.get("expand_ties")
    if expand_ties is None:
        expand_ties = _config_bool(settings, "expand_ties", True)

    top_k_flag = params.get("top_k")
    threshold_flag = params.get("threshold")
    if top_k_flag is not None and threshold_flag is not None:
        raise click.UsageError("--top-k and --threshold are mutually exclusive")
    if threshold_flag is not None:
        strategy: TopK | RelativeThreshold = _parse_threshold(
            threshold_flag, click.UsageError
        )
    elif top_k_flag is not None:
        strategy = TopK(top_k_flag, expand_ties)
    elif "threshold" in settings and "top_k" in settings:
        raise ConfigError("config: top-k and threshold are mutually exclusive")
    elif "threshold" in settings:
        strategy = _parse_threshold(settings["threshold"], ConfigError)
    elif "top_k" in settings:
        strategy = TopK(_config_int(settings, "top_k"), expand_ties)
    else:
        strategy = TopK(1, expand_ties)

    short_word_min = params.get("short_word_min")
    if short_word_min is None and "short_word_min" in settings:
        short_word_min = _config_int(settings, "short_word_min")
    min_freq = params.get("min_freq")
    if min_freq is None and "min_freq" in settings:
        min_freq = _config_int(settings, "min_freq")

    pipeline = PipelineConfig(stemmer, kind_weights, strategy, short_word_min, min_freq)

    layout = params.get("layout") or settings.get("layout") or TYPEWRITER
    if layout not in LAYOUTS:
        raise ConfigError(f"config layout: expected one of {', '.join(LAYOUTS)}")
    order_key = params.get("order") or settings.get("order") or "alpha"
    order_map = {"alpha": ALPHABETICAL, "freq": FREQUENCY}
    if order_key not in order_map:
        raise ConfigError("config order: expected alpha or freq")
    annotate_freq = params.get("annotate_freq")
    if annotate_freq is None:
        annotate_freq = _config_bool(settings, "annotate_freq", False)
    canvas_flag = params.get("canvas")
    if canvas_flag is not None:
        canvas = _parse_canvas(canvas_flag, click.UsageError)
    elif "canvas" in settings:
        canvas = _parse_canvas(settings["canvas"], ConfigError)
    else:
        canvas = (800, 600)
    cloud = CloudConfig(
        layout=layout,
        order=order_map[order_key],
        annotate_freq=annotate_freq,
        canvas_w=canvas[0],
        canvas_h=canvas[1],
    )

    jobs = params.get("jobs")
    if jobs is None and "jobs" in settings:
        jobs = _config_int(settings, "jobs")

    report_format = params.get("format") or settings.get("format")
    if report_format is not None and report_format not in ("csv", "table"):
        raise ConfigError("config format: expected csv or table")

    return RunConfig(pipeline, cloud, jobs, report_format)


def _load_blocks(source: str) -> list[FeatureBlock]:
    path = Path(source)
    if path.is_dir():
        return list(load_corpus(path).blocks)
    return [load_block_file(path)]


def _apply_options(f: Callable, options: Sequence[Callable]) -> Callable:
    for option in reversed(options):
        f = option(f)
    return f


def _config_option(f: Callable) -> Callable:
    return click.option(
        "--config",
        "config_path",
        type=click.Path(),
        default=None,
        help=f"Config file of 'key = value' lines; ${CONFIG_ENV_VAR} names a default.",
    )(f)


def _stem_options(f: Callable) -> Callable:
    return _apply_options(
        f,
        [
            click.option(
                "--exceptions",
                "exceptions_path",
                type=click.Path(),
                default=None,
                help="File of 'word root' pairs applied before the stemming rules.",
            ),
            click.option(
                "--lexicon",
                "lexicon_path",
                type=click.Path(),
                default=None,
                help="File of known roots that arbitrates detached forms.",
            ),
            click.option(
                "--no-stem",
                "no_stem",
                is_flag=True,
                default=None,
                help="Keep raw tokens, skip stemming.",
            ),
        ],
    )


def _weight_options(f: Callable) -> Callable:
    return _apply_options(
        f,
        [
            click.option(
                "--kind-weight",
                "kind_weight",
                multiple=True,
                metavar="KIND=W[,KIND=W...]",
                help="Weight multiplier per identifier kind "
                "(package, class, method, attribute, unknown).",
            ),
            click.option(
                "--short-word-min",
                type=click.IntRange(min=1),
                default=None,
                help="Drop words shorter than this many characters.",
            ),
            click.option(
                "--min-freq",
                type=click.IntRange(min=1),
                default=None,
                help="Drop words whose weight is below this value.",
            ),
        ],
    )


def _strategy_options(f: Callable) -> Callable:
    return _apply_options(
        f,
        [
            click.option(
                "--top-k",
                type=click.IntRange(min=1),
                default=None,
                help="Propose the k heaviest words (default 1).",
            ),
            click.option(
                "--expand-ties/--no-expand-ties",
                "expand_ties",
                default=None,
                help="Also include words tied with the k-th weight (default on).",
            ),
            click.option(
                "--threshold",
                type=str,
                default=None,
                metavar="TAU",
                help="Propose every word with weight >= TAU x max; excludes --top-k.",
            ),
        ],
    )


def _jobs_option(f: Callable) -> Callable:
    return click.option(
        "--jobs",
        type=click.IntRange(min=1),
        default=None,
        help="Worker threads for multi-block runs (default: CPU count).",
    )(f)


@click.group()
def cli() -> None:
    """Propose, visualize, and score names for feature implementation blocks."""


@cli.command()
@click.argument("block_file", type=click.Path())
@_config_option
@_stem_options
def tokens(**params: Any) -> None:
    """Show identifier, token, and stem columns for one block file."""
    config = _run_config(params)
    block = load_block_file(params["block_file"])
    rows = [("identifier", "token", "stem")]
    for identifier in block.identifiers:
        label = identifier.raw
        for token in split_identifier(identifier.raw):
            rows.append((label, token, stem_word(token, config.pipeline.stemmer)))
            label = ""
        if label:
            rows.append((label, "", ""))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    for row in rows:
        line = "  ".join(cell.ljust(width) for cell, width in zip(row, widths))
        click.echo(line.rstrip())


@cli.command(name="name")
@click.argument("source", type=click.Path())
@_config_option
@_stem_options
@_weight_options
@_strategy_options
@_jobs_option
def name_command(**params: Any) -> None:
    """Propose a name per block for a block file or corpus directory."""
    config = _run_config(params)
    blocks = _load_blocks(params["source"])
    for outcome in run_blocks(blocks, config.pipeline, config.jobs):
        click.echo(f"{outcome.block.id}: {outcome.naming.label()}")


@cli.command(name="cloud")
@click.argument("block_file", type=click.Path())
@_config_option
@_stem_options
@_weight_options
@click.option(
    "--layout",
    type=click.Choice(LAYOUTS),
    default=None,
    help="Row-based or spiral placement (default typewriter).",
)
@click.option(
    "--order",
    type=click.Choice(("alpha", "freq")),
    default=None,
    help="Word order: alphabetical or by descending weight (default alpha).",
)
@click.option(
    "--annotate-freq",
    "annotate_freq",
    is_flag=True,
    default=None,
    help="Append the weight in square brackets after each word.",
)
@click.option(
    "--canvas",
    type=str,
    default=None,
    metavar="WxH",
    help="Canvas size in pixels (default 800x600).",
)
@click.option(
    "--out",
    "out_path",
    type=click.Path(),
    required=True,
    help="Output file; the extension picks the format (.svg or .txt).",
)
def cloud_command(**params: Any) -> None:
    """Render the word cloud of one block to an SVG or text file."""
    config = _run_config(params)
    block = load_block_file(params["block_file"])
    _, table = block_tables(block, config.pipeline)
    built = build_cloud(table, config.cloud)
    out_path = Path(params["out_path"])
    suffix = out_path.suffix.lower()
    if suffix == ".svg":
        content = render_svg(built)
    elif suffix in (".txt", ".text"):
        content = render_text(built)
    else:
        raise click.UsageError("--out must end in .svg or .txt to pick a format")
    out_path.write_text(content, encoding="utf-8")


@cli.command(name="eval")
@click.argument("corpus_dir", type=click.Path())
@_config_option
@_stem_options
@_weight_options
@_strategy_options
@_jobs_option
@click.option(
    "--truth",
    "truth_path",
    type=click.Path(),
    default=None,
    help="Ground-truth CSV (block_id,manual_name); omit for stats only.",
)
@click.option(
    "--report",
    "report_path",
    type=click.Path(),
    default=None,
    help="Write the report here instead of stdout.",
)
@click.option(
    "--format",
    "format",
    type=click.Choice(("csv", "table")),
    default=None,
    help="Report format; defaults by --report extension, else csv.",
)
@click.option(
    "--figure",
    "figure_path",
    type=click.Path(),
    default=None,
    help="Also render a recall/precision chart to this image file.",
)
def eval_command(**params: Any) -> None:
    """Score a corpus against ground truth and emit a per-block report."""
    config = _run_config(params)
    corpus = load_corpus(params["corpus_dir"])
    truth = load_truth_file(params["truth_path"]) if params["truth_path"] else TruthMap()
    report = evaluate_corpus(corpus, truth, config.pipeline, config.jobs)

    report_path = params["report_path"]
    fmt = config.report_format
    if fmt is None and report_path:
        fmt = {".csv": "csv", ".txt": "table"}.get(Path(report_path).suffix.lower())
    text = emit_report(report, fmt or "csv")
    if report_path:
        Path(report_path).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)
    if params["figure_path"]:
        render_metrics_figure(report, params["figure_path"])
    for line in summary_lines(report):
        click.echo(line, err=True)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI on argv and return its exit code instead of exiting.

    This wrapper owns the exit-code contract: usage problems return 1,
    bad input data 2, pipeline failures 3.
    """
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        result = cli.main(args=args, prog_name=PROG, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        return int(ExitStatus.USAGE)
    except click.Abort:
        click.echo(f"{PROG}: aborted", err=True)
        return int(ExitStatus.USAGE)
    except DataError as exc:
        click.echo(f"{PROG}: error: {exc}", err=True)
        return int(ExitStatus.DATA)
    except PipelineError as exc:
        click.echo(f"{PROG}: error: {exc}", err=True)
        return int(ExitStatus.PIPELINE)
    except OSError as exc:
        click.echo(f"{PROG}: error: {exc}", err=True)
        return int(ExitStatus.DATA)
    if isinstance(result, int):
        return result
    return int(ExitStatus.OK)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
