"""Word-cloud construction and rendering.

Geometry uses a fixed monospace model (glyph width 0.6 of the font size)
so layouts are reproducible without consulting real font metrics. Two
layouts are available: typewriter rows filled left to right, top to
bottom, and a Wordle-style greedy walk along an Archimedean spiral with
axis-aligned collision boxes. Output is either SVG 1.1 markup or plain
text; frequency annotations render as a bracketed number after the word.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable
from xml.sax.saxutils import escape

from .errors import LayoutOverflowError
from .naming import WordWeightTable, rank_entries

TYPEWRITER = "typewriter"
SPIRAL = "spiral"
LAYOUTS = (TYPEWRITER, SPIRAL)

ALPHABETICAL = "alphabetical"
FREQUENCY = "frequency"
ORDERS = (ALPHABETICAL, FREQUENCY)

# Width of one monospace glyph as a fraction of the font size.
GLYPH_ASPECT = 0.6


@dataclass(frozen=True)
class CloudConfig:
    """Rendering and layout settings for one cloud."""

    layout: str = TYPEWRITER
    order: str = ALPHABETICAL
    annotate_freq: bool = False
    font_min: int = 10
    font_max: int = 48
    canvas_w: int = 800
    canvas_h: int = 600
    padding: int = 4
    spiral_step: float = 2.0
    spiral_dtheta: float = 0.35

    def __post_init__(self) -> None:
        if self.layout not in LAYOUTS:
            raise ValueError(f"layout must be one of {LAYOUTS}")
        if self.order not in ORDERS:
            raise ValueError(f"order must be one of {ORDERS}")
        if not 0 < self.font_min <= self.font_max:
            raise ValueError("need 0 < font_min <= font_max")
        if self.canvas_w < 1 or self.canvas_h < 1:
            raise ValueError("canvas dimensions must be positive")
        if self.padding < 0:
            raise ValueError("padding must be non-negative")
        if self.spiral_step <= 0 or self.spiral_dtheta <= 0:
            raise ValueError("spiral parameters must be positive")


@dataclass(frozen=True)
class CloudEntry:
    """One placed word: geometry is the top-left corner plus box size."""

    stem: str
    weight: Fraction
    font_px: int
    x: float = 0.0
    y: float = 0.0
    w: float = 0.0
    h: float = 0.0


@dataclass(frozen=True)
class WordCloud:
    block_id: str
    entries: tuple[CloudEntry, ...]
    config: CloudConfig


def order_words(table: WordWeightTable, order: str) -> list[tuple[str, Fraction]]:
    """Distinct words of a table in alphabetical or frequency order.

    Frequency order is weight-descending with alphabetical tie-break, the
    same total order used for naming.
    """
    if order == ALPHABETICAL:
        return sorted(table.entries.items())
    if order == FREQUENCY:
        return rank_entries(table)
    raise ValueError(f"order must be one of {ORDERS}")


def font_size(
    weight: Fraction, w_min: Fraction, w_max: Fraction, config: CloudConfig
) -> int:
    """Map a weight onto the configured font range, linearly.

    When all weights are equal the midpoint of the range is used. Rounding
    happens on exact rationals, so equal inputs give equal sizes on every
    platform.
    """
    if w_max == w_min:
        return round(Fraction(config.font_min + config.font_max, 2))
    span = Fraction(config.font_max - config.font_min)
    scaled = Fraction(weight - w_min) * span / Fraction(w_max - w_min)
    return config.font_min + round(scaled)


def _sized_entries(
    pairs: Iterable[tuple[str, Fraction]], config: CloudConfig
) -> list[CloudEntry]:
    pairs = list(pairs)
    weights = [weight for _, weight in pairs]
    w_min, w_max = min(weights), max(weights)
    entries = []
    for stem, weight in pairs:
        px = font_size(weight, w_min, w_max, config)
        entries.append(
            CloudEntry(stem, weight, px, w=GLYPH_ASPECT * px * len(stem), h=float(px))
        )
    return entries


def layout_typewriter(entries: list[CloudEntry], config: CloudConfig) -> list[CloudEntry]:
    """Place entries in rows, left to right, wrapping at the canvas edge.

    Row height is the tallest font in the row plus padding. A word wider
    than the canvas, or a row landing below the canvas bottom, raises
    LayoutOverflowError suggesting a larger canvas.
    """
    placed: list[CloudEntry] = []
    x = 0.0
    row_top = 0.0
    row_fonts: list[int] = []
    for entry in entries:
        if entry.w > config.canvas_w:
            raise LayoutOverflowError(
                f"{entry.stem!r} at {entry.font_px}px is wider than the "
                f"{config.canvas_w}px canvas; enlarge the canvas or shrink fonts"
            )
        if x > 0.0 and x + entry.w > config.canvas_w:
            row_top += max(row_fonts) + config.padding
            x = 0.0
            row_fonts = []
        if row_top + entry.h > config.canvas_h:
            raise LayoutOverflowError(
                f"{entry.stem!r} falls below the {config.canvas_h}px canvas; "
                f"enlarge the canvas or shrink fonts"
            )
        placed.append(replace(entry, x=x, y=row_top))
        row_fonts.append(entry.font_px)
        x += entry.w + config.padding
    return placed


def _boxes_overlap(a: CloudEntry, b: CloudEntry) -> bool:
    return (
        a.x < b.x + b.w
        and b.x < a.x + a.w
        and a.y < b.y + b.h
        and b.y < a.y + a.h
    )


def _inside_canvas(entry: CloudEntry, config: CloudConfig) -> bool:
    return (
        entry.x >= 0.0
        and entry.y >= 0.0
        and entry.x + entry.w <= config.canvas_w
        and entry.y + entry.h <= config.canvas_h
    )


def layout_spiral(entries: list[CloudEntry], config: CloudConfig) -> list[CloudEntry]:
    """Place entries center-out along an Archimedean spiral.

    Each word walks the spiral from the center in fixed angle steps and
    takes the first position where its box lies inside the canvas and
    touches no earlier box. The first word therefore sits centered. The
    walk gives up once the radius clears the canvas half-diagonal.
    """
    cx = config.canvas_w / 2.0
    cy = config.canvas_h / 2.0
    max_radius = math.hypot(config.canvas_w, config.canvas_h) / 2.0
    placed: list[CloudEntry] = []
    for entry in entries:
        theta = 0.0
        while True:
            radius = config.spiral_step * theta
            if radius > max_radius:
                raise LayoutOverflowError(
                    f"no room for {entry.stem!r} within the "
                    f"{config.canvas_w}x{config.canvas_h} canvas"
                )
            candidate = replace(
                entry,
                x=cx + radius * math.cos(theta) - entry.w / 2.0,
                y=cy + radius * math.sin(theta) - entry.h / 2.0,
            )
            if _inside_canvas(candidate, config) and not any(
                _boxes_overlap(candidate, other) for other in placed
            ):
                placed.append(candidate)
                break
            theta += config.spiral_dtheta
    return placed


def build_cloud(table: WordWeightTable, config: CloudConfig = CloudConfig()) -> WordCloud:
    """Order, size, and place the words of a weight table."""
    sized = _sized_entries(order_words(table, config.order), config)
    layout = layout_typewriter if config.layout == TYPEWRITER else layout_spiral
    return WordCloud(table.block_id, tuple(layout(sized, config)), config)


def _weight_text(weight: Fraction) -> str:
    if weight.denominator == 1:
        return str(weight.numerator)
    return str(weight)


def _label(entry: CloudEntry, annotate_freq: bool) -> str:
    if annotate_freq:
        return f"{entry.stem} [{_weight_text(entry.weight)}]"
    return entry.stem


def _coord(value: float) -> str:
    # Compact deterministic formatting: 400.0 -> "400", 23.4 -> "23.4".
    return f"{value:g}"


def render_svg(cloud: WordCloud) -> str:
    """Serialize a cloud as standalone SVG 1.1 markup.

    One <text> element per entry, anchored at the box's bottom-left so the
    glyphs sit inside the box. Labels are XML-escaped.
    """
    config = cloud.config
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{config.canvas_w}" height="{config.canvas_h}">',
    ]
    for entry in cloud.entries:
        label = escape(_label(entry, config.annotate_freq))
        lines.append(
            f'  <text x="{_coord(entry.x)}" y="{_coord(entry.y + entry.h)}" '
            f'font-family="monospace" font-size="{entry.font_px}">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_text(cloud: WordCloud) -> str:
    """Serialize a cloud as plain text.

    Typewriter clouds keep their row structure, one line per row. Spiral
    clouds have no row structure, so their words are listed on one line in
    placement order.
    """
    config = cloud.config
    if config.layout == TYPEWRITER:
        rows: list[list[str]] = []
        current_y: float | None = None
        for entry in cloud.entries:
            if current_y is None or entry.y != current_y:
                rows.append([])
                current_y = entry.y
            rows[-1].append(_label(entry, config.annotate_freq))
        return "\n".join(" ".join(row) for row in rows) + "\n"
    return " ".join(_label(entry, config.annotate_freq) for entry in cloud.entries) + "\n"
