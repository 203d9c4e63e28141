"""Word-cloud ordering, sizing, layout, and rendering."""
from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from featureclouds import (
    CloudConfig,
    LayoutOverflowError,
    WordWeightTable,
    build_cloud,
    font_size,
    order_words,
    render_svg,
    render_text,
)

OVAL_TABLE = WordWeightTable(
    "oval",
    {
        "oval": Fraction(4), "ovalx": Fraction(3), "ovaly": Fraction(3),
        "set": Fraction(3), "get": Fraction(2), "draw": Fraction(1),
        "my": Fraction(1), "shape": Fraction(1),
    },
)

SVG_NS = "{http://www.w3.org/2000/svg}"


def test_alphabetical_order():
    assert [word for word, _ in order_words(OVAL_TABLE, "alphabetical")] == [
        "draw", "get", "my", "oval", "ovalx", "ovaly", "set", "shape",
    ]


def test_frequency_order():
    assert [word for word, _ in order_words(OVAL_TABLE, "frequency")] == [
        "oval", "ovalx", "ovaly", "set", "get", "draw", "my", "shape",
    ]


def test_single_entry_any_order():
    table = WordWeightTable("b", {"solo": Fraction(2)})
    assert order_words(table, "alphabetical") == order_words(table, "frequency")


def test_font_size_boundaries_and_midpoint():
    config = CloudConfig()
    assert font_size(Fraction(1), Fraction(1), Fraction(4), config) == 10
    assert font_size(Fraction(4), Fraction(1), Fraction(4), config) == 48
    assert font_size(Fraction(3), Fraction(1), Fraction(4), config) == 35
    assert font_size(Fraction(7), Fraction(7), Fraction(7), config) == 29


def test_font_size_is_monotone_on_small_range():
    config = CloudConfig()
    sizes = [font_size(Fraction(w), Fraction(1), Fraction(9), config) for w in range(1, 10)]
    assert sizes == sorted(sizes)


def test_typewriter_single_word_sits_at_origin():
    cloud = build_cloud(WordWeightTable("b", {"word": Fraction(2)}))
    (entry,) = cloud.entries
    assert (entry.x, entry.y) == (0.0, 0.0)
    assert entry.font_px == 29
    assert entry.w == pytest.approx(0.6 * 29 * 4)


def test_typewriter_oval_defaults_fill_one_row():
    cloud = build_cloud(OVAL_TABLE)
    assert len(cloud.entries) == 8
    assert all(entry.y == 0.0 for entry in cloud.entries)
    xs = [entry.x for entry in cloud.entries]
    assert xs == sorted(xs) and len(set(xs)) == 8


def test_typewriter_wraps_rows_on_narrow_canvas():
    config = CloudConfig(canvas_w=200)
    cloud = build_cloud(OVAL_TABLE, config)
    assert render_text(cloud) == "draw get my\noval\novalx\novaly set\nshape\n"
    row_tops = sorted({entry.y for entry in cloud.entries})
    assert len(row_tops) == 5
    assert row_tops == [0.0, 27.0, 79.0, 118.0, 157.0]


def test_typewriter_containment():
    config = CloudConfig(canvas_w=200)
    for entry in build_cloud(OVAL_TABLE, config).entries:
        assert 0 <= entry.x and entry.x + entry.w <= 200
        assert 0 <= entry.y and entry.y + entry.h <= 600


def test_typewriter_rejects_word_wider_than_canvas():
    with pytest.raises(LayoutOverflowError, match="wider"):
        build_cloud(OVAL_TABLE, CloudConfig(canvas_w=100))


def test_typewriter_rejects_vertical_overflow():
    with pytest.raises(LayoutOverflowError, match="below"):
        build_cloud(OVAL_TABLE, CloudConfig(canvas_w=200, canvas_h=100))


def _overlap(a, b):
    return a.x < b.x + b.w and b.x < a.x + a.w and a.y < b.y + b.h and b.y < a.y + a.h


def test_spiral_single_word_is_centered():
    config = CloudConfig(layout="spiral")
    cloud = build_cloud(WordWeightTable("b", {"word": Fraction(2)}), config)
    (entry,) = cloud.entries
    assert entry.x == pytest.approx(400 - entry.w / 2)
    assert entry.y == pytest.approx(300 - entry.h / 2)


def test_spiral_boxes_are_pairwise_disjoint():
    cloud = build_cloud(OVAL_TABLE, CloudConfig(layout="spiral"))
    assert len(cloud.entries) == 8
    entries = cloud.entries
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            assert not _overlap(entries[i], entries[j])


def test_spiral_containment():
    for entry in build_cloud(OVAL_TABLE, CloudConfig(layout="spiral")).entries:
        assert 0 <= entry.x and entry.x + entry.w <= 800
        assert 0 <= entry.y and entry.y + entry.h <= 600


def test_spiral_overflows_tiny_canvas():
    with pytest.raises(LayoutOverflowError, match="no room"):
        build_cloud(OVAL_TABLE, CloudConfig(layout="spiral", canvas_w=60, canvas_h=60))


def test_svg_is_well_formed_with_one_text_node_per_entry():
    cloud = build_cloud(OVAL_TABLE, CloudConfig(layout="spiral"))
    root = ET.fromstring(render_svg(cloud))
    texts = root.findall(f"{SVG_NS}text")
    assert len(texts) == len(cloud.entries)
    assert root.get("width") == "800" and root.get("height") == "600"


def test_svg_anchors_text_at_box_bottom():
    cloud = build_cloud(WordWeightTable("b", {"word": Fraction(1)}))
    root = ET.fromstring(render_svg(cloud))
    node = root.find(f"{SVG_NS}text")
    assert node.get("x") == "0"
    assert node.get("y") == "29"
    assert node.get("font-size") == "29"
    assert node.text == "word"


def test_svg_escapes_markup_in_labels():
    cloud = build_cloud(WordWeightTable("b", {"a<b": Fraction(1)}))
    svg = render_svg(cloud)
    assert "a&lt;b" in svg
    ET.fromstring(svg)


def test_annotation_appends_bracketed_weight():
    config = CloudConfig(order="frequency", annotate_freq=True)
    text = render_text(build_cloud(OVAL_TABLE, config))
    assert text.startswith("oval [4] ovalx [3]")


def test_no_annotation_means_no_brackets():
    text = render_text(build_cloud(OVAL_TABLE))
    assert "[" not in text


def test_fractional_weights_annotate_as_fractions():
    table = WordWeightTable("b", {"word": Fraction(7, 2)})
    config = CloudConfig(annotate_freq=True)
    assert render_text(build_cloud(table, config)) == "word [7/2]\n"


def test_spiral_text_render_lists_in_placement_order():
    config = CloudConfig(layout="spiral", order="frequency")
    text = render_text(build_cloud(OVAL_TABLE, config))
    assert text == "oval ovalx ovaly set get draw my shape\n"


def test_build_and_render_are_deterministic():
    config = CloudConfig(layout="spiral", annotate_freq=True)
    first = build_cloud(OVAL_TABLE, config)
    second = build_cloud(OVAL_TABLE, config)
    assert first == second
    assert render_svg(first) == render_svg(second)
    assert render_text(first) == render_text(second)


def test_cloud_config_validation():
    with pytest.raises(ValueError):
        CloudConfig(layout="diagonal")
    with pytest.raises(ValueError):
        CloudConfig(order="random")
    with pytest.raises(ValueError):
        CloudConfig(font_min=20, font_max=10)
    with pytest.raises(ValueError):
        CloudConfig(canvas_w=0)
    with pytest.raises(ValueError):
        CloudConfig(spiral_step=0)
