import math
import re

import pytest

from simplexcover.cover import build_cover
from simplexcover.render import render_svg

POINTS_RE = re.compile(r'<polygon points="([^"]+)"')


def polygon_points(svg):
    polys = []
    for match in POINTS_RE.finditer(svg):
        pts = []
        for pair in match.group(1).split():
            sx, sy = pair.split(",")
            pts.append((float(sx), float(sy)))
        polys.append(pts)
    return polys


def test_polygon_counts():
    svg = render_svg(build_cover(2, 2))
    assert svg.count("<polygon") == 6 + 1
    svg = render_svg(build_cover(2, 1))
    assert svg.count("<polygon") == 3 + 1


def test_provenance_comment_and_determinism():
    cover = build_cover(2, 2)
    svg = render_svg(cover)
    assert "<!-- cover figure: d=2 n=2 delta=1/4 equilateral=false -->" in svg
    assert render_svg(cover) == svg
    eq = render_svg(cover, equilateral=True)
    assert "equilateral=true -->" in eq
    assert eq != svg


def test_labels_toggle():
    cover = build_cover(2, 1)
    assert "<text" not in render_svg(cover)
    labelled = render_svg(cover, labels=True)
    assert labelled.count("<text") == 3
    assert ">a0<" in labelled
    assert ">b2<" in labelled


def test_rejects_higher_dimensions():
    with pytest.raises(ValueError):
        render_svg(build_cover(3, 1))


def side_lengths(poly):
    out = []
    for i in range(len(poly)):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % len(poly)]
        out.append(math.hypot(x2 - x1, y2 - y1))
    return out


def test_equilateral_polygons_have_equal_sides():
    svg = render_svg(build_cover(2, 2), equilateral=True)
    polys = polygon_points(svg)
    for poly in polys[:-1]:  # last polygon is the dashed target outline
        a, b, c = side_lengths(poly)
        assert abs(a - b) < 1e-2 * a
        assert abs(b - c) < 1e-2 * a


def test_right_polygons_are_not_equilateral():
    svg = render_svg(build_cover(2, 1))
    poly = polygon_points(svg)[0]
    a, b, c = side_lengths(poly)
    longest, shortest = max(a, b, c), min(a, b, c)
    assert longest > 1.3 * shortest  # hypotenuse sqrt(2) vs legs


def test_viewbox_and_background_present():
    svg = render_svg(build_cover(2, 3))
    assert 'viewBox="0 0 720' in svg
    assert '<rect width="100%" height="100%" fill="#ffffff"/>' in svg
    assert svg.rstrip().endswith("</svg>")
