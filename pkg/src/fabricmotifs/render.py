"""Deterministic SVG rendering of fabric layouts and matrix views.

Rendering is plain string assembly: no timestamps, no dict iteration of
unordered containers, and fixed-precision coordinate formatting, so the same
layout and style always produce byte-identical files.

Annulus glyphs are drawn as one even-odd path (outer rectangle plus centered
hole).  The hole's side lengths scale with the square root of the block's
missing fraction, making hole area proportional to the amount of noise the
block absorbed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .fabric import BicliqueGlyph, CliqueGlyph, FabricLayout, StaircaseRun, VertexLine
from .matrix import BinaryMatrix
from .patterns import PatternSet

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#17becf",
    "#bcbd22",
    "#e377c2",
)


@dataclass(frozen=True)
class StyleConfig:
    unit: int = 12
    margin: int = 16
    background: str = "#ffffff"
    line_color: str = "#55595f"
    line_width: float = 1.5
    seg_width: float = 1.8
    gray: str = "#b8bcc2"
    palette: tuple[str, ...] = _PALETTE
    cell_color: str = "#22262a"
    show_labels: bool = False
    label_size: int = 10


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _svg_open(width: float, height: float, background: str) -> list[str]:
    w, h = _fmt(width), _fmt(height)
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="{background}"/>',
    ]


def _line(x0, y0, x1, y1, color, width) -> str:
    return (
        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" '
        f'stroke="{color}" stroke-width="{_fmt(width)}" stroke-linecap="square"/>'
    )


def _annulus(x, y, w, h, hole_frac: float, color: str) -> str:
    """Rectangle with an optional centered hole, area-proportional to hole_frac."""
    outer = f"M{_fmt(x)} {_fmt(y)}h{_fmt(w)}v{_fmt(h)}h{_fmt(-w)}Z"
    if hole_frac <= 0.0:
        return f'<path d="{outer}" fill="{color}"/>'
    s = math.sqrt(hole_frac)
    hw, hh = w * s, h * s
    hx, hy = x + (w - hw) / 2.0, y + (h - hh) / 2.0
    inner = f"M{_fmt(hx)} {_fmt(hy)}h{_fmt(hw)}v{_fmt(hh)}h{_fmt(-hw)}Z"
    return f'<path d="{outer} {inner}" fill="{color}" fill-rule="evenodd"/>'


def render_fabric_svg(
    lay: FabricLayout,
    style: StyleConfig = StyleConfig(),
    labels: tuple[str, ...] | None = None,
) -> bytes:
    """Render a fabric layout to standalone SVG bytes."""
    u = style.unit
    gutter = 0.0
    if style.show_labels:
        names = labels or tuple(str(v) for v in range(lay.n))
        longest = max((len(s) for s in names), default=0)
        gutter = longest * style.label_size * 0.62 + 8.0
    left = style.margin + gutter
    top = style.margin
    width = left + lay.slots * u + style.margin
    height = top + max(lay.n - 1, 0) * u + style.margin

    def px(x_units: float) -> float:
        return left + x_units * u

    def py(y_units: float) -> float:
        return top + y_units * u

    out = _svg_open(width, height, style.background)
    glyphs = []
    segments = []
    for e in lay.elements:
        if isinstance(e, VertexLine):
            if e.x1 > e.x0:
                out.append(
                    _line(px(e.x0), py(e.y), px(e.x1), py(e.y), style.line_color, style.line_width)
                )
        elif isinstance(e, CliqueGlyph):
            color = style.palette[e.color % len(style.palette)]
            glyphs.append(
                _annulus(
                    px(e.slot0), py(e.rows[0]), e.width * u, e.width * u,
                    float(e.hole), color,
                )
            )
        elif isinstance(e, BicliqueGlyph):
            color = style.palette[e.color % len(style.palette)]
            for s in e.connectors:
                segments.append(
                    _line(px(s.slot + 0.5), py(s.y0), px(s.slot + 0.5), py(s.y1), color, style.seg_width)
                )
            glyphs.append(
                _annulus(
                    px(e.slot0), py(e.rows[0]), e.width * u,
                    (e.rows[1] - e.rows[0]) * u, float(e.hole), color,
                )
            )
        elif isinstance(e, StaircaseRun):
            color = style.gray if e.shaded else style.palette[e.color % len(style.palette)]
            for s in e.segments:
                segments.append(
                    _line(px(s.slot + 0.5), py(s.y0), px(s.slot + 0.5), py(s.y1), color, style.seg_width)
                )
    out += segments
    out += glyphs
    if style.show_labels:
        names = labels or tuple(str(v) for v in range(lay.n))
        for v in range(lay.n):
            name = escape(names[v]) if v < len(names) else str(v)
            out.append(
                f'<text x="{_fmt(left - 4.0)}" y="{_fmt(py(v) + style.label_size * 0.35)}" '
                f'font-family="sans-serif" font-size="{style.label_size}" '
                f'text-anchor="end" fill="{style.line_color}">{name}</text>'
            )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def render_matrix_svg(
    m: BinaryMatrix,
    patterns: PatternSet | None = None,
    style: StyleConfig = StyleConfig(),
) -> bytes:
    """Render the 0/1 matrix as a cell grid, outlining each pattern's block."""
    u = style.unit
    n = m.n
    side = 2 * style.margin + n * u
    out = _svg_open(side, side, style.background)

    def p(k: float) -> float:
        return style.margin + k * u

    rows, cols = m.cells.nonzero()
    for r, c in zip(rows, cols):
        out.append(
            f'<rect x="{_fmt(p(c))}" y="{_fmt(p(r))}" width="{u}" height="{u}" '
            f'fill="{style.cell_color}"/>'
        )
    if patterns is not None:
        for i, pat in enumerate(patterns):
            color = style.palette[i % len(style.palette)]
            r0, r1 = pat.rows
            c0, c1 = pat.cols
            out.append(
                f'<rect x="{_fmt(p(c0))}" y="{_fmt(p(r0))}" '
                f'width="{_fmt((c1 - c0 + 1) * u)}" height="{_fmt((r1 - r0 + 1) * u)}" '
                f'fill="none" stroke="{color}" stroke-width="2"/>'
            )
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
