"""Unfolding an ordered matrix into a linear fabric of edges and glyphs.

The fabric view lays every vertex out as a horizontal line (row y equals the
vertex's matrix position) and walks the strict upper triangle of the matrix
in row-major order, assigning consecutive column slots to edge groups:

* When the walk reaches the first cell of a detected block (for a diagonal
  block [a, b] that is cell (a, a+1); for an off-diagonal block it is
  (r0, c0)), the whole block is emitted as one group.  The trigger is
  positional, so a noise hole at that exact cell does not delay the glyph.
* The remaining edges of each row, the ones no block owns, are emitted as a
  single shaded staircase group after that row's block groups, ordered by
  increasing far endpoint.

``layout`` then assigns concrete geometry: cliques become square annuli,
bicliques rectangular annuli with one connector segment per member of the
far vertex set, and stars and leftovers become staircase runs of vertical
segments.  Annulus holes carry their block's missing fraction as an exact
rational so renderers can size them with area proportional to the noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import numpy as np

from .errors import PatternOutOfBounds
from .matrix import BinaryMatrix
from .patterns import Pattern, PatternKind, PatternSet


@dataclass(frozen=True)
class PatternGroup:
    """A detected block's edges, emitted together. Row-major within the block."""

    pattern: Pattern
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class StaircaseGroup:
    """One row's leftover edges, ordered by increasing far endpoint."""

    anchor: int
    edges: tuple[tuple[int, int], ...]


Group = Union[PatternGroup, StaircaseGroup]


@dataclass(frozen=True)
class EdgeSequence:
    """The linear order in which edges enter the fabric."""

    n: int
    groups: tuple[Group, ...]

    def edges(self) -> Iterator[tuple[int, int]]:
        for g in self.groups:
            yield from g.edges


def unfold(m: BinaryMatrix, patterns: PatternSet) -> EdgeSequence:
    """Arrange the matrix's edges into the fabric's group sequence."""
    if not isinstance(patterns, PatternSet):
        patterns = PatternSet(tuple(patterns))
    a = m.cells
    n = m.n
    covered = np.zeros((n, n), dtype=bool)
    triggers: dict[int, list[tuple[int, Pattern]]] = {}
    for p in patterns:
        r0, r1 = p.rows
        c0, c1 = p.cols
        if r1 >= n or c1 >= n:
            raise PatternOutOfBounds(
                f"pattern rows={p.rows} cols={p.cols} exceeds matrix size {n}"
            )
        covered[r0 : r1 + 1, c0 : c1 + 1] = True
        first_col = c0 + 1 if p.kind is PatternKind.CLIQUE else c0
        triggers.setdefault(r0, []).append((first_col, p))

    groups: list[Group] = []
    for r in range(n):
        for _, p in sorted(triggers.get(r, []), key=lambda t: t[0]):
            groups.append(PatternGroup(pattern=p, edges=_block_edges(a, p)))
        cols = np.flatnonzero(a[r, r + 1 :]) + r + 1
        loose = tuple((r, int(c)) for c in cols if not covered[r, c])
        if loose:
            groups.append(StaircaseGroup(anchor=r, edges=loose))
    return EdgeSequence(n=n, groups=tuple(groups))


def _block_edges(a: np.ndarray, p: Pattern) -> tuple[tuple[int, int], ...]:
    r0, r1 = p.rows
    c0, c1 = p.cols
    sub = a[r0 : r1 + 1, c0 : c1 + 1]
    if p.kind is PatternKind.CLIQUE:
        sub = np.triu(sub, 1)
    cells = np.argwhere(sub)  # row-major
    edges = tuple((int(i) + r0, int(j) + c0) for i, j in cells)
    if len(edges) != p.present:
        raise ValueError(
            f"pattern claims {p.present} present cells but the matrix has {len(edges)}"
        )
    return edges


@dataclass(frozen=True)
class EdgeSegment:
    """A vertical segment in slot ``slot`` from row y0 down to row y1."""

    slot: int
    y0: int
    y1: int
    role: str = "edge"  # "edge" or "connector"


@dataclass(frozen=True)
class VertexLine:
    vertex: int
    y: int
    x0: float
    x1: float


@dataclass(frozen=True)
class CliqueGlyph:
    """Square annulus over rows [a, b], occupying b - a slots."""

    pattern: Pattern
    slot0: int
    color: int

    @property
    def rows(self) -> tuple[int, int]:
        return self.pattern.rows

    @property
    def width(self) -> int:
        return self.pattern.rows[1] - self.pattern.rows[0]

    @property
    def hole(self) -> Fraction:
        return self.pattern.hole_fraction


@dataclass(frozen=True)
class BicliqueGlyph:
    """Rectangular annulus over the row set, with one connector per column."""

    pattern: Pattern
    slot0: int
    color: int
    connectors: tuple[EdgeSegment, ...]

    @property
    def rows(self) -> tuple[int, int]:
        return self.pattern.rows

    @property
    def cols(self) -> tuple[int, int]:
        return self.pattern.cols

    @property
    def width(self) -> int:
        return self.pattern.cols[1] - self.pattern.cols[0] + 1

    @property
    def hole(self) -> Fraction:
        return self.pattern.hole_fraction


@dataclass(frozen=True)
class StaircaseRun:
    """A run of vertical segments sharing an anchor vertex.

    Direction 'down' means the segments hang from the anchor and get longer
    left to right; 'up' means they rise to the anchor and get shorter.
    """

    anchor: int
    slot0: int
    width: int
    segments: tuple[EdgeSegment, ...]
    direction: str
    shaded: bool
    color: int | None


Element = Union[VertexLine, CliqueGlyph, BicliqueGlyph, StaircaseRun]


@dataclass(frozen=True)
class FabricLayout:
    n: int
    slots: int
    elements: tuple[Element, ...]

    def vertex_lines(self) -> tuple[VertexLine, ...]:
        return tuple(e for e in self.elements if isinstance(e, VertexLine))


class _Extents:
    def __init__(self, n: int):
        self.lo = [None] * n
        self.hi = [None] * n

    def touch(self, v: int, x0: float, x1: float | None = None):
        if x1 is None:
            x1 = x0
        self.lo[v] = x0 if self.lo[v] is None else min(self.lo[v], x0)
        self.hi[v] = x1 if self.hi[v] is None else max(self.hi[v], x1)


def layout(seq: EdgeSequence, patterns: PatternSet) -> FabricLayout:
    """Assign slots and geometry to the groups of an edge sequence."""
    color_of = {p: i for i, p in enumerate(patterns)}
    n = seq.n
    ext = _Extents(n)
    body: list[Element] = []
    cursor = 0
    for g in seq.groups:
        if isinstance(g, StaircaseGroup):
            width = len(g.edges)
            segs = tuple(
                EdgeSegment(slot=cursor + t, y0=r, y1=c)
                for t, (r, c) in enumerate(g.edges)
            )
            body.append(
                StaircaseRun(
                    anchor=g.anchor,
                    slot0=cursor,
                    width=width,
                    segments=segs,
                    direction="down",
                    shaded=True,
                    color=None,
                )
            )
            _touch_run(ext, g.anchor, segs)
        else:
            p = g.pattern
            color = color_of.setdefault(p, len(color_of))
            r0, r1 = p.rows
            c0, c1 = p.cols
            if p.kind is PatternKind.CLIQUE:
                width = r1 - r0
                body.append(CliqueGlyph(pattern=p, slot0=cursor, color=color))
                for v in range(r0, r1 + 1):
                    ext.touch(v, float(cursor), float(cursor + width))
            elif p.kind is PatternKind.BICLIQUE:
                width = p.width
                conns = tuple(
                    EdgeSegment(slot=cursor + t, y0=r1, y1=c0 + t, role="connector")
                    for t in range(width)
                )
                body.append(
                    BicliqueGlyph(pattern=p, slot0=cursor, color=color, connectors=conns)
                )
                for v in range(r0, r1 + 1):
                    ext.touch(v, float(cursor), float(cursor + width))
                for s in conns:
                    ext.touch(s.y1, s.slot + 0.5)
            else:  # star: a staircase run owned by the hub, one slot per edge
                hub, direction = (r0, "down") if p.height == 1 else (c0, "up")
                width = len(g.edges)
                segs = tuple(
                    EdgeSegment(slot=cursor + t, y0=r, y1=c)
                    for t, (r, c) in enumerate(g.edges)
                )
                body.append(
                    StaircaseRun(
                        anchor=hub,
                        slot0=cursor,
                        width=width,
                        segments=segs,
                        direction=direction,
                        shaded=False,
                        color=color,
                    )
                )
                _touch_run(ext, hub, segs)
        cursor += width

    lines = []
    for v in range(n):
        x0 = ext.lo[v] if ext.lo[v] is not None else 0.0
        x1 = ext.hi[v] if ext.hi[v] is not None else 0.0
        lines.append(VertexLine(vertex=v, y=v, x0=float(x0), x1=float(x1)))
    return FabricLayout(n=n, slots=cursor, elements=tuple(lines) + tuple(body))


def _touch_run(ext: _Extents, anchor: int, segs: tuple[EdgeSegment, ...]) -> None:
    xs = [s.slot + 0.5 for s in segs]
    ext.touch(anchor, min(xs), max(xs))
    for s in segs:
        other = s.y1 if s.y1 != anchor else s.y0
        ext.touch(other, s.slot + 0.5)


def to_scene(lay: FabricLayout) -> dict:
    """A plain-data description of the layout, stable across runs."""
    elements = []
    for e in lay.elements:
        if isinstance(e, VertexLine):
            elements.append(
                {"type": "vertex-line", "vertex": e.vertex, "y": e.y, "x0": e.x0, "x1": e.x1}
            )
        elif isinstance(e, CliqueGlyph):
            elements.append(
                {
                    "type": "clique-glyph",
                    "rows": list(e.rows),
                    "slot0": e.slot0,
                    "width": e.width,
                    "present": e.pattern.present,
                    "hole": [e.pattern.missing, e.pattern.capacity],
                    "color": e.color,
                }
            )
        elif isinstance(e, BicliqueGlyph):
            elements.append(
                {
                    "type": "biclique-glyph",
                    "rows": list(e.rows),
                    "cols": list(e.cols),
                    "slot0": e.slot0,
                    "width": e.width,
                    "present": e.pattern.present,
                    "hole": [e.pattern.missing, e.pattern.capacity],
                    "color": e.color,
                    "connectors": [
                        {"slot": s.slot, "y0": s.y0, "y1": s.y1} for s in e.connectors
                    ],
                }
            )
        else:
            elements.append(
                {
                    "type": "staircase-run",
                    "anchor": e.anchor,
                    "slot0": e.slot0,
                    "width": e.width,
                    "direction": e.direction,
                    "shaded": e.shaded,
                    "color": e.color,
                    "segments": [
                        {"slot": s.slot, "y0": s.y0, "y1": s.y1} for s in e.segments
                    ],
                }
            )
    return {"n": lay.n, "slots": lay.slots, "elements": elements}
