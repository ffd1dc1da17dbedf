"""Ordered adjacency matrices and spatial autocorrelation scoring.

A graph drawing based on its adjacency matrix is only as good as the vertex
order: the same graph can look like noise or like crisp blocks depending on
the permutation applied to rows and columns.  This module provides the two
primitives that the rest of the library builds on:

* ``adjacency`` materializes a 0/1 matrix for a graph under a vertex order,
* ``morans_i`` scores how spatially organized a binary matrix image is.

Moran's I is computed on the matrix viewed as an n-by-n grid of pixel values
with rook (4-neighbor) contiguity and binary weights.  All N = n*n cells
participate, including the zero diagonal, and the weight total W counts
ordered neighbor pairs, so W = 4*n*(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

import numpy as np

from .errors import DegenerateMatrix, DimensionMismatch, InvalidPermutation

if TYPE_CHECKING:
    from .graphio import Graph


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation of 0..n-1 giving each vertex a matrix position.

    ``perm[k]`` is the vertex placed at row (and column) ``k``.
    """

    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        seen = [False] * n
        for v in self.perm:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidPermutation(f"non-integer entry {v!r}")
            if not 0 <= v < n:
                raise InvalidPermutation(f"entry {v} out of range for n={n}")
            if seen[v]:
                raise InvalidPermutation(f"entry {v} repeated")
            seen[v] = True

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.perm)

    def __iter__(self) -> Iterator[int]:
        return iter(self.perm)

    def __getitem__(self, k: int) -> int:
        return self.perm[k]

    def inverse(self) -> "VertexOrdering":
        """The ordering mapping each position back to the vertex it holds."""
        inv = [0] * len(self.perm)
        for pos, v in enumerate(self.perm):
            inv[v] = pos
        return VertexOrdering(tuple(inv))

    def position_of(self, vertex: int) -> int:
        """Matrix row/column index assigned to ``vertex``."""
        return self.perm.index(vertex)


class BinaryMatrix:
    """A square symmetric 0/1 matrix with a zero diagonal.

    Wraps a read-only uint8 numpy array.  Use ``adjacency`` to build one from
    a graph, or ``BinaryMatrix.from_array`` to validate an existing array.
    """

    __slots__ = ("cells",)

    def __init__(self, cells: np.ndarray):
        self.cells = cells

    @classmethod
    def from_array(cls, array) -> "BinaryMatrix":
        a = np.asarray(array)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
        a = a.astype(np.uint8, copy=True)
        if not np.isin(a, (0, 1)).all():
            raise ValueError("matrix entries must be 0 or 1")
        if (np.diagonal(a) != 0).any():
            raise ValueError("matrix diagonal must be zero")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix must be symmetric")
        a.flags.writeable = False
        return cls(a)

    @property
    def n(self) -> int:
        return self.cells.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return hash(self.cells.tobytes())

    def __repr__(self) -> str:
        return f"BinaryMatrix(n={self.n}, ones={int(self.cells.sum())})"


def adjacency(graph: "Graph", ordering: VertexOrdering) -> BinaryMatrix:
    """Adjacency matrix of ``graph`` with rows/columns arranged by ``ordering``.

    Cell (r, c) is 1 iff the vertices at positions r and c are adjacent.
    """
    n = graph.n
    if len(ordering) != n:
        raise DimensionMismatch(
            f"ordering has {len(ordering)} entries for a graph with {n} vertices"
        )
    inv = np.empty(n, dtype=np.int64)
    inv[np.asarray(ordering.perm, dtype=np.int64)] = np.arange(n)
    a = np.zeros((n, n), dtype=np.uint8)
    if graph.edges:
        e = np.asarray(graph.edges, dtype=np.int64)
        r, c = inv[e[:, 0]], inv[e[:, 1]]
        a[r, c] = 1
        a[c, r] = 1
    a.flags.writeable = False
    return BinaryMatrix(a)


def _as_grid(m) -> np.ndarray:
    x = m.cells if isinstance(m, BinaryMatrix) else np.asarray(m)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise DimensionMismatch(f"expected a square grid, got shape {x.shape}")
    return x.astype(np.float64, copy=False)


def _morans_i_raw(x: np.ndarray) -> float:
    """Moran's I without the final clamp.  ``x`` is a validated float grid."""
    n = x.shape[0]
    z = x - x.mean()
    den = float((z * z).sum())
    if den == 0.0:
        return 0.0
    # Each undirected rook-neighbor pair contributes twice to the ordered sum.
    num = 2.0 * float((z[:, :-1] * z[:, 1:]).sum() + (z[:-1, :] * z[1:, :]).sum())
    w = 4 * n * (n - 1)
    return (n * n / w) * num / den


def morans_i(m) -> float:
    """Moran's I of a square grid under rook contiguity, clamped to [-1, 1].

    Accepts a BinaryMatrix or any square array-like of numbers.  Grids with
    zero variance score 0.0 by convention.  Raises DegenerateMatrix for grids
    smaller than 2x2 (no neighbor pairs exist).
    """
    x = _as_grid(m)
    if x.shape[0] < 2:
        raise DegenerateMatrix(f"need at least a 2x2 grid, got {x.shape[0]}x{x.shape[0]}")
    return min(1.0, max(-1.0, _morans_i_raw(x)))
