"""Deterministic random fixtures shared across test modules."""

from __future__ import annotations

import random

import numpy as np

from fabricmotifs import BinaryMatrix, Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    )
    return Graph(n=n, edges=edges)


def random_matrix(rng: random.Random, n: int, p: float) -> BinaryMatrix:
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                a[i, j] = a[j, i] = 1
    return BinaryMatrix.from_array(a)


def graph_grid(g: Graph) -> list[list[int]]:
    grid = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        grid[i][j] = grid[j][i] = 1
    return grid


def grid_matrix(grid) -> BinaryMatrix:
    return BinaryMatrix.from_array(np.array(grid, dtype=np.int64))
