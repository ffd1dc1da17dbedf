"""Bundled and downloadable example graphs.

Two small social networks ship with the package as edge-list files:

* ``zkc``: Zachary's karate club, 34 vertices, 78 edges.
* ``lesmis``: Les Miserables character co-occurrence, 77 vertices, 254 edges.

Two larger temporal collections are not redistributed here; fetch them with
``scripts/fetch_datasets.py`` into a directory of per-snapshot files (one
graph file per time step).  ``load_snapshot`` addresses a snapshot by its
position in the directory's sorted file listing, which is the stable index
convention used throughout this package.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .errors import ParseError
from .graphio import Graph, load_edgelist, load_graph_path

_BUNDLED = {"zkc": "zkc.txt", "lesmis": "lesmis.txt"}


def load_bundled(name: str) -> Graph:
    """Load a bundled dataset by name ('zkc' or 'lesmis')."""
    try:
        filename = _BUNDLED[name]
    except KeyError:
        raise ValueError(f"unknown dataset {name!r}; expected one of {sorted(_BUNDLED)}")
    text = resources.files(__package__).joinpath("data", filename).read_text("utf-8")
    return load_edgelist(text)


def zkc() -> Graph:
    """Zachary's karate club (34 vertices, 78 edges)."""
    return load_bundled("zkc")


def les_miserables() -> Graph:
    """Les Miserables character co-occurrences (77 vertices, 254 edges)."""
    return load_bundled("lesmis")


def snapshot_files(root) -> list[Path]:
    """Sorted graph files inside a snapshot directory."""
    root = Path(root)
    files = sorted(
        p for p in root.iterdir() if p.suffix.lower() in (".txt", ".mtx", ".mm")
    )
    if not files:
        raise ParseError(f"no snapshot files found in {root}")
    return files


def load_snapshot(root, index: int) -> Graph:
    """Load the index-th snapshot (0-based, sorted file order) from a directory."""
    files = snapshot_files(root)
    if not 0 <= index < len(files):
        raise IndexError(f"snapshot index {index} out of range 0..{len(files) - 1}")
    return load_graph_path(files[index])
