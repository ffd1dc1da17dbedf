"""Loading and serializing undirected graphs and analysis results.

Two text formats are accepted:

* Edge lists: one edge per line as two whitespace-separated tokens, with
  ``#`` starting a comment and blank lines ignored.  If every token in the
  file parses as an integer the tokens are vertex indices (n is the largest
  index plus one); otherwise every token is a label, numbered in order of
  first appearance.
* MatrixMarket coordinate files with ``pattern`` field and ``symmetric`` or
  ``general`` symmetry.  Entries are 1-based; n is the declared row count,
  which lets a file express trailing isolated vertices.

Self-loops and duplicate edges are dropped; their counts are reported on the
module logger (``logging.getLogger("fabricmotifs.graphio")``) rather than by
failing, since both are common artifacts of exported data.

``save_json``/``load_json`` round-trip a vertex ordering plus a pattern set
through a small stable JSON document, so detection results can be stored or
fed to other tools.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

from .errors import EmptyGraphError, InvalidPermutation, ParseError
from .matrix import VertexOrdering
from .patterns import Pattern, PatternKind, PatternSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``edges`` is canonical: each pair (u, v) has u < v, there are no
    duplicates, and the tuple is sorted.  ``labels``, when present, maps each
    vertex index to its name from the source file.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be sorted and unique")
            prev = (u, v)
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must cover every vertex")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if v in (u, w))

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def _canonical_edges(pairs) -> tuple[tuple[tuple[int, int], ...], int, int]:
    """Canonicalize raw pairs; returns (edges, loops_dropped, dups_dropped)."""
    loops = 0
    seen: set[tuple[int, int]] = set()
    dups = 0
    for u, v in pairs:
        if u == v:
            loops += 1
            continue
        e = (u, v) if u < v else (v, u)
        if e in seen:
            dups += 1
        else:
            seen.add(e)
    return tuple(sorted(seen)), loops, dups


def _report_drops(source: str, loops: int, dups: int) -> None:
    if loops:
        logger.info("%s: dropped %d self-loop(s)", source, loops)
    if dups:
        logger.info("%s: dropped %d duplicate edge(s)", source, dups)


def _as_text(data) -> str:
    return data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data


def load_edgelist(data) -> Graph:
    """Parse edge-list text (str or bytes) into a Graph."""
    rows: list[tuple[int, str, str]] = []  # (line number, token, token)
    for lineno, raw in enumerate(_as_text(data).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}", line=lineno)
        rows.append((lineno, tokens[0], tokens[1]))
    if not rows:
        raise EmptyGraphError("edge list has no vertices")

    def as_index(tok: str) -> int | None:
        try:
            return int(tok)
        except ValueError:
            return None

    indices = [(as_index(a), as_index(b)) for _, a, b in rows]
    if all(u is not None and v is not None for u, v in indices):
        for (lineno, _, _), (u, v) in zip(rows, indices):
            if u < 0 or v < 0:
                raise ParseError("vertex indices must be nonnegative", line=lineno)
        n = max(max(u, v) for u, v in indices) + 1
        edges, loops, dups = _canonical_edges(indices)
        _report_drops("edge list", loops, dups)
        return Graph(n=n, edges=edges)

    # Label mode: every token is a name, numbered by first appearance.
    ids: dict[str, int] = {}
    pairs = []
    for _, a, b in rows:
        for tok in (a, b):
            if tok not in ids:
                ids[tok] = len(ids)
        pairs.append((ids[a], ids[b]))
    edges, loops, dups = _canonical_edges(pairs)
    _report_drops("edge list", loops, dups)
    return Graph(n=len(ids), edges=edges, labels=tuple(ids))


def load_matrix_market(data) -> Graph:
    """Parse a MatrixMarket coordinate pattern file into a Graph."""
    lines = _as_text(data).splitlines()
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise ParseError("missing %%MatrixMarket header", line=1)
    fields = lines[0].split()
    if len(fields) != 5:
        raise ParseError("header must have 5 fields", line=1)
    _, obj, fmt, field, symmetry = (f.lower() for f in fields)
    if obj != "matrix" or fmt != "coordinate":
        raise ParseError(f"unsupported object/format {obj}/{fmt}", line=1)
    if field != "pattern":
        raise ParseError(f"only pattern field is supported, got {field}", line=1)
    if symmetry not in ("symmetric", "general"):
        raise ParseError(f"unsupported symmetry {symmetry}", line=1)

    body = [
        (lineno, line.strip())
        for lineno, line in enumerate(lines, 1)
        if lineno > 1 and line.strip() and not line.lstrip().startswith("%")
    ]
    if not body:
        raise ParseError("missing size line")
    lineno, size = body[0]
    parts = size.split()
    if len(parts) != 3:
        raise ParseError("size line must be 'rows cols nnz'", line=lineno)
    try:
        rows_n, cols_n, nnz = (int(p) for p in parts)
    except ValueError:
        raise ParseError("size line must contain integers", line=lineno) from None
    if rows_n != cols_n:
        raise ParseError(f"matrix must be square, got {rows_n}x{cols_n}", line=lineno)
    if rows_n == 0:
        raise EmptyGraphError("matrix has no vertices")
    if len(body) - 1 != nnz:
        raise ParseError(f"expected {nnz} entries, found {len(body) - 1}", line=lineno)

    pairs = []
    for lineno, entry in body[1:]:
        parts = entry.split()
        if len(parts) != 2:
            raise ParseError("entry must be 'row col'", line=lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("entry must contain integers", line=lineno) from None
        if not (1 <= i <= rows_n and 1 <= j <= rows_n):
            raise ParseError(f"entry ({i}, {j}) out of range", line=lineno)
        pairs.append((i - 1, j - 1))
    edges, loops, dups = _canonical_edges(pairs)
    _report_drops("matrix market", loops, dups)
    return Graph(n=rows_n, edges=edges)


_LOADERS = {"edgelist": load_edgelist, "mm": load_matrix_market}


def load_graph(data, fmt: str = "edgelist") -> Graph:
    """Parse graph text in the named format ('edgelist' or 'mm')."""
    try:
        loader = _LOADERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected one of {sorted(_LOADERS)}")
    return loader(data)


def sniff_format(path) -> str:
    """Guess the format of a graph file from its suffix."""
    return "mm" if str(path).lower().endswith((".mtx", ".mm")) else "edgelist"


def load_graph_path(path, fmt: str | None = None) -> Graph:
    """Load a graph file, guessing the format from the suffix unless given."""
    with open(path, "rb") as fh:
        data = fh.read()
    return load_graph(data, fmt or sniff_format(path))


def to_edgelist(graph: Graph) -> str:
    """Render a graph back to edge-list text (labels when available)."""
    lines = [f"{graph.label_of(u)} {graph.label_of(v)}" for u, v in graph.edges]
    return "\n".join(lines) + ("\n" if lines else "")


def save_json(ordering: VertexOrdering, patterns: PatternSet) -> bytes:
    """Serialize an ordering and its patterns to stable, compact JSON."""
    doc = {
        "n": len(ordering),
        "order": list(ordering.perm),
        "patterns": [
            {
                "kind": p.kind.value,
                "rows": list(p.rows),
                "cols": list(p.cols),
                "present": p.present,
                "missing": p.missing,
            }
            for p in patterns
        ],
    }
    return json.dumps(doc, separators=(",", ":")).encode("utf-8")


def load_json(data) -> tuple[VertexOrdering, PatternSet]:
    """Parse the document produced by ``save_json``."""
    try:
        doc = json.loads(_as_text(data))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    try:
        n = doc["n"]
        order = doc["order"]
        raw = doc["patterns"]
    except (TypeError, KeyError) as exc:
        raise ParseError(f"missing field {exc}") from None
    if not isinstance(order, list) or len(order) != n:
        raise ParseError("order must list exactly n entries")
    try:
        ordering = VertexOrdering(tuple(int(v) for v in order))
    except (TypeError, ValueError, InvalidPermutation) as exc:
        raise ParseError(f"bad order: {exc}") from None
    pats = []
    for item in raw:
        try:
            pats.append(
                Pattern(
                    kind=PatternKind(item["kind"]),
                    rows=(int(item["rows"][0]), int(item["rows"][1])),
                    cols=(int(item["cols"][0]), int(item["cols"][1])),
                    present=int(item["present"]),
                    missing=int(item["missing"]),
                )
            )
        except (TypeError, KeyError, IndexError, ValueError) as exc:
            raise ParseError(f"bad pattern entry: {exc}") from None
    return ordering, PatternSet(tuple(pats))
