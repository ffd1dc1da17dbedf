"""Regenerate the bundled edge-list data files from networkx's copies.

Development-time script; the generated files are committed, so end users do
not need networkx.  Run from the repository root:

    python3 scripts/make_bundled_data.py
"""

from __future__ import annotations

from pathlib import Path

import networkx as nx

DATA = Path(__file__).resolve().parent.parent / "src" / "fabricmotifs" / "data"


def write_indexed(g, path: Path, title: str) -> None:
    nodes = sorted(g.nodes())
    ids = {v: i for i, v in enumerate(nodes)}
    edges = sorted((min(ids[u], ids[v]), max(ids[u], ids[v])) for u, v in g.edges())
    lines = [f"# {title}", f"# {len(nodes)} vertices, {len(edges)} edges"]
    lines += [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(nodes)} vertices, {len(edges)} edges)")


def write_labeled(g, path: Path, title: str) -> None:
    for v in g.nodes():
        assert " " not in str(v), f"label {v!r} contains whitespace"
    edges = sorted((str(u), str(v)) for u, v in g.edges())
    lines = [f"# {title}", f"# {g.number_of_nodes()} vertices, {len(edges)} edges"]
    lines += [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({g.number_of_nodes()} vertices, {len(edges)} edges)")


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    write_indexed(
        nx.karate_club_graph(),
        DATA / "zkc.txt",
        "Zachary's karate club social network",
    )
    write_labeled(
        nx.les_miserables_graph(),
        DATA / "lesmis.txt",
        "Les Miserables character co-occurrence network",
    )


if __name__ == "__main__":
    main()
