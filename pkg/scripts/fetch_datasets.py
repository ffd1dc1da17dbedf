"""Fetch and convert the two temporal example collections.

Neither collection is redistributed with the package; this script builds the
per-snapshot files that ``fabricmotifs.datasets.load_snapshot`` expects.

SCH: the SocioPatterns primary-school contact network (242 children and
teachers, two school days).  The raw 20-second contact list is aggregated
into 1-hour snapshots; the 17 non-empty hours are written as MatrixMarket
files sch_00.mtx .. sch_16.mtx.  MatrixMarket is used because it carries the
full vertex count, so children with no contacts in an hour stay in the graph
as isolated vertices.  Vertex index = rank of the participant id among all
ids seen in the file (stable across snapshots).

    python3 scripts/fetch_datasets.py --dest data/external sch

FLT: the "flashtap" functional brain connectivity study shipped with the
MultiPiles explorer (29 regions, 96 time steps).  There is no stable public
download; point --flt-src at a local copy, either a directory of 96
whitespace-delimited 29x29 matrix files (sorted file order = time order) or
a single CSV per step.  Steps are written as edge lists flt_00.txt ..
flt_95.txt (entries above a --flt-threshold correlation become edges).

    python3 scripts/fetch_datasets.py --dest data/external --flt-src ~/flashtap flt
"""

from __future__ import annotations

import argparse
import csv
import gzip
import io
import sys
import urllib.request
from collections import defaultdict
from pathlib import Path

SCH_URL = (
    "http://www.sociopatterns.org/wp-content/uploads/2015/09/primaryschool.csv.gz"
)


def fetch_sch(dest: Path, url: str) -> None:
    print(f"downloading {url}")
    raw = urllib.request.urlopen(url, timeout=120).read()
    text = gzip.decompress(raw).decode("utf-8")
    rows = [line.split("\t") for line in text.splitlines() if line.strip()]
    ids = sorted({int(r[1]) for r in rows} | {int(r[2]) for r in rows})
    index = {v: i for i, v in enumerate(ids)}
    n = len(ids)
    print(f"{n} participants, {len(rows)} contact events")

    hours: dict[int, set[tuple[int, int]]] = defaultdict(set)
    for r in rows:
        t, i, j = int(r[0]), index[int(r[1])], index[int(r[2])]
        if i == j:
            continue
        hours[t // 3600].add((min(i, j) + 1, max(i, j) + 1))

    dest.mkdir(parents=True, exist_ok=True)
    for k, hour in enumerate(sorted(hours)):
        edges = sorted(hours[hour])
        lines = ["%%MatrixMarket matrix coordinate pattern symmetric"]
        lines.append(f"% primary school contacts, hour bin {hour}")
        lines.append(f"{n} {n} {len(edges)}")
        lines += [f"{u} {v}" for u, v in edges]
        path = dest / f"sch_{k:02d}.mtx"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {path} ({len(edges)} edges)")
    print(f"{len(hours)} snapshots")


def _read_matrix(path: Path) -> list[list[float]]:
    text = path.read_text(encoding="utf-8")
    delim = "," if "," in text.splitlines()[0] else None
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        toks = line.split(delim) if delim else line.split()
        rows.append([float(t) for t in toks])
    return rows


def fetch_flt(dest: Path, src: Path, threshold: float) -> None:
    files = sorted(p for p in src.iterdir() if p.suffix.lower() in (".csv", ".txt"))
    if not files:
        sys.exit(f"no matrix files found in {src}")
    dest.mkdir(parents=True, exist_ok=True)
    for k, f in enumerate(files):
        m = _read_matrix(f)
        n = len(m)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if abs(m[i][j]) > threshold
        ]
        path = dest / f"flt_{k:02d}.txt"
        lines = [f"# {f.name}, |weight| > {threshold}"]
        lines += [f"{u} {v}" for u, v in edges]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {path} ({n} vertices, {len(edges)} edges)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("collections", nargs="+", choices=("sch", "flt"))
    ap.add_argument("--dest", default="data/external", help="output root directory")
    ap.add_argument("--sch-url", default=SCH_URL)
    ap.add_argument("--flt-src", help="local directory with the flashtap matrices")
    ap.add_argument("--flt-threshold", type=float, default=0.5)
    args = ap.parse_args()
    dest = Path(args.dest)
    if "sch" in args.collections:
        fetch_sch(dest / "sch", args.sch_url)
    if "flt" in args.collections:
        if not args.flt_src:
            sys.exit("flt needs --flt-src (no stable public download exists)")
        fetch_flt(dest / "flt", Path(args.flt_src), args.flt_threshold)


if __name__ == "__main__":
    main()
