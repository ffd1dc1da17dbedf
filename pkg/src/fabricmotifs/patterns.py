"""Detection of noisy clique, biclique, and star blocks in an ordered matrix.

After seriation the adjacency matrix of a structured graph shows dense blocks:
squares on the diagonal (cliques), rectangles off the diagonal (bicliques),
and skinny one-line rectangles (stars).  Real data is noisy, so blocks are
accepted with holes, controlled by two purity parameters:

* tau: minimum fill ratio of the whole block (present / capacity),
* sigma: minimum fill ratio of every single row and column line of the block.

tau admits blocks with scattered holes; sigma keeps them tight by rejecting
blocks padded with near-empty fringe lines.  Both thresholds are applied with
exact integer arithmetic (a line of length L qualifies iff it has at least
ceil(sigma * L) ones, with sigma taken at its exact float value), so results
never depend on floating point rounding.

All coordinates refer to the strict upper triangle of the symmetric matrix:
a diagonal square block [a, b] owns the cells {(i, j) : a <= i < j <= b}, and
an off-diagonal block rows [r0, r1] x cols [c0, c1] requires c0 > r1.

Detection proceeds in two stages.  ``enumerate_candidates`` lists every
maximal block satisfying the purity predicate (no one-step range extension
that keeps the shape legal still satisfies it).  ``select_cliques`` and
``select_rectangles`` then choose a pairwise disjoint subset: cliques by an
exact weighted interval scheduling optimum over their diagonal ranges, and
off-diagonal blocks greedily by weight.  Two patterns overlap iff their row
ranges intersect and their column ranges intersect.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import OverlapDetected
from .matrix import BinaryMatrix


class PatternKind(str, Enum):
    CLIQUE = "clique"
    BICLIQUE = "biclique"
    STAR = "star"


@dataclass(frozen=True)
class Pattern:
    """One detected block: a kind, inclusive ranges, and its fill counts."""

    kind: PatternKind
    rows: tuple[int, int]
    cols: tuple[int, int]
    present: int
    missing: int

    def __post_init__(self):
        r0, r1 = self.rows
        c0, c1 = self.cols
        if r0 > r1 or c0 > c1 or r0 < 0 or c0 < 0:
            raise ValueError(f"bad ranges rows={self.rows} cols={self.cols}")
        if self.kind is PatternKind.CLIQUE:
            if self.rows != self.cols:
                raise ValueError("clique block must sit on the diagonal")
            if self.height < 3:
                raise ValueError("clique block needs at least 3 vertices")
        else:
            if c0 <= r1:
                raise ValueError("off-diagonal block must lie strictly above the diagonal")
            if self.kind is PatternKind.STAR:
                if min(self.height, self.width) != 1 or max(self.height, self.width) < 3:
                    raise ValueError("star block must be 1 x k or k x 1 with k >= 3")
            else:
                if self.height < 2 or self.width < 2:
                    raise ValueError("biclique block must be at least 2 x 2")
        if self.present < 1 or self.missing < 0:
            raise ValueError(f"bad fill counts present={self.present} missing={self.missing}")
        if self.present + self.missing != self.capacity:
            raise ValueError("present + missing must equal block capacity")

    @property
    def height(self) -> int:
        return self.rows[1] - self.rows[0] + 1

    @property
    def width(self) -> int:
        return self.cols[1] - self.cols[0] + 1

    @property
    def capacity(self) -> int:
        """Number of matrix cells the block owns."""
        if self.kind is PatternKind.CLIQUE:
            k = self.height
            return k * (k - 1) // 2
        return self.height * self.width

    @property
    def hole_fraction(self) -> Fraction:
        return Fraction(self.missing, self.capacity)


def _overlaps(p: Pattern, q: Pattern) -> bool:
    rows = p.rows[0] <= q.rows[1] and q.rows[0] <= p.rows[1]
    cols = p.cols[0] <= q.cols[1] and q.cols[0] <= p.cols[1]
    return rows and cols


def _canon_key(p: Pattern):
    return (p.rows[0], p.cols[0], p.rows[1], p.cols[1])


@dataclass(frozen=True)
class PatternSet:
    """An immutable collection of pairwise disjoint patterns."""

    patterns: tuple[Pattern, ...]

    def __post_init__(self):
        ps = sorted(self.patterns, key=_canon_key)
        for i, p in enumerate(ps):
            for q in ps[i + 1 :]:
                if q.rows[0] > p.rows[1] and q.cols[0] > p.cols[1]:
                    break
                if _overlaps(p, q):
                    raise OverlapDetected(
                        f"patterns {p.rows}x{p.cols} and {q.rows}x{q.cols} overlap"
                    )

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def by_kind(self, kind: PatternKind) -> tuple[Pattern, ...]:
        return tuple(p for p in self.patterns if p.kind is kind)

    def counts(self) -> dict[str, int]:
        return {k.value: len(self.by_kind(k)) for k in PatternKind}


@dataclass(frozen=True)
class PurityParams:
    """Noise tolerances for block detection; both ratios live in [0, 1]."""

    sigma: float = 0.5
    tau: float = 0.95

    def __post_init__(self):
        for name, v in (("sigma", self.sigma), ("tau", self.tau)):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {v}")


def _ceil_table(ratio: float, kmax: int) -> np.ndarray:
    """table[k] = smallest integer t with t >= ratio * k, exactly, for k in 0..kmax."""
    f = Fraction(ratio)
    num, den = f.numerator, f.denominator
    return np.array([-((-num * k) // den) for k in range(kmax + 1)], dtype=np.int64)


def _clique_candidates(a: np.ndarray, sig_min: np.ndarray, tau_min: np.ndarray) -> list[Pattern]:
    n = a.shape[0]
    if n < 3:
        return []
    pred = np.zeros((n, n), dtype=bool)
    fill = np.zeros((n, n), dtype=np.int64)
    for s in range(n - 1):
        within = np.zeros(n, dtype=np.int64)  # within-block degree of each member
        total2 = 0
        for e in range(s + 1, n):
            col = a[s:e, e].astype(np.int64)
            within[s:e] += col
            within[e] = int(col.sum())
            total2 += 2 * within[e]
            k = e - s + 1
            present = total2 // 2
            fill[s, e] = present
            if present < 1:
                continue
            cap = k * (k - 1) // 2
            pred[s, e] = present >= max(int(tau_min[cap]), 1) and int(
                within[s : e + 1].min()
            ) >= int(sig_min[k - 1])
    out = []
    for s in range(n - 2):
        for e in range(s + 2, n):
            if not pred[s, e]:
                continue
            if s > 0 and pred[s - 1, e]:
                continue
            if e < n - 1 and pred[s, e + 1]:
                continue
            k = e - s + 1
            cap = k * (k - 1) // 2
            present = int(fill[s, e])
            out.append(
                Pattern(PatternKind.CLIQUE, (s, e), (s, e), present, cap - present)
            )
    return out


def _runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """Inclusive [start, end] spans of consecutive True entries."""
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return []
    cuts = np.flatnonzero(np.diff(idx) > 1)
    starts = np.concatenate(([0], cuts + 1))
    ends = np.concatenate((cuts, [idx.size - 1]))
    return [(int(idx[s]), int(idx[e])) for s, e in zip(starts, ends)]


def _rect_predicate(
    a, rowpref, sig_min, tau_min, r0: int, r1: int, c0: int, c1: int
) -> bool:
    """Full purity predicate for the block rows [r0, r1] x cols [c0, c1]."""
    k = r1 - r0 + 1
    w = c1 - c0 + 1
    rowcnt = rowpref[r0 : r1 + 1, c1 + 1] - rowpref[r0 : r1 + 1, c0]
    present = int(rowcnt.sum())
    if present < max(int(tau_min[k * w]), 1):
        return False
    if int(rowcnt.min()) < int(sig_min[w]):
        return False
    colcnt = a[r0 : r1 + 1, c0 : c1 + 1].sum(axis=0)
    return int(colcnt.min()) >= int(sig_min[k])


def _cross_down_predicate(
    a, rowpref, sig_min, tau_min, r0, r1, c0, c1, colcnt, present
) -> bool:
    """Predicate of the block grown by row r1+1 == c0, which crosses the diagonal.

    The grown region is evaluated on its strict-upper-triangle cells: the new
    row owns only columns c0+1..c1 (its c0 cell is the diagonal), every column
    past c0 gains one cell.  Requires w >= 2 so the new row is nonempty.
    """
    k = r1 - r0 + 1
    w = c1 - c0 + 1
    rn = r1 + 1
    new_row = int(rowpref[rn, c1 + 1] - rowpref[rn, c0 + 1])
    if new_row < int(sig_min[w - 1]):
        return False
    if present + new_row < max(int(tau_min[k * w + w - 1]), 1):
        return False
    grown = colcnt[c0 + 1 : c1 + 1] + a[rn, c0 + 1 : c1 + 1]
    return int(grown.min()) >= int(sig_min[k + 1])


def _cross_left_predicate(
    a, rowpref, sig_min, tau_min, r0, r1, c0, c1, colcnt, present
) -> bool:
    """Predicate of the block grown by column c0-1 == r1, crossing the diagonal.

    The new column owns only rows r0..r1-1 (its r1 cell is the diagonal),
    every row above r1 gains one cell.  Requires k >= 2.
    """
    k = r1 - r0 + 1
    w = c1 - c0 + 1
    cn = c0 - 1
    new_col = int(colcnt[cn])  # row r1's contribution is the zero diagonal
    if new_col < int(sig_min[k - 1]):
        return False
    if present + new_col < max(int(tau_min[k * w + k - 1]), 1):
        return False
    grown = (
        rowpref[r0:r1, c1 + 1]
        - rowpref[r0:r1, c0]
        + a[r0:r1, cn].astype(np.int64)
    )
    return int(grown.min()) >= int(sig_min[w + 1])


def _classify(k: int, w: int) -> PatternKind | None:
    if k == 1 and w >= 3:
        return PatternKind.STAR
    if w == 1 and k >= 3:
        return PatternKind.STAR
    if k >= 2 and w >= 2:
        return PatternKind.BICLIQUE
    return None


def _rect_candidates(
    a: np.ndarray, rowpref: np.ndarray, sig_min: np.ndarray, tau_min: np.ndarray
) -> list[Pattern]:
    n = a.shape[0]
    out: list[Pattern] = []
    sigma_pos = int(sig_min[1]) > 0
    tau_list = tau_min.tolist()  # plain ints for the scalar fast path

    def emit(r0, r1, c0, c1, present, colcnt):
        kind = _classify(r1 - r0 + 1, c1 - c0 + 1)
        if kind is None:
            return
        if r0 > 0 and _rect_predicate(a, rowpref, sig_min, tau_min, r0 - 1, r1, c0, c1):
            return
        if r1 + 1 < c0:
            if _rect_predicate(a, rowpref, sig_min, tau_min, r0, r1 + 1, c0, c1):
                return
        elif c1 > c0:  # growing down crosses the diagonal (r1 + 1 == c0)
            if _cross_down_predicate(
                a, rowpref, sig_min, tau_min, r0, r1, c0, c1, colcnt, present
            ):
                return
        if c0 - 1 == r1 and r1 > r0:  # growing left crosses the diagonal
            if _cross_left_predicate(
                a, rowpref, sig_min, tau_min, r0, r1, c0, c1, colcnt, present
            ):
                return
        cap = (r1 - r0 + 1) * (c1 - c0 + 1)
        out.append(Pattern(kind, (r0, r1), (c0, c1), present, cap - present))

    for r0 in range(n - 1):
        colcnt = np.zeros(n, dtype=np.int64)
        for r1 in range(r0, n - 1):
            colcnt += a[r1]
            k = r1 - r0 + 1
            lo = r1 + 1
            if sigma_pos:
                rights = rowpref[r0 : r1 + 1, n] - rowpref[r0 : r1 + 1, lo]
                if int(rights.min()) == 0:
                    # a row with no ones right of r1 kills every taller block too
                    break
            qual = colcnt[lo:] >= int(sig_min[k])
            runs = _runs(qual)
            if not runs:
                continue
            counts = colcnt.tolist()
            for s_loc, e_loc in runs:
                s, e = lo + s_loc, lo + e_loc
                length = e - s + 1
                if length == 1:
                    p = counts[s]
                    if sigma_pos and k > 1:
                        # every row of a one-column block needs its cell present
                        ok1 = p == k
                    else:
                        ok1 = p >= max(tau_list[k], 1)
                    if ok1:
                        emit(r0, r1, s, s, p, colcnt)
                    continue
                cs = np.zeros(length + 1, dtype=np.int64)
                cs[1:] = np.cumsum(colcnt[s : e + 1])
                # pres[i, j] = ones in cols s+i..s+j over rows r0..r1
                pres = cs[None, 1:] - cs[:-1, None]
                width = np.arange(length)[None, :] - np.arange(length)[:, None] + 1
                ok = width >= 1
                caps = k * np.where(ok, width, 1)
                ok &= pres >= np.maximum(tau_min[caps], 1)
                if sigma_pos and k > 1 and ok.any():
                    # k == 1 needs no row check: every qualifying column of a
                    # one-row block is a present cell, so the single row line
                    # is full and passes any sigma.
                    if k * length * length <= 2_000_000:
                        pref = rowpref[r0 : r1 + 1, s : e + 2]
                        rowmin = (pref[:, None, 1:] - pref[:, :-1, None]).min(axis=0)
                        ok &= rowmin >= sig_min[np.where(width >= 1, width, 1)]
                    else:
                        for i, j in np.argwhere(ok):
                            c0, c1 = s + int(i), s + int(j)
                            rowcnt = (
                                rowpref[r0 : r1 + 1, c1 + 1] - rowpref[r0 : r1 + 1, c0]
                            )
                            if int(rowcnt.min()) < int(sig_min[int(j - i) + 1]):
                                ok[i, j] = False
                if not ok.any():
                    continue
                # maximal in the column directions: neither trimming boundary
                # neighbor extension stays inside the qualifying run or passes
                blocked = np.zeros_like(ok)
                blocked[1:, :] |= ok[:-1, :]  # widen left  (c0 - 1)
                blocked[:, :-1] |= ok[:, 1:]  # widen right (c1 + 1)
                for i, j in np.argwhere(ok & ~blocked):
                    emit(r0, r1, s + int(i), s + int(j), int(pres[i, j]), colcnt)
    return out


def enumerate_candidates(m: BinaryMatrix, params: PurityParams) -> list[Pattern]:
    """All maximal blocks satisfying the purity predicate, canonically sorted.

    Candidates may overlap each other; disjointness is the selection stage's
    job.  Sorted by (r0, c0, r1, c1).
    """
    a = m.cells
    n = a.shape[0]
    if n < 2:
        return []
    sig_min = _ceil_table(params.sigma, n)
    tau_min = _ceil_table(params.tau, n * n)
    rowpref = np.zeros((n, n + 1), dtype=np.int64)
    rowpref[:, 1:] = np.cumsum(a, axis=1)
    cands = _clique_candidates(a, sig_min, tau_min)
    cands += _rect_candidates(a, rowpref, sig_min, tau_min)
    cands.sort(key=_canon_key)
    return cands


def _better(a, b):
    """Prefer higher weight, then fewer patterns, then the smaller r0 sequence."""
    if a[0] != b[0]:
        return a if a[0] > b[0] else b
    if a[1] != b[1]:
        return a if a[1] < b[1] else b
    return a if a[2] <= b[2] else b


def select_cliques(candidates) -> list[Pattern]:
    """Max-total-present disjoint clique blocks via weighted interval scheduling.

    Intervals are the diagonal ranges; disjoint means no shared index.  Exact
    optimum, with ties broken toward fewer patterns and then the
    lexicographically smallest sequence of starting rows.
    """
    items = sorted(
        (p for p in candidates if p.kind is PatternKind.CLIQUE),
        key=lambda p: (p.rows[1], p.rows[0]),
    )
    if not items:
        return []
    ends = [p.rows[1] for p in items]
    best = [(0, 0, (), ())]
    for t, p in enumerate(items, 1):
        j = bisect.bisect_left(ends, p.rows[0], 0, t - 1)
        base = best[j]
        take = (
            base[0] + p.present,
            base[1] + 1,
            base[2] + (p.rows[0],),
            base[3] + (p,),
        )
        best.append(_better(take, best[t - 1]))
    return sorted(best[-1][3], key=lambda p: p.rows[0])


def select_rectangles(candidates, cliques=()) -> list[Pattern]:
    """Greedy disjoint choice of off-diagonal blocks around the given cliques.

    Blocks are tried in order of decreasing present - missing, then decreasing
    present, then canonical position, and kept when they overlap nothing
    chosen so far.
    """
    rects = [p for p in candidates if p.kind is not PatternKind.CLIQUE]
    rects.sort(
        key=lambda p: (-(p.present - p.missing), -p.present) + _canon_key(p)
    )
    chosen = list(cliques)
    out = []
    for p in rects:
        if not any(_overlaps(p, q) for q in chosen):
            chosen.append(p)
            out.append(p)
    return sorted(out, key=_canon_key)


def detect(m: BinaryMatrix, params: PurityParams = PurityParams()) -> PatternSet:
    """Detect a pairwise disjoint set of noisy blocks in an ordered matrix."""
    cands = enumerate_candidates(m, params)
    cliques = select_cliques(cands)
    rects = select_rectangles(cands, cliques)
    return PatternSet(tuple(sorted(cliques + rects, key=_canon_key)))
