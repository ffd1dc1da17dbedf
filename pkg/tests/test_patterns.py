"""Block detection: purity predicate, maximal candidates, disjoint selection."""

import random
from fractions import Fraction

import numpy as np
import pytest

from fabricmotifs import (
    BinaryMatrix,
    OverlapDetected,
    Pattern,
    PatternKind,
    PatternSet,
    PurityParams,
    adjacency,
    detect,
    enumerate_candidates,
    heuristic_order,
    select_cliques,
    select_rectangles,
)
from fabricmotifs.datasets import les_miserables, zkc
from fabricmotifs.patterns import _ceil_table
from helpers import random_matrix
from oracles import (
    best_interval_subset,
    candidates_bruteforce,
    clique_region_ok,
    pattern_tuple,
    rect_region_ok,
)


def _matrix_of(edges, n):
    a = np.zeros((n, n), dtype=np.int64)
    for i, j in edges:
        a[i, j] = a[j, i] = 1
    return BinaryMatrix.from_array(a)


class TestPatternInvariants:
    def test_clique_must_sit_on_diagonal(self):
        with pytest.raises(ValueError):
            Pattern(PatternKind.CLIQUE, (0, 2), (1, 3), 3, 0)

    def test_minimum_sizes(self):
        with pytest.raises(ValueError):
            Pattern(PatternKind.CLIQUE, (0, 1), (0, 1), 1, 0)
        with pytest.raises(ValueError):
            Pattern(PatternKind.STAR, (0, 0), (2, 3), 2, 0)
        with pytest.raises(ValueError):
            Pattern(PatternKind.BICLIQUE, (0, 0), (2, 3), 2, 0)

    def test_off_diagonal_required(self):
        with pytest.raises(ValueError):
            Pattern(PatternKind.BICLIQUE, (0, 2), (2, 3), 4, 2)

    def test_fill_accounting(self):
        with pytest.raises(ValueError):
            Pattern(PatternKind.CLIQUE, (0, 2), (0, 2), 2, 0)
        with pytest.raises(ValueError):
            Pattern(PatternKind.CLIQUE, (0, 2), (0, 2), 0, 3)
        p = Pattern(PatternKind.CLIQUE, (0, 3), (0, 3), 3, 3)
        assert p.capacity == 6
        assert p.hole_fraction == Fraction(1, 2)

    def test_pattern_set_rejects_overlap(self):
        a = Pattern(PatternKind.CLIQUE, (0, 2), (0, 2), 3, 0)
        b = Pattern(PatternKind.CLIQUE, (2, 4), (2, 4), 3, 0)
        with pytest.raises(OverlapDetected):
            PatternSet((a, b))

    def test_pattern_set_allows_touching_ranges(self):
        a = Pattern(PatternKind.CLIQUE, (0, 2), (0, 2), 3, 0)
        b = Pattern(PatternKind.CLIQUE, (3, 5), (3, 5), 3, 0)
        ps = PatternSet((a, b))
        assert ps.counts()["clique"] == 2

    def test_row_col_range_overlap_rule(self):
        # ranges must intersect on BOTH axes to conflict
        clique = Pattern(PatternKind.CLIQUE, (2, 5), (2, 5), 6, 0)
        off_axis = Pattern(PatternKind.BICLIQUE, (0, 1), (6, 7), 4, 0)
        PatternSet((clique, off_axis))  # no overlap: rows disjoint from cols
        crossing = Pattern(PatternKind.BICLIQUE, (0, 3), (4, 6), 8, 4)
        with pytest.raises(OverlapDetected):
            PatternSet((clique, crossing))


class TestThresholdArithmetic:
    def test_exact_halves_and_ones(self):
        assert _ceil_table(0.5, 8).tolist() == [0, 1, 1, 2, 2, 3, 3, 4, 4]
        assert _ceil_table(1.0, 4).tolist() == [0, 1, 2, 3, 4]
        assert _ceil_table(0.0, 4).tolist() == [0, 0, 0, 0, 0]

    def test_thresholds_use_exact_float_value(self):
        # thresholds compare against the exact binary value of the float:
        # the double 0.1 sits just above 1/10, so 1 one out of 10 is NOT
        # enough (naive ceil(0.1 * 10) would say it is), while the double
        # 0.3 sits just below 3/10, so 3 of 10 passes.
        assert _ceil_table(0.1, 10)[10] == 2
        assert _ceil_table(0.3, 10)[10] == 3
        assert _ceil_table(0.75, 16)[16] == 12

    def test_tau_boundary_behavior(self):
        # 4x4 off-diagonal block, tau = 0.75 admits exactly 12 of 16 cells
        def block(count):
            cells = [(r, c) for r in range(4) for c in range(4, 8)]
            edges = cells[:count]
            return _matrix_of(edges, 8)

        params = PurityParams(sigma=0.0, tau=0.75)
        full = [p for p in enumerate_candidates(block(12), params)
                if p.rows == (0, 3) and p.cols == (4, 7)]
        assert len(full) == 1 and full[0].present == 12
        short = [p for p in enumerate_candidates(block(11), params)
                 if p.rows == (0, 3) and p.cols == (4, 7)]
        assert short == []

    def test_params_validated(self):
        with pytest.raises(ValueError):
            PurityParams(sigma=-0.1)
        with pytest.raises(ValueError):
            PurityParams(tau=1.5)


class TestCandidates:
    def test_perfect_k4_yields_single_candidate(self):
        m = _matrix_of([(i, j) for i in range(4) for j in range(i + 1, 4)], 4)
        cands = enumerate_candidates(m, PurityParams(sigma=1.0, tau=1.0))
        assert len(cands) == 1
        (p,) = cands
        assert p.kind is PatternKind.CLIQUE
        assert p.rows == (0, 3) and p.present == 6 and p.missing == 0

    def test_single_star_candidate(self):
        m = _matrix_of([(0, j) for j in range(1, 6)], 6)
        cands = enumerate_candidates(m, PurityParams(sigma=1.0, tau=1.0))
        assert len(cands) == 1
        (p,) = cands
        assert p.kind is PatternKind.STAR
        assert p.rows == (0, 0) and p.cols == (1, 5) and p.present == 5

    def test_perfect_biclique_candidate(self):
        m = _matrix_of([(i, j) for i in range(2) for j in range(2, 4)], 4)
        cands = enumerate_candidates(m, PurityParams(sigma=1.0, tau=1.0))
        assert [pattern_tuple(p) for p in cands] == [
            ("biclique", 0, 1, 2, 3, 4, 0)
        ]

    def test_matches_bruteforce_enumeration(self):
        rng = random.Random(99)
        grid = [
            (0.5, 0.8), (0.5, 0.95), (1.0, 1.0), (0.0, 0.6), (0.7, 0.9),
            (0.3, 0.3), (0.0, 0.0), (0.25, 1.0), (1.0, 0.5),
        ]
        for t in range(60):
            n = rng.randrange(2, 12)
            m = random_matrix(rng, n, rng.choice([0.15, 0.3, 0.5, 0.8]))
            sigma, tau = grid[t % len(grid)]
            got = [pattern_tuple(p) for p in
                   enumerate_candidates(m, PurityParams(sigma, tau))]
            want = candidates_bruteforce(m.cells.tolist(), sigma, tau)
            assert got == want, (n, sigma, tau)

    def test_every_candidate_is_maximal_and_pure(self):
        rng = random.Random(41)
        for _ in range(25):
            n = rng.randrange(4, 14)
            m = random_matrix(rng, n, 0.45)
            sigma = rng.choice([0.0, 0.3, 0.5, 1.0])
            tau = rng.choice([0.5, 0.8, 1.0])
            a = m.cells.tolist()
            for p in enumerate_candidates(m, PurityParams(sigma, tau)):
                r0, r1 = p.rows
                c0, c1 = p.cols
                if p.kind is PatternKind.CLIQUE:
                    assert clique_region_ok(a, r0, r1, sigma, tau)
                    assert not clique_region_ok(a, r0 - 1, r1, sigma, tau)
                    assert not clique_region_ok(a, r0, r1 + 1, sigma, tau)
                else:
                    assert rect_region_ok(a, r0, r1, c0, c1, sigma, tau)
                    for g in ((r0 - 1, r1, c0, c1), (r0, r1 + 1, c0, c1),
                              (r0, r1, c0 - 1, c1), (r0, r1, c0, c1 + 1)):
                        assert not rect_region_ok(a, *g, sigma, tau)

    def test_strict_purity_admits_no_noise(self):
        rng = random.Random(42)
        for _ in range(15):
            m = random_matrix(rng, rng.randrange(3, 12), 0.6)
            for p in enumerate_candidates(m, PurityParams(1.0, 1.0)):
                assert p.missing == 0

    def test_empty_and_tiny_matrices(self):
        params = PurityParams(0.5, 0.95)
        assert enumerate_candidates(_matrix_of([], 5), params) == []
        assert enumerate_candidates(_matrix_of([], 1), params) == []
        assert len(detect(_matrix_of([], 4), params)) == 0


class TestSelection:
    @staticmethod
    def _clique(r0, r1, present):
        k = r1 - r0 + 1
        cap = k * (k - 1) // 2
        return Pattern(PatternKind.CLIQUE, (r0, r1), (r0, r1), present, cap - present)

    def test_two_disjoint_triangles_both_selected(self):
        a, b = self._clique(0, 2, 3), self._clique(3, 5, 3)
        assert select_cliques([a, b]) == [a, b]
        assert sum(p.present for p in select_cliques([a, b])) == 6

    def test_heavy_interval_beats_partition(self):
        # one interval of weight 8 vs two disjoint ones totalling 4
        big = self._clique(0, 4, 8)
        small1, small2 = self._clique(0, 2, 3), self._clique(3, 5, 1)
        assert select_cliques([big, small1, small2]) == [big]

    def test_nested_interval_prefers_weight(self):
        outer = self._clique(0, 5, 7)
        inner = self._clique(1, 4, 6)
        assert select_cliques([outer, inner]) == [outer]

    def test_dp_matches_subset_oracle(self):
        rng = random.Random(7)
        for _ in range(60):
            items = []
            for _ in range(rng.randrange(0, 13)):
                r0 = rng.randrange(0, 20)
                k = rng.randrange(3, 7)
                cap = k * (k - 1) // 2
                items.append(self._clique(r0, r0 + k - 1, rng.randrange(1, cap + 1)))
            got = select_cliques(items)
            if not items:
                assert got == []
                continue
            want_w, want = best_interval_subset(
                [(p.rows[0], p.rows[1], p.present) for p in items]
            )
            # the contract pins total weight, then count, then the r0
            # sequence; beyond that any maximiser is acceptable
            assert sum(p.present for p in got) == want_w
            assert len(got) == len(want)
            assert [p.rows[0] for p in got] == [it[0] for it in want]
            for a, b in zip(got, got[1:]):
                assert a.rows[1] < b.rows[0]
            assert all(p in items for p in got)

    def test_lone_rectangle_selected(self):
        b = Pattern(PatternKind.BICLIQUE, (0, 1), (4, 5), 4, 0)
        assert select_rectangles([b]) == [b]

    def test_overlapping_rectangles_keep_heavier(self):
        heavy = Pattern(PatternKind.BICLIQUE, (0, 1), (3, 5), 5, 1)
        light = Pattern(PatternKind.BICLIQUE, (1, 2), (4, 5), 3, 1)
        assert select_rectangles([heavy, light]) == [heavy]
        assert select_rectangles([light, heavy]) == [heavy]

    def test_rectangle_conflicting_with_clique_rejected(self):
        clique = self._clique(2, 5, 6)
        conflicted = Pattern(PatternKind.BICLIQUE, (0, 3), (4, 6), 7, 5)
        clear = Pattern(PatternKind.BICLIQUE, (0, 1), (6, 7), 4, 0)
        out = select_rectangles([conflicted, clear], cliques=[clique])
        assert out == [clear]

    def test_greedy_prefers_weight_then_present(self):
        # same present - missing, larger present wins
        dense = Pattern(PatternKind.BICLIQUE, (0, 1), (4, 6), 5, 1)
        small = Pattern(PatternKind.BICLIQUE, (0, 1), (4, 5), 4, 0)
        assert select_rectangles([small, dense]) == [dense]


class TestDetect:
    def test_outputs_are_disjoint_and_pure(self):
        rng = random.Random(17)
        for _ in range(20):
            n = rng.randrange(4, 20)
            m = random_matrix(rng, n, 0.4)
            sigma, tau = rng.choice([(0.3, 0.85), (0.5, 0.95)])
            ps = detect(m, PurityParams(sigma, tau))
            a = m.cells.tolist()
            for p in ps:
                assert Fraction(p.present, p.capacity) >= Fraction(tau)
                if p.kind is PatternKind.CLIQUE:
                    assert clique_region_ok(a, p.rows[0], p.rows[1], sigma, tau)
                else:
                    assert rect_region_ok(
                        a, p.rows[0], p.rows[1], p.cols[0], p.cols[1], sigma, tau
                    )

    def test_zkc_finds_cliques_and_bicliques(self):
        g = zkc()
        vo = heuristic_order(g, seed=0)
        ps = detect(adjacency(g, vo), PurityParams(sigma=0.5, tau=0.95))
        counts = ps.counts()
        assert counts["clique"] >= 1
        assert counts["biclique"] >= 2

    def test_tau_tightening_cannot_add_noise(self):
        # raising tau from 0.85 to 0.95 must not increase total missing cells
        for g in (zkc(), les_miserables()):
            m = adjacency(g, heuristic_order(g, seed=0))
            loose = detect(m, PurityParams(sigma=0.5, tau=0.85))
            tight = detect(m, PurityParams(sigma=0.5, tau=0.95))
            assert sum(p.missing for p in tight) <= sum(p.missing for p in loose)

    def test_deterministic(self):
        m = random_matrix(random.Random(23), 25, 0.35)
        p = PurityParams(0.5, 0.9)
        assert detect(m, p).patterns == detect(m, p).patterns
