"""Vertex ordering: heuristic, exhaustive oracle, and the TSPLIB bridge."""

import itertools
import random

import numpy as np
import pytest

from fabricmotifs import (
    MAX_EXHAUSTIVE_N,
    DimensionMismatch,
    Graph,
    MalformedTour,
    TooLargeForExhaustive,
    TourLengthMismatch,
    VertexOrdering,
    adjacency,
    export_tsplib,
    exhaustive_order,
    heuristic_order,
    import_tour,
    morans_i,
    order,
)
from fabricmotifs.seriation import (
    _climb,
    _dense,
    _hamming_matrix,
    _nearest_neighbor,
    _scoring_arrays,
    _t_score,
    _two_opt,
)
from helpers import graph_grid, random_graph
from oracles import best_orderings, moran_fraction, permute_grid


class TestScoreReduction:
    def test_path_score_is_affine_in_morans_i(self):
        # The integer path score T(pi) used internally relates to Moran's I by
        # I = (T - 8E^2 + 4E^2(n-1)/n) / (n(n-1) * (2E - 4E^2/n^2)).
        # This is what makes integer hill-climbing equivalent to climbing I.
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randrange(2, 10)
            g = random_graph(rng, n, 0.45)
            if not g.edges:
                continue
            codeg, deg, e = _scoring_arrays(_dense(g))
            perm = list(range(n))
            rng.shuffle(perm)
            t = _t_score(np.array(perm), codeg, deg, e)
            den = 2 * e - 4 * e * e / n**2
            predicted = (t - 8 * e**2 + 4 * e**2 * (n - 1) / n) / (n * (n - 1) * den)
            actual = morans_i(adjacency(g, VertexOrdering(tuple(perm))))
            assert actual == pytest.approx(predicted, abs=1e-12)

    def test_reversal_leaves_score_unchanged(self):
        rng = random.Random(6)
        for _ in range(20):
            g = random_graph(rng, rng.randrange(2, 9), 0.5)
            perm = list(range(g.n))
            rng.shuffle(perm)
            fwd = morans_i(adjacency(g, VertexOrdering(tuple(perm))))
            rev = morans_i(adjacency(g, VertexOrdering(tuple(perm[::-1]))))
            assert fwd == pytest.approx(rev, abs=1e-12)


class TestHeuristic:
    def test_monotone_over_own_stages(self):
        # final I >= I of the nearest-neighbor start and of the 2-opt path
        rng = random.Random(7)
        for trial in range(40):
            n = rng.randrange(3, 12)
            g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
            if not g.edges:
                continue
            seed = trial
            a = _dense(g)
            codeg, deg, e = _scoring_arrays(a)
            d = _hamming_matrix(a, codeg, deg)
            start = random.Random(seed).randrange(n)
            p_nn = _nearest_neighbor(d, start)
            p_tsp = _two_opt(d, p_nn)
            final = morans_i(adjacency(g, heuristic_order(g, seed=seed)))
            for stage in (p_nn, p_tsp):
                stage_i = morans_i(
                    adjacency(g, VertexOrdering(tuple(int(v) for v in stage)))
                )
                assert final >= stage_i - 1e-12

    def test_deterministic_per_seed(self):
        g = random_graph(random.Random(8), 20, 0.3)
        assert heuristic_order(g, seed=3) == heuristic_order(g, seed=3)

    def test_result_is_permutation(self):
        rng = random.Random(9)
        for _ in range(20):
            n = rng.randrange(2, 15)
            g = random_graph(rng, n, 0.4)
            vo = heuristic_order(g, seed=0)
            assert sorted(vo.perm) == list(range(n))

    def test_planted_blocks_recovered_across_seeds(self):
        # two noisy 8-cliques with sparse inter-block edges must come out
        # contiguous for at least 18 of 20 seeds
        gen = random.Random(4242)
        edges = set()
        for lo in (0, 8):
            for i in range(lo, lo + 8):
                for j in range(i + 1, lo + 8):
                    if gen.random() < 0.9:
                        edges.add((i, j))
        for i in range(0, 8):
            for j in range(8, 16):
                if gen.random() < 0.05:
                    edges.add((i, j))
        g = Graph(n=16, edges=tuple(sorted(edges)))

        def contiguous(vo, members):
            pos = sorted(vo.position_of(v) for v in members)
            return pos[-1] - pos[0] + 1 == len(pos)

        hits = sum(
            1
            for seed in range(20)
            if contiguous(heuristic_order(g, seed=seed), range(8))
            and contiguous(heuristic_order(g, seed=seed), range(8, 16))
        )
        assert hits >= 18

    def test_all_isolated_vertices(self):
        g = Graph(n=5, edges=())
        res = order(g, method="heuristic")
        assert res.ordering == VertexOrdering.identity(5)
        assert res.morans_i == 0.0

    def test_climb_never_decreases_t(self):
        rng = random.Random(10)
        for _ in range(20):
            g = random_graph(rng, rng.randrange(3, 10), 0.5)
            if not g.edges:
                continue
            codeg, deg, e = _scoring_arrays(_dense(g))
            perm = np.random.RandomState(1).permutation(g.n).astype(np.int64)
            out = _climb(codeg, deg, e, perm)
            assert _t_score(out, codeg, deg, e) >= _t_score(perm, codeg, deg, e)


class TestExhaustive:
    def test_matches_exact_argmax_with_lex_tiebreak(self):
        rng = random.Random(12)
        for _ in range(25):
            n = rng.randrange(2, 7)
            g = random_graph(rng, n, 0.5)
            if not g.edges:
                continue
            res = order(g, method="exhaustive")
            best_val, best_perms = best_orderings(graph_grid(g))
            assert res.ordering.perm == min(best_perms)
            assert res.morans_i == pytest.approx(float(best_val), abs=1e-12)

    def test_no_permutation_scores_higher_n7(self):
        g = random_graph(random.Random(13), 7, 0.4)
        best = order(g, method="exhaustive").morans_i
        for perm in itertools.permutations(range(7)):
            val = morans_i(adjacency(g, VertexOrdering(perm)))
            assert val <= best + 1e-12

    def test_two_disjoint_triangles_beat_interleaving(self):
        g = Graph(n=6, edges=((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)))
        best = order(g, method="exhaustive").morans_i
        interleaved = morans_i(adjacency(g, VertexOrdering((0, 3, 1, 4, 2, 5))))
        assert best > interleaved

    def test_complete_graph_is_order_invariant(self):
        g = Graph(n=4, edges=tuple((i, j) for i in range(4) for j in range(i + 1, 4)))
        vals = {
            round(morans_i(adjacency(g, VertexOrdering(p))), 12)
            for p in itertools.permutations(range(4))
        }
        assert len(vals) == 1
        assert order(g, method="exhaustive").morans_i == pytest.approx(vals.pop())

    def test_size_guard(self):
        g = Graph(n=MAX_EXHAUSTIVE_N + 1, edges=((0, 1),))
        with pytest.raises(TooLargeForExhaustive):
            exhaustive_order(g)


class TestOrderDispatch:
    def test_identity_and_given(self):
        g = Graph(n=3, edges=((0, 1),))
        assert order(g, method="identity").ordering.perm == (0, 1, 2)
        res = order(g, method="given", perm=[2, 1, 0])
        assert res.ordering.perm == (2, 1, 0)

    def test_given_requires_perm(self):
        g = Graph(n=3, edges=((0, 1),))
        with pytest.raises(ValueError):
            order(g, method="given")
        with pytest.raises(DimensionMismatch):
            order(g, method="given", perm=[0, 1])

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            order(Graph(n=2, edges=((0, 1),)), method="sideways")

    def test_score_reported_matches_ordering(self):
        g = random_graph(random.Random(14), 9, 0.4)
        res = order(g, method="heuristic", seed=2)
        assert res.morans_i == pytest.approx(
            morans_i(adjacency(g, res.ordering)), abs=0
        )


class TestTsplibBridge:
    PATH3 = Graph(n=3, edges=((0, 1), (1, 2)))

    def test_export_adds_dummy_city(self):
        text = export_tsplib(self.PATH3).decode()
        assert "DIMENSION: 4" in text
        assert "EDGE_WEIGHT_TYPE: EXPLICIT" in text
        assert "EDGE_WEIGHT_FORMAT: FULL_MATRIX" in text
        rows = [
            [int(x) for x in line.split()]
            for line in text.split("EDGE_WEIGHT_SECTION")[1].split("EOF")[0].splitlines()
            if line.strip()
        ]
        assert len(rows) == 4
        # dummy city is at zero distance from everyone
        assert rows[3] == [0, 0, 0, 0]
        assert [r[3] for r in rows] == [0, 0, 0, 0]
        # Hamming distances of the path rows, ignoring the pair's own columns
        assert rows[0][1] == 1 and rows[1][2] == 1 and rows[0][2] == 0

    def test_import_plain_tour(self):
        vo = import_tour("1 2 3 4", graph_size=3)
        assert sorted(vo.perm) == [0, 1, 2]

    def test_import_tour_section_format(self):
        data = "NAME: t\nTYPE: TOUR\nDIMENSION: 4\nTOUR_SECTION\n2\n3\n4\n1\n-1\nEOF\n"
        vo = import_tour(data, graph_size=3)
        assert sorted(vo.perm) == [0, 1, 2]

    def test_dummy_cut_turns_cycle_into_path(self):
        # dummy city 4 sits between 3 and 1 in the cycle; cutting there must
        # produce the open path 0,1,2 (up to reversal normalization)
        vo = import_tour("3 4 1 2", graph_size=3)
        assert vo.perm == (0, 1, 2)

    def test_import_without_dummy_accepted(self):
        vo = import_tour("2 1 3", graph_size=3)
        assert sorted(vo.perm) == [0, 1, 2]

    def test_reversed_tours_normalize_identically(self):
        a = import_tour("1 2 3 4", graph_size=3)
        b = import_tour("4 3 2 1", graph_size=3)
        assert a == b

    def test_malformed_tours_rejected(self):
        with pytest.raises(MalformedTour):
            import_tour("1 2 2 4", graph_size=3)
        with pytest.raises(MalformedTour):
            import_tour("1 2 x 4", graph_size=3)
        with pytest.raises(MalformedTour):
            import_tour("", graph_size=3)
        with pytest.raises(TourLengthMismatch):
            import_tour("1 2 3 4 5", graph_size=3)

    def test_round_trip_with_brute_force_solver(self):
        # play the role of an external TSP solver: brute-force the exported
        # instance, feed the winning cycle back in
        g = random_graph(random.Random(15), 5, 0.5)
        text = export_tsplib(g).decode()
        rows = [
            [int(x) for x in line.split()]
            for line in text.split("EDGE_WEIGHT_SECTION")[1].split("EOF")[0].splitlines()
            if line.strip()
        ]
        m = len(rows)
        best = min(
            itertools.permutations(range(1, m)),
            key=lambda t: rows[0][t[0]]
            + sum(rows[t[i]][t[i + 1]] for i in range(m - 2))
            + rows[t[-1]][0],
        )
        tour = " ".join(str(c + 1) for c in (0,) + best)
        vo = import_tour(tour, graph_size=g.n)
        assert sorted(vo.perm) == list(range(g.n))
        # the optimal tour's ordering should not lose to the identity order
        assert morans_i(adjacency(g, vo)) >= morans_i(
            adjacency(g, VertexOrdering.identity(g.n))
        ) - 1e-9
