import numpy as np
import pytest

from rainbow_decomp.generators import (
    WeightSequence,
    color_one_factorization,
    color_rainbow,
    color_random_bounded,
    gen_chung_lu,
    gen_complete,
    gen_complete_bipartite,
    gen_random_regular,
)
from rainbow_decomp.graphs import degrees, is_connected
from rainbow_decomp.spectral import spectrum


class TestComplete:
    def test_edge_counts(self):
        assert gen_complete(4).num_edges == 6
        assert gen_complete(1).num_edges == 0

    def test_min_degree(self):
        assert degrees(gen_complete(7)).delta == 6

    def test_rainbow_by_default(self):
        g = gen_complete(5)
        assert g.s == g.num_edges


class TestBipartite:
    def test_k33(self):
        g = gen_complete_bipartite(3, 3)
        assert g.num_edges == 9
        assert degrees(g).delta == 3
        assert spectrum(g).lambda1 == pytest.approx(1.0, abs=1e-9)

    def test_star(self):
        g = gen_complete_bipartite(1, 5)
        assert g.num_edges == 5
        assert degrees(g).degrees[0] == 5

    def test_bipartition_respected(self):
        g = gen_complete_bipartite(2, 3)
        for u, v, _ in g.edges:
            assert u < 2 <= v

    def test_validation(self):
        with pytest.raises(ValueError):
            gen_complete_bipartite(0, 3)


class TestRandomRegular:
    def test_degrees_exact(self):
        g = gen_random_regular(8, 3, seed=0)
        assert set(degrees(g).degrees) == {3}
        assert g.num_edges == 12

    def test_odd_product_rejected(self):
        with pytest.raises(ValueError):
            gen_random_regular(5, 3, seed=0)

    def test_d_bounds(self):
        with pytest.raises(ValueError):
            gen_random_regular(4, 4, seed=0)
        assert gen_random_regular(4, 0, seed=0).num_edges == 0

    def test_seeded_determinism(self):
        a = gen_random_regular(12, 4, seed=9)
        b = gen_random_regular(12, 4, seed=9)
        assert a == b

    def test_moderate_degree_feasible(self):
        # stub re-pairing must cope where naive full restarts cannot
        g = gen_random_regular(60, 10, seed=3)
        assert set(degrees(g).degrees) == {10}

    def test_spectral_gap_recorded(self):
        lam1s = [spectrum(gen_random_regular(24, 6, seed=s)).lambda1 for s in range(3)]
        for lam in lam1s:
            assert 0.0 < lam <= 2.0


class TestChungLu:
    def test_constant_weights_recover_gnp(self):
        # w = (np, ..., np) gives pair probability exactly p
        n, p = 10, 0.4
        ws = WeightSequence(tuple([n * p] * n))
        assert ws.w[0] * ws.w[1] * ws.rho == pytest.approx(p)

    def test_weight_validation(self):
        with pytest.raises(ValueError):
            WeightSequence((10.0, 10.0))
        with pytest.raises(ValueError):
            WeightSequence((1.0, -2.0))
        with pytest.raises(ValueError):
            WeightSequence(())

    def test_no_loops_and_valid(self):
        g = gen_chung_lu([3.0] * 12, seed=4)
        for u, v, _ in g.edges:
            assert u != v

    def test_seeded_determinism(self):
        assert gen_chung_lu([2.0] * 8, seed=5) == gen_chung_lu([2.0] * 8, seed=5)

    def test_degree_concentration_loopless(self):
        # loops are never sampled, so E[deg i] = w_i - w_i^2 * rho exactly;
        # check the empirical mean within 3 sigma at a fixed seed
        w = [2.0] * 6
        ws = WeightSequence(tuple(w))
        samples = 10_000
        totals = np.zeros(6)
        sq = np.zeros(6)
        for s in range(samples):
            g = gen_chung_lu(ws, seed=s)
            degs = np.array(g.degree_sequence, dtype=float)
            totals += degs
            sq += degs * degs
        mean = totals / samples
        var = sq / samples - mean * mean
        sigma = np.sqrt(var / samples)
        expected = np.array([wi - wi * wi * ws.rho for wi in w])
        assert np.all(np.abs(mean - expected) <= 3 * sigma + 1e-12)


class TestOneFactorization:
    @pytest.mark.parametrize("n,classes,size", [(4, 3, 2), (8, 7, 4)])
    def test_class_structure(self, n, classes, size):
        g = color_one_factorization(gen_complete(n))
        assert g.s == classes
        assert set(g.color_class_sizes()) == {size}

    def test_proper(self):
        g = color_one_factorization(gen_complete(10))
        for v in range(g.n):
            seen = [c for u, w, c in g.edges if v in (u, w)]
            assert len(seen) == len(set(seen))

    def test_each_class_is_perfect_matching(self):
        g = color_one_factorization(gen_complete(8))
        for cls in g.color_classes():
            touched = [x for i in cls for x in g.edges[i][:2]]
            assert sorted(touched) == list(range(8))

    def test_validation(self):
        with pytest.raises(ValueError):
            color_one_factorization(gen_complete(5))
        incomplete = gen_complete_bipartite(2, 2)
        with pytest.raises(ValueError):
            color_one_factorization(incomplete)


class TestBoundedColoring:
    def test_cap_one_is_rainbow(self):
        base = gen_complete(5)
        g = color_random_bounded(base, 1, base.num_edges, seed=1)
        assert g.s == g.num_edges

    def test_single_color_is_monochromatic(self):
        base = gen_complete(5)
        g = color_random_bounded(base, base.num_edges, 1, seed=1)
        assert g.s == 1

    def test_class_sizes_respect_cap(self):
        base = gen_complete(7)
        for seed in range(5):
            g = color_random_bounded(base, 4, 8, seed=seed)
            assert max(g.color_class_sizes()) <= 4

    def test_capacity_validation(self):
        with pytest.raises(ValueError):
            color_random_bounded(gen_complete(5), 2, 4, seed=0)


def test_color_rainbow_recolors_anything():
    g = color_one_factorization(gen_complete(6))
    r = color_rainbow(g)
    assert r.s == r.num_edges
    assert {(u, v) for u, v, _ in r.edges} == {(u, v) for u, v, _ in g.edges}


def test_all_generators_pass_graph_validation():
    for g in [
        gen_complete(6),
        gen_complete_bipartite(3, 4),
        gen_random_regular(10, 4, seed=2),
        gen_chung_lu([2.5] * 9, seed=2),
    ]:
        assert g.n >= 1
        assert sum(g.degree_sequence) == 2 * g.num_edges


def test_regular_graphs_usually_connected_at_moderate_degree():
    connected = sum(
        is_connected(gen_random_regular(16, 4, seed=s)) for s in range(5)
    )
    assert connected >= 4
