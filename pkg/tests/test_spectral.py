import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs_st, random_connected_graph, random_graph
from rainbow_decomp.generators import gen_complete, gen_complete_bipartite
from rainbow_decomp.graphs import build_graph
from rainbow_decomp.seeding import rng_from
from rainbow_decomp.spectral import (
    check_cheeger_inequality,
    cheeger_exact,
    jacobi_eigh,
    normalized_laplacian,
    spectrum,
)

TOL = 1e-9


def test_laplacian_k2():
    g = build_graph(2, [(0, 1, 0)])
    assert np.allclose(normalized_laplacian(g), [[1, -1], [-1, 1]])


def test_laplacian_isolated_vertices_zero():
    g = build_graph(2, [])
    assert np.array_equal(normalized_laplacian(g), np.zeros((2, 2)))


def test_laplacian_path3_entries():
    g = build_graph(3, [(0, 1, 0), (1, 2, 1)])
    lap = normalized_laplacian(g)
    assert np.allclose(np.diag(lap), [1, 1, 1])
    assert lap[0, 1] == pytest.approx(-1 / math.sqrt(2))
    assert lap[1, 2] == pytest.approx(-1 / math.sqrt(2))
    assert lap[0, 2] == 0
    assert np.allclose(lap, lap.T)


def test_jacobi_matches_reference_solver():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n = int(rng.integers(1, 16))
        a = rng.normal(size=(n, n))
        a = (a + a.T) / 2
        vals, vecs = jacobi_eigh(a)
        assert np.max(np.abs(vals - np.linalg.eigvalsh(a))) < 1e-10
        assert np.max(np.abs(a @ vecs - vecs * vals)) < 1e-10


def test_jacobi_rejects_nonsquare():
    with pytest.raises(ValueError):
        jacobi_eigh(np.zeros((2, 3)))


def test_spectrum_k33_lambda1_is_one():
    assert spectrum(gen_complete_bipartite(3, 3)).lambda1 == pytest.approx(1.0, abs=TOL)


def test_spectrum_disconnected_lambda1_zero():
    g = build_graph(4, [(0, 1, 0), (2, 3, 1)])
    assert spectrum(g).lambda1 == pytest.approx(0.0, abs=TOL)


def test_spectrum_k4_lambda1():
    g = gen_complete(4)
    assert spectrum(g).lambda1 == pytest.approx(4 / 3, abs=TOL)
    ref = np.linalg.eigvalsh(normalized_laplacian(g))
    assert spectrum(g).eigenvalues == pytest.approx(tuple(ref), abs=TOL)


@pytest.mark.parametrize("n", range(3, 13))
def test_complete_graph_lambda1_closed_form(n):
    summ = spectrum(gen_complete(n))
    assert summ.lambda1 == pytest.approx(n / (n - 1), abs=TOL)
    ref = np.linalg.eigvalsh(normalized_laplacian(gen_complete(n)))
    assert summ.lambda1 == pytest.approx(float(ref[1]), abs=TOL)


def test_spectrum_invariants_random_graphs():
    rng = rng_from(77)
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(2, 12)))
        summ = spectrum(g)
        vals = summ.eigenvalues
        assert len(vals) == g.n
        assert list(vals) == sorted(vals)
        assert vals[0] >= -TOL
        assert vals[0] <= TOL
        assert vals[-1] <= 2 + TOL
        non_isolated = sum(1 for d in g.degree_sequence if d > 0)
        assert sum(vals) == pytest.approx(non_isolated, abs=1e-8)


def test_sqrt_degree_vector_is_null_eigenvector():
    rng = rng_from(78)
    for _ in range(15):
        g = random_connected_graph(rng, int(rng.integers(2, 12)))
        lap = normalized_laplacian(g)
        vec = np.sqrt(np.array(g.degree_sequence, dtype=float))
        assert np.linalg.norm(lap @ vec) <= 1e-9 * max(1.0, np.linalg.norm(vec))


@settings(max_examples=30)
@given(graphs_st(min_n=2, max_n=7), st.data())
def test_spectrum_invariant_under_relabeling(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    relabeled = build_graph(g.n, [(perm[u], perm[v], c) for u, v, c in g.edges])
    a = spectrum(g).eigenvalues
    b = spectrum(relabeled).eigenvalues
    assert a == pytest.approx(b, abs=1e-9)


def test_cheeger_k2():
    cert = cheeger_exact(build_graph(2, [(0, 1, 0)]))
    assert cert.h == pytest.approx(1.0)
    assert cert.witness == frozenset({0})


def test_cheeger_k4():
    cert = cheeger_exact(gen_complete(4))
    assert cert.h == pytest.approx(2 / 3)
    assert len(cert.witness) == 2


def test_cheeger_path4():
    g = build_graph(4, [(0, 1, 0), (1, 2, 1), (2, 3, 2)])
    assert cheeger_exact(g).h == pytest.approx(1 / 3)


def test_cheeger_rejects_disconnected_and_large():
    with pytest.raises(ValueError, match="connected"):
        cheeger_exact(build_graph(4, [(0, 1, 0), (2, 3, 1)]))
    with pytest.raises(ValueError, match="cap"):
        cheeger_exact(gen_complete(21))
    with pytest.raises(ValueError):
        cheeger_exact(build_graph(1, []))


def test_cheeger_deterministic_witness():
    g = gen_complete(5)
    first = cheeger_exact(g)
    second = cheeger_exact(g)
    assert first.witness == second.witness


def test_cheeger_inequality_k4_values():
    report = check_cheeger_inequality(gen_complete(4))
    assert report.h == pytest.approx(2 / 3)
    assert report.lambda1 == pytest.approx(4 / 3, abs=TOL)
    assert report.lower == pytest.approx(2 / 9)
    assert report.upper == pytest.approx(4 / 3)
    assert report.holds


def test_cheeger_inequality_k2_and_cycle():
    rep = check_cheeger_inequality(build_graph(2, [(0, 1, 0)]))
    assert (rep.h, rep.lambda1) == (pytest.approx(1.0), pytest.approx(2.0, abs=TOL))
    assert rep.holds

    c6 = build_graph(6, [(i, (i + 1) % 6, i) for i in range(5)] + [(0, 5, 5)])
    assert check_cheeger_inequality(c6).holds


def test_cheeger_inequality_random_connected():
    rng = rng_from(79)
    for _ in range(30):
        g = random_connected_graph(rng, int(rng.integers(2, 11)))
        assert check_cheeger_inequality(g).holds
