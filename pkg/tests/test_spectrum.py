import math
import random

import numpy as np
import pytest

from pschatten.charpoly import char_poly
from pschatten.graphs import from_edge_list, is_bipartite, path_graph, star_graph, tree_from_pruefer
from pschatten.spectrum import (
    Spectrum,
    eigenvalues,
    energy_from_spectrum,
    energy_spectral,
)


def random_graph(n, rng, density=0.4):
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    )


def numpy_eigenvalues(g):
    if g.n == 0:
        return []
    return sorted(np.linalg.eigvalsh(np.array(g.adjacency_matrix())), reverse=True)


def test_k2():
    spec = eigenvalues(path_graph(2))
    assert spec.eigenvalues == pytest.approx([1.0, -1.0], abs=1e-12)


def test_star_closed_form():
    spec = eigenvalues(star_graph(4))
    expected = [math.sqrt(3), 0.0, 0.0, -math.sqrt(3)]
    assert list(spec.eigenvalues) == pytest.approx(expected, abs=1e-12)


def test_path_closed_form():
    spec = eigenvalues(path_graph(5))
    expected = [2 * math.cos(k * math.pi / 6) for k in range(1, 6)]
    assert list(spec.eigenvalues) == pytest.approx(expected, abs=1e-12)


def test_vs_numpy_random():
    rng = random.Random(41)
    for _ in range(40):
        g = random_graph(rng.randrange(0, 26), rng)
        spec = eigenvalues(g)
        assert list(spec.eigenvalues) == pytest.approx(numpy_eigenvalues(g), abs=1e-10)


def test_spectrum_invariants_random():
    rng = random.Random(43)
    for _ in range(40):
        g = random_graph(rng.randrange(1, 26), rng)
        spec = eigenvalues(g, tol=1e-12)
        vals = spec.eigenvalues
        assert len(vals) == g.n
        assert list(vals) == sorted(vals, reverse=True)
        assert abs(sum(vals)) <= 1e-12 * max(g.n, 1) + 1e-9
        assert abs(sum(v * v for v in vals) - 2 * g.m) <= 1e-9


def test_bipartite_symmetry():
    rng = random.Random(47)
    for _ in range(40):
        n = rng.randrange(2, 12)
        t = tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])
        assert is_bipartite(t).is_bipartite
        vals = eigenvalues(t).eigenvalues
        for lam, mirrored in zip(vals, reversed(vals)):
            assert abs(lam + mirrored) <= 2e-12


def test_charpoly_small_at_eigenvalues():
    rng = random.Random(53)
    for _ in range(25):
        g = random_graph(rng.randrange(1, 15), rng)
        poly = char_poly(g)
        for lam in eigenvalues(g).eigenvalues:
            assert abs(poly.evaluate(lam)) <= 1e-6 * (1 + abs(lam)) ** g.n


def test_energy_examples():
    for p in (0.3, 1.0, 1.7, 2.0, 3.5):
        assert energy_spectral(path_graph(2), p) == pytest.approx(2.0, abs=1e-12)
    assert energy_spectral(star_graph(4), 1.0) == pytest.approx(2 * math.sqrt(3), abs=1e-10)
    assert energy_spectral(path_graph(4), 1.0) == pytest.approx(2 * math.sqrt(5), abs=1e-10)


def test_energy_p2_is_twice_edge_count():
    rng = random.Random(59)
    for _ in range(30):
        g = random_graph(rng.randrange(1, 26), rng)
        assert energy_spectral(g, 2.0) == pytest.approx(2.0 * g.m, abs=1e-9)


def test_energy_rejects_nonpositive_p():
    with pytest.raises(ValueError):
        energy_spectral(path_graph(3), 0.0)
    with pytest.raises(ValueError):
        energy_spectral(path_graph(3), -1.0)


def test_energy_isolated_vertex_invariance():
    g = path_graph(5)
    padded = g.with_isolated(2)
    for p in (0.25, 0.8, 1.0, 1.9, 4.0):
        assert energy_spectral(g, p) == pytest.approx(energy_spectral(padded, p), abs=1e-12)


def test_zero_clamp_protects_small_p():
    # a star has n-2 zero eigenvalues; solver noise must not leak into |.|^p
    e = energy_spectral(star_graph(12), 0.25)
    assert e == pytest.approx(2 * 11**0.125, abs=1e-10)


def test_energy_from_spectrum_matches():
    spec = eigenvalues(path_graph(7))
    for p in (0.5, 1.0, 1.5):
        assert energy_from_spectrum(spec, p, 1e-11) == pytest.approx(
            energy_spectral(path_graph(7), p), abs=1e-14
        )


def test_p_continuity_grid_refinement():
    for g in (path_graph(8), star_graph(8), tree_from_pruefer([0, 1, 1, 2, 3, 4])):
        vals = eigenvalues(g).eigenvalues
        step = 0.01
        grid = [0.5 + i * step for i in range(101)]
        energies = [energy_spectral(g, p) for p in grid]
        for p, e0, e1 in zip(grid, energies, energies[1:]):
            bound = 10 * step * sum(abs(v) ** p * math.log(1 + abs(v)) for v in vals)
            assert abs(e1 - e0) <= bound


def test_empty_graph():
    assert eigenvalues(from_edge_list(0, [])) == Spectrum((), 0.0)
    assert energy_spectral(from_edge_list(0, []), 1.0) == 0.0
