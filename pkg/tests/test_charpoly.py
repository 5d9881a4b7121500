import random
from itertools import combinations, permutations

import pytest

from pschatten.charpoly import (
    BCoeffs,
    BipartitePatternError,
    CharPoly,
    QuasiOrderResult,
    b_coefficients,
    char_poly,
    matching_count,
    matching_counts,
    quasi_compare,
)
from pschatten.graphs import (
    enumerate_trees,
    from_edge_list,
    path_graph,
    star_graph,
    tree_from_pruefer,
)

K3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])


def _parity(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def brute_force_char_poly(g) -> tuple[int, ...]:
    """det(xI - A) by direct expansion over all permutations (oracle, n <= 8)."""
    n = g.n
    adj = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = 1
    coeffs = [0] * (n + 1)
    for perm in permutations(range(n)):
        moved = [i for i in range(n) if perm[i] != i]
        if any(adj[i][perm[i]] == 0 for i in moved):
            continue
        fixed = n - len(moved)
        # each off-diagonal factor is -A[i][perm[i]] = -1
        coeffs[n - fixed] += _parity(perm) * (-1) ** len(moved)
    return tuple(coeffs)


def brute_force_matchings(g, k: int) -> int:
    edges = sorted(g.edges)
    count = 0
    for subset in combinations(edges, k):
        verts = [x for e in subset for x in e]
        if len(set(verts)) == len(verts):
            count += 1
    return count


def random_graph(n, rng, density=0.4):
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    )


# ---------------------------------------------------------------------------
# char_poly
# ---------------------------------------------------------------------------


def test_char_poly_k2():
    assert char_poly(path_graph(2)).coeffs == (1, 0, -1)


def test_char_poly_p3():
    assert char_poly(path_graph(3)).coeffs == (1, 0, -2, 0)


def test_char_poly_p4():
    assert char_poly(path_graph(4)).coeffs == (1, 0, -3, 0, 1)


def test_char_poly_triangle():
    assert char_poly(K3).coeffs == (1, 0, -3, -2)


def test_char_poly_empty_and_single():
    assert char_poly(from_edge_list(0, [])).coeffs == (1,)
    assert char_poly(from_edge_list(1, [])).coeffs == (1, 0)


def test_char_poly_vs_bruteforce_trees():
    for n in range(2, 8):
        for t in enumerate_trees(n):
            assert char_poly(t).coeffs == brute_force_char_poly(t)


def test_char_poly_vs_bruteforce_random():
    rng = random.Random(13)
    for _ in range(40):
        g = random_graph(rng.randrange(1, 8), rng)
        assert char_poly(g).coeffs == brute_force_char_poly(g)


def test_char_poly_forest_recursion_matches_faddeev_leverrier():
    # both internal routes must agree on forests
    from pschatten.charpoly import _faddeev_leverrier, _forest_poly

    rng = random.Random(17)
    for _ in range(30):
        n = rng.randrange(2, 11)
        t = tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])
        assert tuple(_forest_poly(t)) == tuple(_faddeev_leverrier(t))


def test_char_poly_basic_identities_random():
    rng = random.Random(19)
    for _ in range(30):
        g = random_graph(rng.randrange(1, 26), rng, density=0.2)
        c = char_poly(g).coeffs
        assert c[0] == 1
        if g.n >= 1:
            assert c[1] == 0
        if g.n >= 2:
            assert -c[2] == g.m


def test_char_poly_json_roundtrip():
    p = char_poly(path_graph(6))
    q = CharPoly.from_json(p.to_json())
    assert q == p
    assert p.to_json().startswith("[\"1\"")


# ---------------------------------------------------------------------------
# b-coefficients
# ---------------------------------------------------------------------------


def test_b_coefficients_p4():
    assert b_coefficients(char_poly(path_graph(4))).b == (1, 3, 1)


def test_b_coefficients_s4():
    assert b_coefficients(char_poly(star_graph(4))).b == (1, 3, 0)


def test_b_coefficients_rejects_triangle():
    with pytest.raises(BipartitePatternError):
        b_coefficients(char_poly(K3))


def test_b_coefficients_rejects_bad_sign():
    # x^4 + 3x^2 + 1 is not of bipartite shape (c_2 must be <= 0)
    with pytest.raises(BipartitePatternError):
        b_coefficients(CharPoly((1, 0, 3, 0, 1)))


def test_b_coefficients_odd_order():
    assert b_coefficients(char_poly(path_graph(3))).b == (1, 2)


# ---------------------------------------------------------------------------
# matchings
# ---------------------------------------------------------------------------


def test_matching_count_examples():
    assert matching_count(path_graph(4), 2) == 1
    assert matching_count(star_graph(5), 2) == 0
    assert matching_count(star_graph(5), 0) == 1
    assert matching_count(K3, 0) == 1
    assert matching_count(K3, 1) == 3
    assert matching_count(K3, 2) == 0


def test_matching_counts_vs_bruteforce():
    rng = random.Random(23)
    for _ in range(30):
        g = random_graph(rng.randrange(1, 9), rng)
        counts = matching_counts(g)
        for k in range(0, g.m + 2):
            expected = brute_force_matchings(g, k) if k <= g.m else 0
            got = counts[k] if k < len(counts) else 0
            assert got == expected


def test_matching_counts_forest_dp_vs_bruteforce():
    rng = random.Random(29)
    for _ in range(30):
        n = rng.randrange(2, 12)
        t = tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])
        counts = matching_counts(t)
        for k in range(len(counts)):
            assert counts[k] == brute_force_matchings(t, k)


def test_matching_count_large_general_graph_rejected():
    rng = random.Random(31)
    g = random_graph(10, rng, density=0.8)
    assert g.m > 20
    with pytest.raises(ValueError, match="oracle"):
        matching_count(g, 2)


def test_matching_identity_with_b_coefficients():
    # for forests, b_k equals the number of k-matchings (Sachs expansion)
    for n in range(2, 11):
        for t in enumerate_trees(n):
            b = b_coefficients(char_poly(t)).b
            counts = matching_counts(t)
            for k, bk in enumerate(b):
                mk = counts[k] if k < len(counts) else 0
                assert bk == mk


# ---------------------------------------------------------------------------
# quasi-order
# ---------------------------------------------------------------------------


def _bc(vals, n):
    return BCoeffs(tuple(vals), n)


def test_quasi_compare_examples():
    assert quasi_compare(_bc([1, 3, 0], 4), _bc([1, 3, 1], 4)) is QuasiOrderResult.LESS
    assert quasi_compare(_bc([1, 3, 1], 4), _bc([1, 3, 1], 4)) is QuasiOrderResult.EQUAL
    assert quasi_compare(_bc([1, 4, 0], 4), _bc([1, 3, 1], 4)) is QuasiOrderResult.INCOMPARABLE
    assert quasi_compare(_bc([1, 3, 1], 4), _bc([1, 3, 0], 4)) is QuasiOrderResult.GREATER


def test_quasi_compare_rejects_mismatched_order():
    with pytest.raises(ValueError, match="vertex counts"):
        quasi_compare(_bc([1, 1], 2), _bc([1, 3, 1], 4))


def test_quasi_compare_partial_order_properties():
    rng = random.Random(37)
    vectors = [_bc([1] + [rng.randrange(4) for _ in range(3)], 6) for _ in range(40)]
    less = QuasiOrderResult.LESS
    greater = QuasiOrderResult.GREATER
    equal = QuasiOrderResult.EQUAL
    for a in vectors:
        assert quasi_compare(a, a) is equal
    for a in vectors:
        for b in vectors:
            r = quasi_compare(a, b)
            opposite = quasi_compare(b, a)
            if r is less:
                assert opposite is greater
            elif r is greater:
                assert opposite is less
            else:
                assert opposite is r
    # transitivity: the up-set of anything above i is contained in i's up-set
    up = {
        i: {j for j, b in enumerate(vectors) if quasi_compare(vectors[i], b) in (less, equal)}
        for i in range(len(vectors))
    }
    for i in range(len(vectors)):
        for j in up[i]:
            assert up[j] <= up[i]
