import random
from itertools import product

import pytest

from pschatten.graphs import (
    Graph,
    GraphInputError,
    GraphParseError,
    TreeEnumerationCapError,
    ahu_code,
    enumerate_trees,
    format_edge_list,
    from_edge_list,
    is_bipartite,
    parse_edge_list,
    parse_graph6,
    path_graph,
    pruefer_from_tree,
    sample_trees,
    star_graph,
    tree_from_pruefer,
    write_graph6,
)

# Known counts of free trees on 2..10 vertices.
FREE_TREE_COUNTS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def reference_graph6(g: Graph) -> str:
    """Independent graph6 writer: builds the bit string directly."""
    assert g.n <= 62
    bits = ""
    for col in range(1, g.n):
        for row in range(col):
            bits += "1" if (row, col) in g.edges else "0"
    bits += "0" * (-len(bits) % 6)
    out = chr(g.n + 63)
    for i in range(0, len(bits), 6):
        out += chr(int(bits[i : i + 6], 2) + 63)
    return out


def random_graph(n: int, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def test_from_edge_list_k2():
    g = from_edge_list(2, [(0, 1)])
    assert g.n == 2 and g.m == 1


def test_from_edge_list_p4():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g == path_graph(4)


def test_from_edge_list_rejects_loop():
    with pytest.raises(GraphInputError, match="loop"):
        from_edge_list(3, [(0, 0)])


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(GraphInputError):
        from_edge_list(3, [(0, 3)])


def test_from_edge_list_dedupes():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def test_parse_graph6_k2():
    assert parse_graph6("A_") == from_edge_list(2, [(0, 1)])


def test_parse_graph6_known_roundtrip():
    g = parse_graph6("D?{")
    assert write_graph6(g) == "D?{"


def test_parse_graph6_header():
    assert parse_graph6(">>graph6<<A_") == from_edge_list(2, [(0, 1)])


def test_parse_graph6_empty():
    with pytest.raises(GraphParseError):
        parse_graph6("")


def test_parse_graph6_bad_byte_offset():
    with pytest.raises(GraphParseError) as err:
        parse_graph6("A" + chr(10))
    assert err.value.offset == 1


def test_parse_graph6_truncated():
    with pytest.raises(GraphParseError):
        parse_graph6("D?")


def test_parse_graph6_trailing():
    with pytest.raises(GraphParseError):
        parse_graph6("A_?")


def test_parse_graph6_nonzero_padding():
    # K_2 needs one data bit; the remaining five padding bits must be zero.
    with pytest.raises(GraphParseError, match="padding"):
        parse_graph6("A" + chr(63 + 0b100001))


def test_graph6_matches_reference_writer():
    rng = random.Random(7)
    for n in list(range(0, 12)) + [20, 30]:
        for _ in range(5):
            g = random_graph(n, rng)
            assert write_graph6(g) == reference_graph6(g)


def test_graph6_roundtrip_random():
    rng = random.Random(11)
    for n in range(0, 31, 3):
        for _ in range(10):
            g = random_graph(n, rng)
            assert parse_graph6(write_graph6(g)) == g


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------


def test_edge_list_roundtrip():
    g = path_graph(5)
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_bad_header():
    with pytest.raises(GraphParseError):
        parse_edge_list("4\n0 1\n")


def test_edge_list_wrong_count():
    with pytest.raises(GraphParseError):
        parse_edge_list("4 2\n0 1\n")


# ---------------------------------------------------------------------------
# bipartiteness
# ---------------------------------------------------------------------------


def test_bipartite_path():
    w = is_bipartite(path_graph(4))
    assert w.is_bipartite
    assert w.classes == {0: 0, 1: 1, 2: 0, 3: 1}


def test_bipartite_empty_graph():
    w = is_bipartite(Graph(5, frozenset()))
    assert w.classes == {v: 0 for v in range(5)}


def test_triangle_odd_cycle():
    w = is_bipartite(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))
    assert not w.is_bipartite
    cycle = w.odd_cycle
    assert len(cycle) == 3 and set(cycle) == {0, 1, 2}


def _check_witness(g: Graph, w) -> None:
    if w.is_bipartite:
        for u, v in g.edges:
            assert w.classes[u] != w.classes[v]
    else:
        cycle = w.odd_cycle
        assert len(cycle) % 2 == 1
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            key = (a, b) if a < b else (b, a)
            assert key in g.edges


def test_bipartite_witness_random():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng.randrange(1, 12), rng)
        _check_witness(g, is_bipartite(g))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def test_path_star_coincide_at_two():
    assert path_graph(2) == star_graph(2)


def test_star_degree_sequence():
    g = star_graph(4)
    degs = sorted(len(nb) for nb in g.adjacency())
    assert degs == [1, 1, 1, 3]


def test_path_edge_count():
    assert path_graph(5).m == 4


def test_generators_reject_zero():
    with pytest.raises(GraphInputError):
        path_graph(0)
    with pytest.raises(GraphInputError):
        star_graph(0)


# ---------------------------------------------------------------------------
# Pruefer sequences
# ---------------------------------------------------------------------------


def test_pruefer_base_case():
    assert tree_from_pruefer([]) == path_graph(2)


def test_pruefer_star():
    # decoding [0, 0]: leaves 1 then 2 attach to 0, then edge (0, 3) closes
    g = tree_from_pruefer([0, 0])
    assert g == star_graph(4)


def test_pruefer_path():
    # decoding [1, 2]: 0-1, then 1-2, then 2-3
    g = tree_from_pruefer([1, 2])
    assert g == path_graph(4)


def test_pruefer_out_of_range():
    with pytest.raises(GraphInputError):
        tree_from_pruefer([4])


def test_pruefer_roundtrip_exhaustive():
    for n in range(2, 9):
        for seq in product(range(n), repeat=n - 2):
            assert pruefer_from_tree(tree_from_pruefer(seq)) == list(seq)


def test_pruefer_encode_rejects_non_trees():
    with pytest.raises(GraphInputError):
        pruefer_from_tree(from_edge_list(3, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(GraphInputError):
        pruefer_from_tree(Graph(3, frozenset({(0, 1)})))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def test_enumerate_counts():
    for n, count in FREE_TREE_COUNTS.items():
        assert len(enumerate_trees(n)) == count


def test_enumerate_n4_is_path_and_star():
    codes = {ahu_code(t) for t in enumerate_trees(4)}
    assert codes == {ahu_code(path_graph(4)), ahu_code(star_graph(4))}


def test_enumerate_matches_pruefer_bruteforce():
    # oracle: decode every Pruefer sequence and deduplicate by canonical code
    for n in range(2, 8):
        oracle = {ahu_code(tree_from_pruefer(seq)) for seq in product(range(n), repeat=n - 2)}
        assert {ahu_code(t) for t in enumerate_trees(n)} == oracle


def test_enumerate_output_properties():
    for n in range(2, 11):
        trees = enumerate_trees(n)
        codes = [ahu_code(t) for t in trees]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)
        for t in trees:
            assert t.n == n and t.m == n - 1
            assert is_bipartite(t).is_bipartite
            pruefer_from_tree(t)  # implies connected


def test_enumerate_cap():
    with pytest.raises(TreeEnumerationCapError, match="sampling"):
        enumerate_trees(11)


def test_sample_trees_deterministic():
    a = sample_trees(12, 50, seed=7)
    b = sample_trees(12, 50, seed=7)
    assert a == b
    for t in a:
        assert t.n == 12 and t.m == 11


def test_ahu_invariant_under_relabeling():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randrange(2, 10)
        seq = [rng.randrange(n) for _ in range(n - 2)]
        t = tree_from_pruefer(seq)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = from_edge_list(n, [(perm[u], perm[v]) for u, v in t.edges])
        assert ahu_code(t) == ahu_code(relabeled)
