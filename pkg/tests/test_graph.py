import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan import fps
from riordan import graph as gr
from riordan.errors import HypothesisNotMet, NonzeroLowTerm, SizeCapExceeded, UnknownFamily
from riordan.fps import Gf2Series

from oracles import (
    catalan_mod2,
    chromatic_number,
    clique_number,
    diameter_fw,
    lucas_binom_mod2,
    riordan_adjacency,
)

CG6 = np.array([
    [0, 1, 1, 0, 1, 0],
    [1, 0, 1, 0, 1, 0],
    [1, 1, 0, 1, 1, 1],
    [0, 0, 1, 0, 1, 0],
    [1, 1, 1, 1, 0, 1],
    [0, 0, 1, 0, 1, 0],
])


def _series(bits, t):
    return Gf2Series(bits, t)


pairs = st.tuples(
    st.integers(0, 255).map(lambda b: 1 | (b << 1)),
    st.integers(0, 127).map(lambda b: 2 | (b << 2)),
    st.integers(1, 24),
)


def test_binary_riordan_pascal_is_lucas():
    t = 12
    M = gr.binary_riordan(fps.inverse(Gf2Series(3, t)), fps.mul(Gf2Series.z(t), fps.inverse(Gf2Series(3, t))), 12, 12)
    want = np.array([[lucas_binom_mod2(i, j) for j in range(12)] for i in range(12)])
    assert np.array_equal(M.entries, want)
    assert M.entries[:4, :4].tolist() == [[1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 1, 1, 1]]


def test_binary_riordan_small_cases():
    assert not gr.binary_riordan(Gf2Series(0, 5), Gf2Series.z(5), 3, 3).entries.any()
    C = fps.catalan(8)
    M = gr.binary_riordan(C, fps.mul(Gf2Series.z(8), C), 5, 5)
    assert M.entries[:, 0].tolist() == [1, 1, 0, 1, 0]
    assert not np.triu(M.entries, 1).any()
    with pytest.raises(NonzeroLowTerm):
        gr.binary_riordan(C, C, 3, 3)


def test_catalan_fixture():
    assert np.array_equal(gr.family("catalan", 6).adj, CG6)


def test_named_families():
    assert np.array_equal(gr.family("complete", 7).adj, 1 - np.eye(7, dtype=np.uint8))
    assert gr.family("null", 5).m == 0
    assert gr.family("path", 5).edges() == [(1, 2), (2, 3), (3, 4), (4, 5)]
    kb = gr.family("complete_bipartite", 6)
    assert kb.m == 9 and all((u - v) % 2 for u, v in kb.edges())
    with pytest.raises(UnknownFamily):
        gr.family("petersen", 5)


@pytest.mark.parametrize("k", range(1, 7))
def test_edge_counts(k):
    assert gr.family("pascal", 2 ** k).m == 3 ** k - 2 ** k
    assert gr.family("pascal", 2 ** k + 1).m == 3 ** k
    assert gr.family("catalan", 2 ** k).m == (3 ** k - 1) // 2
    assert gr.family("catalan", 2 ** k + 1).m == (3 ** k - 1) // 2 + 2 ** k


@settings(max_examples=60, deadline=None)
@given(pairs)
def test_adjacency_matches_definition(p):
    gb, fb, n = p
    t = n + 2
    g, f = _series(gb, t), _series(fb, t)
    G = gr.build_graph(g, f, n)
    assert np.array_equal(G.adj, riordan_adjacency(g.coeffs(), f.coeffs(), n))
    if n >= 3:
        assert int(G.adj[n - 1, 1]) == gr.eq2_entry(g, f, n, 2)


def test_catalan_adjacency_oracle():
    n = 20
    C = catalan_mod2(n + 2)
    A = riordan_adjacency(C, [0] + C, n)
    assert np.array_equal(gr.family("catalan", n).adj, A)


@settings(max_examples=60, deadline=None)
@given(pairs)
def test_decomposition_routes_agree(p):
    gb, fb, n = p
    G = gr.from_expressions(_text(gb), _text(fb), n)
    blocks = gr.decompose(G)
    assert np.array_equal(blocks.reassemble(), G.adj)
    odd = list(range(0, n, 2))
    assert np.array_equal(blocks.X, G.adj[np.ix_(odd, odd)])


def _text(bits):
    from riordan.corpus import poly_text
    return poly_text(bits)


def test_decompose_examples():
    pg8 = gr.family("pascal", 8)
    b = gr.decompose(pg8)
    assert not b.Y.any()  # Bell type
    assert np.array_equal(b.X, gr.family("pascal", 4).adj)
    assert not gr.decompose(gr.family("catalan", 8)).Y.any()
    b2 = gr.decompose(gr.family("path", 2))
    assert b2.X.tolist() == [[0]] and b2.Y.tolist() == [[0]] and b2.B.tolist() == [[1]]
    # the even part of a non-Bell graph is again a Riordan graph
    G = gr.from_expressions("1+z^3", "z/(1+z)", 16)
    g, f = G.g, G.f
    gf_over_z = fps.mul(g, f).shift_down(1)
    Y = gr.build_graph(fps.odd_part(gf_over_z), f, 8).adj
    assert np.array_equal(gr.decompose(G).Y, Y)


def test_classify_examples():
    for n in (5, 8, 13):
        assert {"bell", "proper", "o_decomposable", "io_decomposable"} <= gr.classify(gr.family("pascal", n))
        assert {"bell", "io_decomposable"} <= gr.classify(gr.family("catalan", n))
    assert {"appell", "checkerboard", "e_decomposable"} <= gr.classify(gr.family("complete_bipartite", 8))
    assert "io_decomposable" not in gr.classify(gr.from_expressions("1+z", "z*(1+z)", 8))


def test_degrees_and_universal_vertices():
    pg9 = gr.family("pascal", 9)
    assert [int(pg9.degrees()[v - 1]) for v in (1, 5, 9)] == [8, 8, 8]
    assert gr.universal_vertices(pg9) == [1, 5, 9]
    assert gr.universal_vertices(gr.family("pascal", 12)) == [1, 9]
    assert int(gr.family("catalan", 6).degrees()[4]) == 5
    assert not gr.family("null", 7).degrees().any()


def test_partition():
    parts = gr.partition_moj(gr.family("pascal", 8))
    assert len(parts) == 4 and parts[-1] == frozenset({1})
    with pytest.raises(HypothesisNotMet):
        gr.partition_moj(gr.family("complete_bipartite", 8))


@pytest.mark.parametrize("n", range(2, 11))
def test_clique_chromatic_against_brute_force(n):
    for name in ("pascal", "catalan"):
        G = gr.family(name, n)
        A = G.adj.tolist()
        assert gr.clique_and_chromatic(G) == (clique_number(A), chromatic_number(A))


def test_clique_chromatic_examples():
    assert gr.clique_and_chromatic(gr.family("catalan", 16)) == (5, 5)
    assert gr.clique_and_chromatic(gr.family("complete", 5)) == (5, 5)
    assert gr.clique_and_chromatic(gr.family("pascal", 6)) == (4, 4)
    with pytest.raises(SizeCapExceeded):
        gr.clique_and_chromatic(gr.family("path", 70))


def test_bipartite_double():
    H = gr.bipartite_double(gr.family("complete", 4))
    assert H.edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]
    assert gr.bipartite_double(gr.family("null", 5)).m == 0
    # odd-even pairs of the CG6 fixture
    assert gr.bipartite_double(gr.family("catalan", 6)).edges() == [(1, 2), (2, 3), (2, 5), (3, 4), (3, 6), (4, 5), (5, 6)]


def test_diameter_and_neighbourhoods():
    assert gr.diameter(gr.family("pascal", 8)) == 2
    assert gr.diameter(gr.family("path", 5)) == 4
    assert gr.diameter(gr.family("null", 3)) == float("inf")
    cg6 = gr.family("catalan", 6)
    assert gr.neighborhoods(cg6, 1) - {2} == {3, 5} == gr.neighborhoods(cg6, 2) - {1}
    for n in (4, 9, 17, 30):
        for name in ("pascal", "catalan"):
            G = gr.family(name, n)
            assert gr.diameter(G) == diameter_fw(G.adj)


def test_exports_roundtrip():
    G = gr.family("catalan", 6)
    assert gr.from_text(gr.to_text(G)) == G
    assert gr.to_text(gr.family("null", 3)) == "3\n0 0 0\n0 0 0\n0 0 0\n"
    assert gr.to_csv(gr.family("pascal", 8)).count("\n") == 19
    dot = gr.to_dot(G, "catalan")
    assert dot.startswith("graph catalan {") and "  1 -- 2;" in dot


def test_graph_is_immutable():
    G = gr.family("path", 3)
    with pytest.raises(ValueError):
        G.adj[0, 1] = 0
