import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan import bounds as bnd
from riordan import graph as gr
from riordan.corpus import poly_text
from riordan.errors import EmptyOrFullSubset, HypothesisNotMet, ZeroVector


def by_id(reports):
    return {r.bound_id: r for r in reports}


def test_report_slack_and_status():
    assert bnd.report("x", 2, ">=", 1).slack == 1
    assert bnd.report("x", 2, "<=", 1).status == "fail"
    assert bnd.report("x", 2, "<=", 1, tracked="finding").status == "finding"
    assert bnd.report("x", 1 - 5e-9, ">=", 1).holds
    assert bnd.report("x", 1, "=", 1.5).slack == -0.5
    s = bnd.skipped("x", ">=", "why")
    assert s.status == "skipped" and s.holds


def test_quotient_equality_k6():
    r = by_id(bnd.quotient_bounds(gr.family("complete", 6), [1, 3, 5]))
    assert abs(r["thm3.1.i"].rhs - 5) <= 1e-9 and abs(r["thm3.1.i"].lhs - 5) <= 1e-9
    assert abs(r["thm3.1.ii"].rhs - 6) <= 1e-9 and abs(r["thm3.1.ii"].lhs - 6) <= 1e-9
    with pytest.raises(EmptyOrFullSubset):
        bnd.quotient_bounds(gr.family("complete", 6), range(1, 7))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 14).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(0, 1), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2),
    st.sets(st.integers(1, n), min_size=1, max_size=n - 1))))
def test_quotient_matches_numpy_and_interlaces(data):
    n, bits, W = data
    A = np.zeros((n, n), dtype=np.uint8)
    A[np.triu_indices(n, 1)] = bits
    G = gr.Graph(A | A.T)
    k = len(W)
    idx = np.array(sorted(W)) - 1
    rest = np.setdiff1d(np.arange(n), idx)
    m1 = int(G.adj[np.ix_(idx, idx)].sum()) // 2
    m2 = int(G.adj[np.ix_(rest, rest)].sum()) // 2
    m3 = G.m - m1 - m2
    Q = np.array([[2 * m1 / k, m3 / k], [m3 / (n - k), 2 * m2 / (n - k)]])
    v = bnd.quotient_values(n, k, G.m, m1, m2)
    assert abs(max(np.linalg.eigvals(Q).real) - v["lam_hi"]) <= 1e-9
    for r in bnd.quotient_bounds(G, W):
        assert r.status in ("pass", "skipped"), r


def test_checkerboard_equality_k33():
    r = by_id(bnd.riordan_bounds(gr.family("complete_bipartite", 6)))
    assert abs(r["cor.checkerboard.i"].rhs - 3) <= 1e-9
    assert abs(r["cor.checkerboard.i"].lhs - 3) <= 1e-9
    assert r["cor.checkerboard.iii"].status == "pass"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 255), st.integers(0, 127), st.integers(2, 30))
def test_dual_routes(gb, fb, n):
    G = gr.from_expressions(poly_text(1 | gb << 1), poly_text(2 | fb << 2), n)
    m1, m2 = bnd.half_edge_counts(G)
    b = gr.decompose(G)
    assert (m1, m2) == (int(b.X.sum()) // 2, int(b.Y.sum()) // 2)
    assert bnd.sigma_b(G) == int(b.B.sum()) == G.m - m1 - m2


def test_dominance_and_cor39():
    for name in ("pascal", "catalan", "complete_bipartite", "path"):
        for n in (4, 9, 16, 31):
            r = by_id(bnd.riordan_bounds(gr.family(name, n)))
            assert r["prop3.4"].status == "pass" and r["prop3.5"].status == "pass"
    r = by_id(bnd.riordan_bounds(gr.family("pascal", 8)))
    cor = [x for k, x in r.items() if k.startswith("cor3.9") and x.hypothesis_met]
    assert cor and all(x.status == "pass" for x in cor)


def test_named_families_k3():
    r = by_id(bnd.named_family_bounds(3))
    assert abs(r["prop3.10.vi"].rhs - 4.5) <= 1e-12 and r["prop3.10.vi"].holds
    assert r["prop3.10.i"].holds
    assert abs(r["prop3.10.v"].rhs - (5 * 81 - 9) / 8) <= 1e-12
    assert r["prop3.10.v"].status in ("pass", "finding")
    assert all(x.tracked == "finding" for x in r.values())
    with pytest.raises(HypothesisNotMet):
        bnd.named_family_bounds(9)


def test_io_bounds_examples():
    r = by_id(bnd.io_bounds(gr.family("pascal", 16)))
    assert r["thm3.11.iii"].rhs == 4 and r["thm3.11.iii"].holds
    r = by_id(bnd.io_bounds(gr.family("catalan", 16)))
    assert r["thm3.11.i"].lhs == 40 and abs(r["thm3.11.i"].rhs - 102.4) <= 1e-9
    r = by_id(bnd.io_bounds(gr.family("catalan", 8)))
    assert r["thm3.11.vi"].rhs == 6 and r["thm3.11.vi"].holds
    with pytest.raises(HypothesisNotMet):
        bnd.io_bounds(gr.family("complete_bipartite", 8))


def test_thm312_counterexample_and_perturbation():
    r = by_id(bnd.io_bounds(gr.family("catalan", 4)))
    assert r["thm3.12"].status == "fail"
    assert r["thm3.12.perturbation"].status == "pass"


def test_laplacian_examples():
    r = by_id(bnd.laplacian_bounds(gr.family("pascal", 9)))
    assert abs(r["thm4.14"].lhs - 9) <= 1e-9 and r["thm4.14"].holds
    assert r["thm4.14.eq"].inputs["predicted_equality"] and r["thm4.14.eq"].holds
    r = by_id(bnd.laplacian_bounds(gr.family("catalan", 9)))
    assert r["thm4.17"].status == "pass"
    assert "a_H" in r["thm3.17.b"].inputs


def test_thm318b_odd_order_slip():
    r = by_id(bnd.laplacian_bounds(gr.family("path", 5)))
    assert r["thm3.18.b"].status == "fail"
    assert r["thm3.18.b.mirror"].status == "pass"


def test_rayleigh_examples():
    for n in (3, 6, 10):
        r = bnd.rayleigh_gf(gr.family("complete", n), [1] * n)
        assert abs(r.rhs - (n - 1)) <= 1e-12 and r.holds
        p = bnd.rayleigh_gf(gr.family("path", n), [1] * n)
        assert abs(p.rhs - 2 * (n - 1) / n) <= 1e-12 and p.holds
    assert bnd.rayleigh_gf(gr.family("path", 5), [1]).rhs == 0
    with pytest.raises(ZeroVector):
        bnd.rayleigh_gf(gr.family("path", 5), [0, 0])
    with pytest.raises(HypothesisNotMet):
        bnd.rayleigh_gf(gr.family("pascal", 5), [1])


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 20), st.lists(st.integers(-3, 3), min_size=1, max_size=20))
def test_rayleigh_equals_quadratic_form(n, h):
    h = (h + [0] * n)[:n]
    if not any(h):
        return
    G = gr.family("complete_bipartite", n)
    r = bnd.rayleigh_gf(G, h)
    x = np.array(h, dtype=float)
    assert abs(r.rhs - x @ G.adj @ x / (x @ x)) <= 1e-9


def test_lemma_checks_hold_on_families():
    for name in ("pascal", "catalan", "path", "complete"):
        for n in (3, 8, 17):
            for r in bnd.lemma_checks(gr.family(name, n)):
                assert r.status in ("pass", "skipped"), r
