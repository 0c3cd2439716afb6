from __future__ import annotations

from math import gcd

from hypothesis import given, settings, strategies as st

from equising.newton import (
    EdgeData,
    bezout_pair,
    boundary_poly,
    newton_polygon,
    pseudo_degeneracy_test,
    taylor_shift,
)
from equising.ring import QQ, TowerRing, UPoly
from equising.series import XPoly

from conftest import EX3, poly

R0 = TowerRing(QQ)

# the five pseudo-degeneracy examples: (F, d, expected edge data or None)
MICRO = [
    ("(y^2-x^2)^2*(y-x^2)*(y-x^3)", 6, (1, 1, [0, -1, 0, 1], 2)),
    ("(y^2-x^2)^2*(y-x^2)", 5, None),
    ("(y^2-x^3)^2*(y-x^4)", 5, None),
    ("(y^2-x^3)^2*(y-x^4)^2", 6, None),
    ("(y^2-x^3)^2*(y^2-x^4)^2", 8, None),
]


def test_polygon_three_edges():
    P = newton_polygon(poly(MICRO[0][0]))
    assert len(P.edges()) == 3
    assert P.lower_edge[:2] == (1, 1)


def test_polygon_single_point():
    P = newton_polygon(poly("y^4"))
    assert P.vertices == ((4, 0),)
    assert P.lower_edge[:2] == (1, 0)


def test_polygon_lower_slope_two_three():
    assert newton_polygon(poly(MICRO[2][0])).lower_edge[:2] == (2, 3)


def test_boundary_poly_examples():
    assert boundary_poly(poly(MICRO[0][0])) == poly("(y^3 - x^2*y)^2")
    assert boundary_poly(poly(MICRO[1][0])) == poly("y*(y^2 - x^2)^2")
    assert boundary_poly(poly("y^5")) == poly("y^5")


def test_boundary_poly_idempotent():
    for text, _, _ in MICRO:
        B = boundary_poly(poly(text))
        assert boundary_poly(B) == B
        assert newton_polygon(B).lower_edge == newton_polygon(poly(text)).lower_edge


def test_micro_examples():
    for text, d, want in MICRO:
        ed = pseudo_degeneracy_test(boundary_poly(poly(text)), d)
        if want is None:
            assert ed is None, text
        else:
            q, m, P, N = want
            assert (ed.q, ed.m, ed.P, ed.N) == (q, m, UPoly(R0, P), N)


def test_fourth_micro_example_boundary():
    # the boundary is a power of a square-free polynomial, Q is not
    F = poly(MICRO[3][0])
    assert boundary_poly(F) == poly("y^2*(y^2 - x^3)^2")
    # the polygon has a second edge from (2, 6) to (0, 8)
    assert not newton_polygon(F).is_straight


def test_straight_when_q_gt_one():
    F = poly("y^4 - 2*x^3*y^2 + x^6 - x^7")
    ed = pseudo_degeneracy_test(boundary_poly(F), 4)
    assert (ed.q, ed.N) == (2, 2) and newton_polygon(F).is_straight
    ed = pseudo_degeneracy_test(boundary_poly(poly("y^2 - x^3")), 2)
    assert (ed.q, ed.m, ed.N) == (2, 3, 1) and ed.P == UPoly(R0, [-1, 1])
    assert newton_polygon(poly("y^2 - x^3")).is_straight


def test_q_one_allows_zero_divisor_constant():
    ed = pseudo_degeneracy_test(poly("y^3 - x^2*y"), 3)
    assert ed is not None and ed.P == UPoly(R0, [0, -1, 0, 1])


def test_taylor_shift_examples():
    F = poly("y^2 - x^3")
    assert taylor_shift(F, XPoly.zero(R0)) == F
    assert taylor_shift(F, XPoly.monomial(R0, 2)) == poly("y^2 + 2*x^2*y + x^4 - x^3")
    G = poly(EX3)
    H = taylor_shift(G, G[5] * (-1 / QQ(6)))
    assert not H[5]


def test_bezout_pair():
    for q in range(1, 9):
        for m in range(0, 12):
            if gcd(q, m) != 1:
                continue
            s, t = bezout_pair(q, m)
            assert s * q - t * m == 1 and 0 <= t < q


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([(1, 1), (2, 3), (3, 2), (1, 2), (2, 1), (3, 4)]),
    st.lists(st.integers(-3, 3), min_size=0, max_size=2),
    st.integers(1, 2),
)
def test_reconstruction(qm, low, N):
    q, m = qm
    # P(0) must be a unit when q > 1
    low = [c or 1 for c in low] if q > 1 else low
    P = UPoly(R0, low + [1])
    ed0 = EdgeData(q, m, P, N, *bezout_pair(q, m))
    Fbar = ed0.reconstruct()
    d = Fbar.degree
    ed = pseudo_degeneracy_test(Fbar, d)
    if ed is not None:
        assert ed.reconstruct() == Fbar
        assert ed.N * ed.q * ed.ell == d
        if ed.q > 1:
            assert newton_polygon(Fbar).is_straight
