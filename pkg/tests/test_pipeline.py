from __future__ import annotations

import time

import pytest

from equising.errors import IncompleteData, InvalidInput, NotSquareFree
from equising.newton import EdgeData, bezout_pair
from equising.pipeline import (
    NOT_PSEUDO_IRREDUCIBLE,
    PSEUDO_IRREDUCIBLE,
    analyze,
    ehat_chain,
    initial_state,
    invariants_from_data,
    monic_reduce,
    pseudo_irreducible,
    update_vl,
)
from equising.ring import QQ, PrimeField, TowerRing, UPoly, is_unit
from equising.series import YPoly

from conftest import EX1, EX2, EX3, alpha_ex1, alpha_ex2, cubic_ring, poly

R0 = TowerRing(QQ)
CUBIC = UPoly(R0, [0, -1, 0, 1])


def _ed(q, m, P, N):
    return EdgeData(q, m, P, N, *bezout_pair(q, m))


def _hbar(R, alpha, j):
    """``y^2 - alpha * x^j`` over ``R``."""
    return YPoly.from_terms(R, {(2, 0): R.one, (0, j): -alpha})


def test_update_vl_ex1():
    R1 = R0.extend(CUBIC)
    st = update_vl(initial_state(R0, 6), _ed(1, 1, CUBIC, 2), R1)
    z = R1.gen
    assert st.V == (1, 1, 3)
    assert st.Lambda == (R1.one, z, 3 * z ** 2 - 1)


def test_update_vl_ex3():
    R1 = R0.extend(CUBIC)
    st = update_vl(initial_state(R0, 6), _ed(1, 0, CUBIC, 2), R1)
    z = R1.gen
    assert st.V == (1, 0, 0)
    assert st.Lambda == (R1.one, z, 3 * z ** 2 - 1)


def test_update_vl_q_one_leaves_old_lambdas():
    R1 = R0.extend(UPoly(R0, [-2, 0, 1]))
    st = update_vl(initial_state(R0, 4), _ed(1, 1, UPoly(R0, [-2, 0, 1]), 2), R1)
    assert st.Lambda[0] == R1.one


def test_golden_ex1():
    t = time.perf_counter()
    rep, an, _, _ = analyze(poly(EX1))
    assert time.perf_counter() - t < 1.0
    R1 = cubic_ring()
    a = alpha_ex1(R1)
    d1, d2 = rep.data
    assert (d1.q, d1.m, d1.P, d1.N) == (1, 1, CUBIC, 2)
    assert (d2.q, d2.m, d2.P, d2.N) == (2, 1, UPoly(R1, [-a, 1]), 1)
    assert (rep.e, rep.f, rep.C, rep.Gamma) == (2, 3, (2, 3), (4, 4))
    assert rep.B == (2, 2, 3) and rep.M == (4, 6)
    assert rep.vF == 33
    assert an.boundaries[1] == _hbar(R1, a, 1)


def test_golden_ex2():
    rep, an, _, _ = analyze(poly(EX2))
    assert rep.verdict == NOT_PSEUDO_IRREDUCIBLE and rep.stage == 1
    R1 = cubic_ring()
    a = alpha_ex2(R1)
    assert not is_unit(a) and a
    assert an.boundaries[1] == _hbar(R1, a, 2)


def test_golden_ex3():
    rep, an, _, _ = analyze(poly(EX3))
    assert rep.verdict == PSEUDO_IRREDUCIBLE
    assert rep.data[0].m == 0
    assert (rep.C, rep.Gamma, rep.B, rep.M) == ((2, 3), (0, 0), (2, 0, 3), (0, 6))
    R1 = cubic_ring()
    assert an.boundaries[1] == _hbar(R1, alpha_ex1(R1), 3)


def test_cusp():
    rep, *_ = analyze(poly("y^2 - x^3"))
    (ed,) = rep.data
    assert (ed.q, ed.m, ed.P, ed.N) == (2, 3, UPoly(R0, [-1, 1]), 1)


def test_invariants_from_data():
    R1 = cubic_ring()
    data = [_ed(1, 1, CUBIC, 2), _ed(2, 1, UPoly(R1, [-alpha_ex1(R1), 1]), 1)]
    rep = invariants_from_data(data, 6)
    assert rep.B == (2, 2, 3) and rep.M == (4, 6) and rep.vF == 33
    rep = invariants_from_data([_ed(2, 3, UPoly(R0, [-1, 1]), 1)], 2)
    assert (rep.e, rep.f, rep.C, rep.Gamma) == (2, 1, (2, 3), ())
    with pytest.raises(IncompleteData):
        invariants_from_data([_ed(1, 1, CUBIC, 2)], 6)


def test_ehat_chain():
    rep, *_ = analyze(poly(EX1))
    assert ehat_chain(rep) == [2, 2, 1]


def test_monic_reduce():
    F = poly(EX1)
    G, tr = monic_reduce(F)
    assert G is F and tr.kind == "identity"
    G, tr = monic_reduce(poly("2*y + x"))
    assert tr.z == 1 and G.is_monic() and G.degree == 1
    G, tr = monic_reduce(poly("x*y^2 + y + 1"))
    assert tr.z == 0 and G.is_monic()


def test_non_monic_same_type():
    # (x y - 1)(y^2 - x^3) style inputs keep the verdict of the local factor
    rep, *_ = analyze(poly("(1 + x)*y^2 - x^3"))
    assert rep.is_pseudo_irreducible and rep.C == (2, 3)


def test_rejections():
    with pytest.raises(NotSquareFree):
        pseudo_irreducible(poly("(y - x)^2*(y + x)"))
    with pytest.raises(InvalidInput):
        analyze(poly("y^5 - x^2", PrimeField(5)))
    with pytest.raises(InvalidInput):
        analyze(poly("0"))


def test_prime_field_run():
    rep, *_ = analyze(poly(EX1, PrimeField(10007)))
    assert (rep.C, rep.Gamma, rep.vF) == ((2, 3), (4, 4), 33)
