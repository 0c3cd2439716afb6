from __future__ import annotations

import pytest

from equising.errors import CommonFactor, InvalidPrefix, NotPrimitive, NotSquareFree
from equising.newton import boundary_poly
from equising.oracle import (
    BranchSpec,
    branch_oracle,
    branch_to_poly,
    charexp_from_series,
    disc_valuation,
    intersection_oracle,
    oracle_boundaries,
    resultant_valuation,
    transform_oracle,
    weierstrass_factor,
)
from equising.pipeline import analyze
from equising.ring import QQ, PrimeField, TowerRing
from equising.series import YPoly

from conftest import EX1, GOLDEN, alpha_ex1, cubic_ring, poly

R0 = TowerRing(QQ)

# (polynomial or factor list, balanced?)
BATTERY = {
    1: (["y - x", "y + x^2"], True),
    2: (["y^2 - x^3", "y^2 + x^3", "y^2 + x^3 + x^4"], False),
    3: (["y - x - x^2", "y - x + x^2", "y^2 - x^3"], False),
    4: (["y + x + x^2", "y + x - x^2", "y - x + x^2", "y - x - x^2"], True),
    5: (["y^2 - x^3", "y^3 - x^2"], False),
}
BATTERY_CHAR = {
    1: [(1,), (1,)],
    2: [(2, 3)] * 3,
    3: [(1,), (1,), (2, 3)],
    4: [(1,)] * 4,
    5: [(2, 3), (3, 2)],
}
ITEM4 = "(y^2 - x^2)^2 - 2*x^4*y^2 - 2*x^6 + x^8"


def test_resultant_valuation_examples():
    assert resultant_valuation(poly("y^2 - x^3"), poly("y^2 + x^3")) == 6
    assert resultant_valuation(poly("y^2 + x^3"), poly("y^2 + x^3 + x^4")) == 8
    assert resultant_valuation(poly("y^2 - x^3"), poly("y - x^2")) == 3
    with pytest.raises(CommonFactor):
        resultant_valuation(poly("y - x"), poly("(y - x)*(y + 1)"))


def test_disc_valuation_examples():
    assert disc_valuation(poly("y^2 - x^3")) == 3
    assert disc_valuation(poly(EX1)) == 33
    assert disc_valuation(poly(ITEM4)) == 16
    with pytest.raises(NotSquareFree):
        disc_valuation(poly("(y - x)^2"))


def test_branch_to_poly_examples():
    assert branch_to_poly(BranchSpec(2, ((3, 1),)), R0) == poly("y^2 - x^3")
    assert branch_to_poly(BranchSpec(1, ((1, 1), (2, 1))), R0) == poly("y - x - x^2")
    assert branch_to_poly(BranchSpec(2, ((2, 1), (3, 1))), R0) == poly("(y - x)^2 - x^3")
    with pytest.raises(NotPrimitive):
        branch_to_poly(BranchSpec(2, ((4, 1),)), R0)


def test_branch_to_poly_large_prime():
    F = PrimeField(2 ** 61 - 1)
    R = TowerRing(F)
    got = branch_to_poly(BranchSpec(2, ((2, 1), (3, 1))), R)
    assert got == poly("(y - x)^2 - x^3", F)


def test_charexp_examples():
    assert charexp_from_series(BranchSpec(2, ((3, 1),))) == (2, 3)
    assert charexp_from_series(BranchSpec(1, ((1, 5), (7, 1)))) == (1,)
    assert charexp_from_series(BranchSpec(4, ((6, 1), (7, 1)))) == (4, 6, 7)


def _balanced_by_oracle(factors):
    gammas = intersection_oracle(factors)
    return len(set(gammas)) == 1, gammas


@pytest.mark.parametrize("item", sorted(BATTERY))
def test_battery(item):
    texts, balanced = BATTERY[item]
    factors = [poly(t) for t in texts]
    F = factors[0]
    for G in factors[1:]:
        F = F * G
    same_gamma, gammas = _balanced_by_oracle(factors)
    chars = BATTERY_CHAR[item]
    assert (same_gamma and len(set(chars)) == 1) == balanced
    rep, *_ = analyze(F)
    assert rep.is_pseudo_irreducible == balanced
    if item == 2:
        assert gammas == [(6, 6), (6, 8), (6, 8)]
    if item == 4:
        assert gammas == [(1, 1, 2)] * 4
        assert F == poly(ITEM4)
        assert rep.vF == disc_valuation(F) == 16
        assert rep.Gamma == (1, 1, 2)


def test_disc_formula_on_products():
    branches = [BranchSpec(2, ((3, 1),)), BranchSpec(2, ((3, 1), (4, 1))), BranchSpec(1, ((1, 1),))]
    F, factors, summ = branch_oracle(branches, R0)
    total = sum(summ.branch_disc) + sum(sum(g) for g in summ.intersections)
    assert disc_valuation(F) == total


def test_transform_oracle_stage_zero():
    F = poly(EX1)
    assert transform_oracle(F, []) == F.taylor_shift(F[5] * (-1 / QQ(6)))


def test_transform_oracle_ex1():
    F = poly(EX1)
    rep, an, _, _ = analyze(F)
    H1 = transform_oracle(F, list(rep.data[:1]))
    R1 = cubic_ring()
    a = alpha_ex1(R1)
    assert boundary_poly(H1) == YPoly.from_terms(R1, {(2, 0): R1.one, (0, 1): -a})
    # Weierstrass: H1(0, y) = y^2
    assert H1.at_x0() == [R1.zero, R1.zero, R1.one]


def test_weierstrass_factor():
    H = poly("(y^2 - x)*(y + 1 + x)")
    G = weierstrass_factor(H, 2, 6)
    assert G.exact() == poly("y^2 - x")
    with pytest.raises(InvalidPrefix):
        weierstrass_factor(poly("(y - 1)*(y + 1)"), 1, 4)


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_stage_cross_check(name):
    F = poly(GOLDEN[name])
    rep, an, G, _ = analyze(F)
    theirs = oracle_boundaries(G, list(an.data), stages=len(an.boundaries))
    assert len(theirs) == len(an.boundaries)
    for ours, oracle in zip(an.boundaries, theirs):
        assert ours == oracle
