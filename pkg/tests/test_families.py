from __future__ import annotations

import random
from math import gcd

import pytest

from equising.families import (
    balanced_family,
    default_fields,
    eq_disc_estimate,
    level_exponents,
    unbalanced_family,
)
from equising.oracle import branch_oracle, disc_valuation
from equising.pipeline import analyze
from equising.ring import TowerRing


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_generated_families_agree_with_pipeline(seed):
    rng = random.Random(seed)
    for k, field in enumerate(default_fields() * 2):
        make = balanced_family if k % 2 == 0 else unbalanced_family
        fam = make(rng, field)
        R = TowerRing(field)
        F, _, summ = branch_oracle(list(fam.branches), R)
        assert summ.balanced == fam.balanced
        assert fam.degree == F.degree <= 24
        est = eq_disc_estimate(list(fam.branches), R)
        assert est == disc_valuation(F) <= 400
        rep, *_ = analyze(F)
        assert rep.is_pseudo_irreducible == fam.balanced
        if rep.is_pseudo_irreducible:
            assert rep.vF == est


def test_level_exponents_avoid_characteristic_ones():
    rng = random.Random(0)
    shape = (4, 6, 7)
    for _ in range(20):
        for h in level_exponents(rng, shape, 3, lo=rng.randint(0, 5)):
            assert h not in shape[1:]
            # divisible by the gcd of the characteristic exponents below h
            g = 4
            for b in shape[1:]:
                if b < h:
                    g = gcd(g, b)
            assert h % g == 0
