"""Seeded generators of branch products for randomized cross-checks.

Balanced products come from symmetric trees.  Every branch shares a common
Puiseux part ``S_0`` that fixes the characteristic exponents.  At each tree
level a term ``a * T^h`` is added, with ``a`` running over distinct values.
Two branches then have contact ``h`` at the first level where they differ.
Because every branch sees the same contact multiset, the product is balanced.
The exponents ``h`` never create new characteristic exponents.

Unbalanced products break that symmetry: trees whose subtrees have different
sizes, or branches with different characteristic exponents.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .oracle import BranchSpec
from .ring import PrimeField, QQ

# (e; beta_1, ..., beta_g) shapes small enough for desk-scale products
CHAR_SHAPES = [
    (1,),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 4),
    (3, 5),
    (4, 6, 7),
    (4, 6, 9),
    (4, 10, 11),
]


@dataclass(frozen=True)
class Family:
    name: str
    field: object
    branches: tuple[BranchSpec, ...]
    balanced: bool

    @property
    def degree(self) -> int:
        return sum(b.e for b in self.branches)


def _value(rng: random.Random, field, nonzero: bool = True):
    while True:
        if isinstance(field, PrimeField):
            v = rng.randrange(field.p)
        else:
            v = Fraction(rng.randint(-5, 5), rng.choice([1, 1, 1, 2, 3]))
        if v or not nonzero:
            return v


def _distinct_values(rng: random.Random, field, r: int) -> list:
    """``r`` distinct field values; over ``GF(p)`` with ``r | p-1`` often a coset of roots of unity."""
    if isinstance(field, PrimeField) and (field.p - 1) % r == 0 and rng.random() < 0.5:
        g = _primitive_root(field.p)
        w = pow(g, (field.p - 1) // r, field.p)
        a = rng.randrange(1, field.p)
        return [a * pow(w, j, field.p) % field.p for j in range(r)]
    out: list = []
    while len(out) < r:
        v = _value(rng, field, nonzero=False)
        if v not in out:
            out.append(v)
    return out


def _primitive_root(p: int) -> int:
    n, fac, f = p - 1, set(), 2
    while f * f <= n:
        while n % f == 0:
            fac.add(f)
            n //= f
        f += 1
    if n > 1:
        fac.add(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    return 1


def _gcd_below(shape: tuple[int, ...], h: int) -> int:
    g = shape[0]
    for b in shape[1:]:
        if b < h:
            g = gcd(g, b)
    return g


def common_part(rng: random.Random, field, shape: tuple[int, ...]) -> dict[int, object]:
    """``S_0`` with the given characteristic exponents plus a few harmless terms."""
    S = {b: _value(rng, field) for b in shape[1:]}
    top = shape[-1] if len(shape) > 1 else shape[0]
    for _ in range(rng.randint(0, 2)):
        k = rng.randint(1, top + 2)
        if k not in S and k % _gcd_below(shape, k) == 0 and k not in shape[1:]:
            S[k] = _value(rng, field)
    return S


def level_exponents(rng: random.Random, shape: tuple[int, ...], levels: int, lo: int = 1, step: int = 3) -> list[int]:
    """Increasing contact exponents that never add a characteristic exponent."""
    out: list[int] = []
    h = lo
    while len(out) < levels:
        h += rng.randint(1, step)
        if h in shape[1:]:
            continue
        if h % _gcd_below(shape, h) == 0:
            out.append(h)
    return out


def tree_branches(e: int, S0: dict, hs: list[int], values: list[list]) -> list[BranchSpec]:
    """Branches indexed by paths through the tree of per-level values."""
    paths = [[]]
    for vals in values:
        paths = [p + [v] for p in paths for v in vals]
    out = []
    for p in paths:
        S = dict(S0)
        for h, v in zip(hs, p):
            S[h] = S.get(h, 0) + v
        out.append(BranchSpec(e, tuple(sorted((k, c) for k, c in S.items() if c))))
    return out


def eq_disc_estimate(branches: list[BranchSpec], ring) -> int:
    """``sum v(F_i) + sum_{i != j} (F_i, F_j)`` from small resultants."""
    from .oracle import branch_to_poly, disc_valuation, resultant_valuation

    polys = [branch_to_poly(b, ring) for b in branches]
    total = sum(disc_valuation(P) for P in polys)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            total += 2 * resultant_valuation(polys[i], polys[j])
    return total


def _small_enough(branches, field, max_vf) -> bool:
    from .ring import TowerRing

    return max_vf is None or eq_disc_estimate(branches, TowerRing(field)) <= max_vf


def balanced_family(
    rng: random.Random, field, max_degree: int = 24, name: str = "", max_vf: int | None = 400
) -> Family:
    while True:
        shape = rng.choice(CHAR_SHAPES)
        e = shape[0]
        fmax = max_degree // e
        if fmax < 1:
            continue
        levels = rng.choice([1, 1, 2, 2, 3])
        counts = []
        for _ in range(levels):
            counts.append(rng.choice([2, 2, 3, 3, 4]))
        while counts and prod(counts) > fmax:
            counts.pop()
        S0 = common_part(rng, field, shape)
        lo = rng.choice([0, 1, 2, shape[-1] // 2])
        hs = level_exponents(rng, shape, len(counts), lo=lo)
        values = [_distinct_values(rng, field, r) for r in counts]
        branches = tree_branches(e, S0, hs, values)
        if all(b.is_primitive() for b in branches) and _small_enough(branches, field, max_vf):
            return Family(name or f"balanced{shape}x{counts}", field, tuple(branches), True)


def unbalanced_family(
    rng: random.Random, field, max_degree: int = 24, name: str = "", max_vf: int | None = 400
) -> Family:
    kind = rng.choice(["asymmetric", "mixed", "contact"])
    while True:
        if kind == "mixed":
            shapes = rng.sample(CHAR_SHAPES[:6], 2)
            if sum(s[0] for s in shapes) > max_degree:
                continue
            branches = []
            for shape in shapes:
                reps = rng.randint(1, max(1, min(3, (max_degree - sum(s[0] for s in shapes)) // shape[0] + 1)))
                S0 = common_part(rng, field, shape)
                hs = level_exponents(rng, shape, 1, lo=shape[-1])
                vals = _distinct_values(rng, field, reps)
                branches += tree_branches(shape[0], S0, hs, [vals])
        elif kind == "asymmetric":
            shape = rng.choice(CHAR_SHAPES[:6])
            e = shape[0]
            S0 = common_part(rng, field, shape)
            h1, h2 = level_exponents(rng, shape, 2, lo=rng.choice([0, 1, shape[-1] // 2]))
            top = _distinct_values(rng, field, rng.randint(2, 3))
            branches = []
            for idx, a in enumerate(top):
                S = dict(S0)
                S[h1] = S.get(h1, 0) + a
                sub = _distinct_values(rng, field, 2 if idx == 0 else 1)
                branches += tree_branches(e, S, [h2], [sub])
        else:
            # same characteristic exponents, different contact depths
            shape = rng.choice(CHAR_SHAPES[:6])
            e = shape[0]
            S0 = common_part(rng, field, shape)
            h1, h2 = level_exponents(rng, shape, 2, lo=rng.choice([0, 1, shape[-1] // 2]))
            a, b = _distinct_values(rng, field, 2)
            c = _value(rng, field)
            specs = [{h1: a}, {h1: a, h2: c}, {h1: b}]
            branches = []
            for extra in specs:
                S = dict(S0)
                for k, v in extra.items():
                    S[k] = S.get(k, 0) + v
                branches.append(BranchSpec(e, tuple(sorted((k, v) for k, v in S.items() if v))))
        if sum(b.e for b in branches) > max_degree or len(set(branches)) < len(branches):
            continue
        if all(b.is_primitive() for b in branches) and _small_enough(branches, field, max_vf):
            return Family(name or f"unbalanced-{kind}", field, tuple(branches), False)


def default_fields():
    """Rationals for small cases; a large prime and primes with many roots of unity otherwise."""
    return [QQ, PrimeField(2 ** 61 - 1), PrimeField(7681), PrimeField(12289)]
