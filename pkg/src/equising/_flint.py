"""Conversions between base-field ``YPoly`` values and python-flint multivariate polynomials.

Only exact polynomials over the base field (tower level 0) can be converted.
Variables are ordered ``(x, y)``; exponent keys of ``to_dict`` are ``(j, i)``
for ``x^j y^i``.
"""
from __future__ import annotations

from fractions import Fraction

import flint

from .errors import CommonFactor, InvalidInput
from .ring import Fp, PrimeField, RationalField, TowerRing
from .series import YPoly


def context(field, names=("x", "y")):
    if isinstance(field, RationalField):
        return flint.fmpq_mpoly_ctx.get(names)
    if isinstance(field, PrimeField):
        return flint.nmod_mpoly_ctx.get(names, modulus=field.p)
    raise TypeError(f"unsupported field {field!r}")


def _scalar(c):
    if isinstance(c, Fp):
        return c.v
    return flint.fmpq(int(c.numerator), int(c.denominator))


def to_flint(F: YPoly, ctx=None):
    if F.ring.level:
        raise InvalidInput("only base-field polynomials convert to flint")
    if not F.is_exact:
        raise InvalidInput("only exact polynomials convert to flint")
    ctx = ctx or context(F.ring.base)
    return ctx.from_dict({(j, i): _scalar(c) for i, j, c in F.terms()})


def from_flint(poly, ring: TowerRing) -> YPoly:
    field = ring.base
    terms = {}
    for (j, i), c in poly.to_dict().items():
        if isinstance(field, RationalField):
            c = Fraction(int(c.p), int(c.q))
        terms[(i, j)] = field(int(c) if not isinstance(c, Fraction) else c)
    return YPoly.from_terms(ring, terms)


def x_valuation(poly) -> int:
    """Least ``x`` exponent of a nonzero flint polynomial in ``(x, y)``."""
    d = poly.to_dict()
    if not d:
        raise CommonFactor("resultant vanishes identically")
    return int(min(k[0] for k in d))


def y_resultant(G: YPoly, H: YPoly):
    ctx = context(G.ring.base)
    return to_flint(G, ctx).resultant(to_flint(H, ctx), "y")


def is_squarefree_xy(F: YPoly) -> bool:
    """Whether ``gcd(F, F_y)`` is free of ``y`` (so ``F`` has no repeated factor in ``y``)."""
    f = to_flint(F)
    g = f.gcd(f.derivative("y"))
    return g.degrees()[1] == 0
