"""Brute-force checks independent of the stage loop.

Intersection numbers and discriminant valuations come from exact resultants
(python-flint).  Branches are realised from parametrisations ``(T^e, S(T))``
by eliminating ``T``.  ``transform_oracle`` rebuilds the polynomials ``H_k``
by explicit substitution and Weierstrass splitting, so their boundary
polynomials can be compared with the ones the pipeline reads off the
expansion of ``F``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _flint
from .errors import (
    CommonFactor,
    InvalidInput,
    InvalidPrefix,
    NotPrimitive,
    NotSquareFree,
    PrecisionTooLow,
)
from .newton import EdgeData, boundary_poly
from .ring import RationalField, TowerRing, invert, is_unit
from .series import INF, XPoly, YPoly


# --------------------------------------------------------------------------
# resultants


def resultant_valuation(G: YPoly, H: YPoly) -> int:
    """``val_x Res_y(G, H)``."""
    return _flint.x_valuation(_flint.y_resultant(G, H))


def disc_valuation(F: YPoly) -> int:
    """``val_x Res_y(F, F_y)``."""
    try:
        return resultant_valuation(F, F.derivative())
    except CommonFactor:
        raise NotSquareFree("F has a repeated factor") from None


# --------------------------------------------------------------------------
# branches


@dataclass(frozen=True)
class BranchSpec:
    """Parametrisation ``x = T^e``, ``y = sum c * T^b`` over ``(b, c)`` in ``terms``."""

    e: int
    terms: tuple[tuple[int, object], ...]

    def support(self) -> list[int]:
        return sorted(b for b, c in self.terms if c)

    def is_primitive(self) -> bool:
        return math.gcd(self.e, *self.support()) == 1

    def __str__(self):
        s = " + ".join(f"{c}*T^{b}" for b, c in sorted(self.terms))
        return f"(T^{self.e}, {s or '0'})"


def branch_to_poly(b: BranchSpec, ring: TowerRing) -> YPoly:
    """``Res_T(T^e - x, y - S(T))`` normalised to be monic in ``y``."""
    if b.e < 1 or not b.is_primitive():
        raise NotPrimitive(f"{b} is not a primitive parametrisation")
    field = ring.base
    ctx = _flint.context(field, ("T", "x", "y"))
    T, x, y = ctx.gens()
    S = ctx.from_dict({(k, 0, 0): _flint._scalar(field(c)) for k, c in b.terms if c})
    r = (T ** b.e - x).resultant(y - S, "T")
    terms = {(i, j): c for (_, j, i), c in r.to_dict().items()}
    out = {}
    for key, c in terms.items():
        # nmod_mpoly hands back plain ints, so coerce before dividing
        out[key] = field(Fraction(int(c.p), int(c.q))) if isinstance(field, RationalField) else field(int(c))
    lead = invert(out[(b.e, 0)], ring)
    return YPoly.from_terms(ring, {key: c * lead for key, c in out.items()})


def charexp_from_series(b: BranchSpec) -> tuple[int, ...]:
    """``(beta_0; beta_1, ..., beta_g)`` by the gcd chain over the support of ``S``."""
    if b.e < 1 or not b.is_primitive():
        raise NotPrimitive(f"{b} is not a primitive parametrisation")
    out = [b.e]
    g = b.e
    for k in b.support():
        if g == 1:
            break
        if k % g:
            out.append(k)
            g = math.gcd(g, k)
    return tuple(out)


def intersection_oracle(factors: list[YPoly]) -> list[tuple[int, ...]]:
    """For each factor, the sorted intersection numbers with all the others."""
    n = len(factors)
    val = {}
    for i in range(n):
        for j in range(i + 1, n):
            val[(i, j)] = val[(j, i)] = resultant_valuation(factors[i], factors[j])
    return [tuple(sorted(val[(i, j)] for j in range(n) if j != i)) for i in range(n)]


@dataclass(frozen=True)
class OracleSummary:
    char_exponents: list[tuple[int, ...]]
    intersections: list[tuple[int, ...]]
    branch_disc: list[int]

    @property
    def balanced(self) -> bool:
        return len(set(self.char_exponents)) <= 1 and len(set(self.intersections)) <= 1


def branch_oracle(branches: list[BranchSpec], ring: TowerRing) -> tuple[YPoly, list[YPoly], OracleSummary]:
    """Product polynomial, its factors and the literal balanced-test data."""
    factors = [branch_to_poly(b, ring) for b in branches]
    F = YPoly.constant(ring, 1)
    for P in factors:
        F = F * P
    summary = OracleSummary(
        [charexp_from_series(b) for b in branches],
        intersection_oracle(factors),
        [disc_valuation(P) for P in factors],
    )
    return F, factors, summary


# --------------------------------------------------------------------------
# direct transforms


def _stage_transform(H: YPoly, ed: EdgeData, ring: TowerRing, prec) -> YPoly:
    """``H(z^t x^q, x^m (y + z^s)) / x^(q m l N)``, Weierstrass-split and recentred."""
    q, m, s, t, N = ed.q, ed.m, ed.s, ed.t, ed.N
    d = H.degree
    z = ring.gen
    zt = z ** t
    lin = YPoly(ring, [XPoly.constant(ring, z ** s), XPoly.constant(ring, 1)])
    Ht = YPoly(ring, [])
    pw = YPoly.constant(ring, 1)
    for i, a in enumerate(H.coeffs):
        sub = a.change_ring(ring).substitute_monomial(q, zt).shift(m * i)
        Ht = Ht + pw * sub
        pw = pw * lin
    L = q * m * ed.ell * N
    try:
        Ht = Ht.shift_x(-L)
    except ArithmeticError:
        raise InvalidPrefix("edge data does not match the polynomial") from None
    if not Ht.is_monic() or Ht.degree != d:
        raise InvalidPrefix("transformed polynomial is not monic of the same degree")
    rho = min(Ht.prec, prec)
    if rho == INF:
        raise ValueError("finite precision required for the Weierstrass split")
    G = weierstrass_factor(Ht, N, rho)
    c = G[N - 1] * (-invert(ring.base(N)))
    return G.taylor_shift(c)


def weierstrass_factor(H: YPoly, N: int, rho: int) -> YPoly:
    """Degree-``N`` Weierstrass factor of ``H`` modulo ``x^rho`` by linear lifting."""
    R = H.ring
    zero = R.zero
    E = [[H[i][n] for i in range(H.degree + 1)] for n in range(rho)]
    E0 = E[0]
    if any(E0[:N]):
        raise InvalidPrefix(f"H(0, y) is not divisible by y^{N}")
    U0 = E0[N:]
    if not is_unit(U0[0], R):
        raise InvalidPrefix("cofactor is not a unit at the origin")
    # b = U0^-1 mod y^N
    b0 = invert(U0[0], R)
    binv = [b0]
    for n in range(1, N):
        acc = zero
        for j in range(1, min(n, len(U0) - 1) + 1):
            acc = acc + U0[j] * binv[n - j]
        binv.append(-acc * b0)

    def mul(a, c):
        out = [zero] * (len(a) + len(c) - 1) if a and c else []
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(c):
                    if v:
                        out[i + j] = out[i + j] + u * v
        return out

    def sub(a, c):
        n = max(len(a), len(c))
        return [(a[i] if i < len(a) else zero) - (c[i] if i < len(c) else zero) for i in range(n)]

    Gs = [[zero] * N + [R.one]]
    Us = [U0]
    for n in range(1, rho):
        delta = E[n]
        for a in range(1, n):
            delta = sub(delta, mul(Us[a], Gs[n - a]))
        Gn = mul(binv, delta)[:N]
        Gn += [zero] * (N - len(Gn))
        rest = sub(delta, mul(U0, Gn))
        if any(rest[:N]):
            raise PrecisionTooLow("lifting failed to separate the factors")
        Gs.append(Gn)
        Us.append(rest[N:])
    coeffs = []
    for i in range(N + 1):
        coeffs.append(XPoly(R, [Gs[n][i] if i < len(Gs[n]) else zero for n in range(rho)], rho))
    coeffs[N] = XPoly.constant(R, 1)
    return YPoly(R, coeffs)


def transform_oracle(F: YPoly, prefix: list[EdgeData], rho: int | None = None) -> YPoly:
    """``H_k`` for ``k = len(prefix)`` by direct substitution, modulo ``x^rho``."""
    if not F.is_monic():
        raise InvalidInput("F must be monic")
    d = F.degree
    R = F.ring
    c0 = F[d - 1] * (-invert(R.base(d)))
    H = F.taylor_shift(c0)
    if not prefix:
        return H if rho is None else H.truncate(rho)
    if rho is None:
        rho = disc_valuation(F) + 1
    # precision needed at each stage so that the last one reaches rho
    need = [rho]
    for ed in reversed(prefix[1:]):
        L = ed.q * ed.m * ed.ell * ed.N
        need.append(-(-(need[-1] + L) // ed.q))
    need.reverse()
    for k, ed in enumerate(prefix):
        if ed.P.ring != R:
            raise InvalidPrefix(f"residual polynomial {k + 1} lives over the wrong ring")
        R = R.extend(ed.P, check=False)
        H = _stage_transform(H, ed, R, need[k])
    return H.truncate(rho)


def oracle_boundaries(
    F: YPoly, prefix: list[EdgeData], rho: int | None = None, stages: int | None = None
) -> list[YPoly]:
    """Boundary polynomials of ``H_0..H_(stages-1)``; precision doubles on ``PrecisionTooLow``."""
    if stages is None:
        stages = len(prefix) + 1
    out = []
    for k in range(stages):
        r = rho if rho is not None else disc_valuation(F) + 1
        while True:
            try:
                out.append(boundary_poly(transform_oracle(F, prefix[:k], r)))
                break
            except PrecisionTooLow:
                r *= 2
                if r > 1 << 14:
                    raise
    return out
