"""Newton polygon, lower boundary polynomial and the pseudo-degeneracy test."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PrecisionTooLow, ZeroPolynomial
from .ring import UPoly, is_squarefree, is_unit, nth_root_monic
from .series import INF, YPoly

__all__ = [
    "EdgeData",
    "Polygon",
    "YPoly",
    "bezout_pair",
    "boundary_poly",
    "lower_hull",
    "newton_polygon",
    "pseudo_degeneracy_test",
    "taylor_shift",
]


def lower_hull(points) -> list[tuple[int, int]]:
    """Lower convex hull of lattice points, left to right, no collinear vertices."""
    pts = sorted(set(points))
    # keep the lowest point per abscissa
    low: dict[int, int] = {}
    for i, j in pts:
        if i not in low or j < low[i]:
            low[i] = j
    pts = sorted(low.items())
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def edge_slope(left: tuple[int, int], right: tuple[int, int]) -> tuple[int, int, int]:
    """``(q, m, l)`` with ``m*i + q*j = l`` through both points, ``q > 0``."""
    di, dj = right[0] - left[0], left[1] - right[1]
    g = gcd(di, dj)
    q, m = di // g, dj // g
    return q, m, m * right[0] + q * right[1]


@dataclass(frozen=True)
class Polygon:
    """Lower convex hull; ``vertices`` run with decreasing ``i``."""

    vertices: tuple[tuple[int, int], ...]
    q: int
    m: int
    l: int

    @property
    def lower_edge(self) -> tuple[int, int, int]:
        return self.q, self.m, self.l

    def on_lower_edge(self, i: int, j: int) -> bool:
        return self.m * i + self.q * j == self.l

    @property
    def is_straight(self) -> bool:
        return len(self.vertices) <= 2

    def edges(self) -> list[tuple[int, int, int]]:
        v = self.vertices
        return [edge_slope(v[k + 1], v[k]) for k in range(len(v) - 1)]


def _support(F: YPoly) -> list[tuple[int, int]]:
    pts = []
    for i, a in enumerate(F.coeffs):
        v = a.valuation_bound()
        if v != INF and v < a.prec:
            pts.append((i, v))
    return pts


def polygon_from_points(points) -> Polygon:
    hull = lower_hull(points)
    if not hull:
        raise ZeroPolynomial("empty support")
    verts = tuple(reversed(hull))
    if len(verts) == 1:
        i, j = verts[0]
        return Polygon(verts, 1, 0, j)
    q, m, l = edge_slope(verts[1], verts[0])
    return Polygon(verts, q, m, l)


def newton_polygon(F: YPoly) -> Polygon:
    """Newton polygon of ``F``; the lower edge is the one ending at the top degree."""
    if not F:
        raise ZeroPolynomial("Newton polygon of 0")
    return polygon_from_points(_support(F))


def boundary_poly(F: YPoly) -> YPoly:
    """Terms of ``F`` lying on the lower edge of its Newton polygon.

    For truncated coefficients, every unknown term must lie strictly above
    the edge, otherwise :class:`PrecisionTooLow` is raised.
    """
    poly = newton_polygon(F)
    q, m, l = poly.lower_edge
    terms = {}
    for i, a in enumerate(F.coeffs):
        if a.prec != INF and m * i + q * a.prec <= l:
            raise PrecisionTooLow(f"coefficient of y^{i} known only mod x^{a.prec}")
        for j, c in a.terms():
            if m * i + q * j == l:
                terms[(i, j)] = c
    return YPoly.from_terms(F.ring, terms)


def taylor_shift(F: YPoly, c) -> YPoly:
    """``F(x, y + c(x))``."""
    return F.taylor_shift(c)


def bezout_pair(q: int, m: int) -> tuple[int, int]:
    """``(s, t)`` with ``s*q - t*m = 1`` and ``0 <= t < q``."""
    if q == 1:
        return 1, 0
    t = (-pow(m, -1, q)) % q
    return (1 + t * m) // q, t


@dataclass(frozen=True)
class EdgeData:
    q: int
    m: int
    P: UPoly
    N: int
    s: int
    t: int

    @property
    def ell(self) -> int:
        return self.P.degree

    def as_tuple(self) -> tuple:
        return self.q, self.m, self.P, self.N

    def reconstruct(self) -> YPoly:
        """``(P(y^q/x^m) * x^(m*deg P))^N`` as a polynomial in ``x, y``."""
        ring = self.P.ring
        ell = self.ell
        terms = {(self.q * k, self.m * (ell - k)): c for k, c in enumerate(self.P.coeffs) if c}
        return YPoly.from_terms(ring, terms) ** self.N


def _divisors_desc(n: int) -> list[int]:
    return [k for k in range(n, 0, -1) if n % k == 0]


def pseudo_degeneracy_test(Fbar: YPoly, d: int) -> EdgeData | None:
    """Edge data ``(q, m, P, N)`` of a lower boundary polynomial, or ``None``."""
    poly = newton_polygon(Fbar)
    q, m, _ = poly.lower_edge
    if d % q:
        return None
    ring = Fbar.ring
    n = d // q
    Q = [ring.zero] * (n + 1)
    for i, j, c in Fbar.terms():
        if poly.on_lower_edge(i, j):
            Q[i // q] = Q[i // q] + c
    Qp = UPoly(ring, Q)
    if not Qp.is_monic():
        return None
    s, t = bezout_pair(q, m)
    for N in _divisors_desc(Qp.degree):
        P = nth_root_monic(Qp, N)
        if P is None or not is_squarefree(P):
            continue
        if q > 1 and not is_unit(P[0], ring):
            return None
        return EdgeData(q, m, P, N, s, t)
    return None


def lower_edge_points(F: YPoly) -> list[tuple[int, int]]:
    poly = newton_polygon(F)
    return [(i, j) for i, j, _ in F.terms() if poly.on_lower_edge(i, j)]
