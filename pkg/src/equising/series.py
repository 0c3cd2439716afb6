"""Polynomials and truncated power series in ``x``, and polynomials in ``y`` over them.

``XPoly`` is a dense coefficient list over a :class:`~equising.ring.TowerRing`
together with a precision: ``INF`` marks an exact polynomial, an integer
``n`` means "known modulo ``x^n``".  ``YPoly`` is a polynomial in ``y`` whose
coefficients are ``XPoly`` values over one common ring; it is the carrier for
``F``, the transformed polynomials and the approximate roots.
"""
from __future__ import annotations

import math
from typing import Iterable, Iterator

from .errors import RingMismatch, ValuationBelowPrecision
from .ring import Fp, MPQ, TowerElem, TowerRing, format_elem

INF = math.inf

_SCALARS = (int, MPQ, Fp, TowerElem)


def _common_ring(r1: TowerRing, r2: TowerRing) -> TowerRing:
    if r1 is r2 or r1 == r2:
        return r1
    if r1.is_extension_of(r2):
        return r1
    if r2.is_extension_of(r1):
        return r2
    raise RingMismatch(f"{r1!r} vs {r2!r}")


class XPoly:
    """Element of ``R[x]`` (exact) or of ``R[[x]]/(x^prec)``."""

    __slots__ = ("ring", "coeffs", "prec")

    def __init__(self, ring: TowerRing, coeffs: Iterable = (), prec=INF):
        self._set(ring, [ring(c) for c in coeffs], prec)

    def _set(self, ring, c: list, prec) -> None:
        if prec != INF:
            del c[prec:]
        while c and not c[-1]:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)
        self.prec = prec

    @classmethod
    def _raw(cls, ring, c: list, prec=INF) -> XPoly:
        obj = cls.__new__(cls)
        obj._set(ring, c, prec)
        return obj

    @classmethod
    def constant(cls, ring, value, prec=INF) -> XPoly:
        return cls(ring, [value], prec)

    @classmethod
    def monomial(cls, ring, n: int, coef=1, prec=INF) -> XPoly:
        return cls(ring, [0] * n + [coef], prec)

    @classmethod
    def zero(cls, ring, prec=INF) -> XPoly:
        return cls._raw(ring, [], prec)

    # -- basic queries ----------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.prec == INF

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def __bool__(self):
        return bool(self.coeffs)

    def valuation(self):
        """Least ``i`` with a nonzero coefficient; ``INF`` for exact zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        if self.is_exact:
            return INF
        raise ValuationBelowPrecision(f"series is O(x^{self.prec})")

    def valuation_bound(self):
        """Valuation, or the precision when the series is zero to that precision."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.prec

    def leading(self):
        """Coefficient at the valuation (``ring.zero`` for zero)."""
        for c in self.coeffs:
            if c:
                return c
        return self.ring.zero

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, XPoly):
            return other
        if isinstance(other, _SCALARS):
            return XPoly._raw(self.ring, [self.ring(other)])
        return None

    def _align(self, other: XPoly) -> tuple[XPoly, XPoly]:
        if other.ring is self.ring:
            return self, other
        ring = _common_ring(self.ring, other.ring)
        return self.change_ring(ring), other.change_ring(ring)

    def change_ring(self, ring: TowerRing) -> XPoly:
        if ring is self.ring:
            return self
        return XPoly._raw(ring, [ring(c) for c in self.coeffs], self.prec)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        ac, bc = a.coeffs, b.coeffs
        if len(ac) < len(bc):
            ac, bc = bc, ac
        res = list(ac)
        for i, c in enumerate(bc):
            res[i] = res[i] + c
        return XPoly._raw(a.ring, res, min(a.prec, b.prec))

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(self.ring, [-c for c in self.coeffs], self.prec)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if isinstance(other, TowerElem) and other.ring is not self.ring:
                ring = _common_ring(self.ring, other.ring)
                if ring is not self.ring:
                    return self.change_ring(ring) * other
            return XPoly._raw(self.ring, [c * other for c in self.coeffs], self.prec)
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self._align(other)
        prec = min(a.prec + b.valuation_bound(), b.prec + a.valuation_bound())
        ac, bc = a.coeffs, b.coeffs
        if not ac or not bc:
            return XPoly._raw(a.ring, [], prec)
        n = len(ac) + len(bc) - 1
        if prec != INF:
            n = min(n, prec)
        res = [a.ring.zero] * n
        for i, x in enumerate(ac):
            if not x or i >= n:
                continue
            lim = min(len(bc), n - i)
            for j in range(lim):
                y = bc[j]
                if y:
                    res[i + j] = res[i + j] + x * y
        return XPoly._raw(a.ring, res, prec)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, sq = XPoly._raw(self.ring, [self.ring.one]), self
        while n:
            if n & 1:
                result = result * sq
            n >>= 1
            if n:
                sq = sq * sq
        return result

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = XPoly._raw(self.ring, [self.ring(other)])
        if not isinstance(other, XPoly):
            return NotImplemented
        try:
            a, b = self._align(other)
        except RingMismatch:
            return False
        return a.coeffs == b.coeffs and a.prec == b.prec

    def __hash__(self):
        return hash((self.coeffs, self.prec))

    # -- x-shifts and truncation -------------------------------------------

    def shift(self, k: int) -> XPoly:
        """Multiply by ``x^k`` (``k >= 0``) or divide exactly by ``x^-k``."""
        if k >= 0:
            return XPoly._raw(self.ring, [self.ring.zero] * k + list(self.coeffs), self.prec + k)
        k = -k
        if any(self.coeffs[:k]):
            raise ArithmeticError(f"not divisible by x^{k}")
        return XPoly._raw(self.ring, list(self.coeffs[k:]), self.prec - k)

    def truncate(self, n) -> XPoly:
        """Reduce modulo ``x^n``."""
        return XPoly._raw(self.ring, list(self.coeffs), min(n, self.prec))

    def exact(self) -> XPoly:
        """Forget the precision (treat the known part as a polynomial)."""
        return XPoly._raw(self.ring, list(self.coeffs), INF)

    def substitute_monomial(self, q: int, w=None) -> XPoly:
        """``S(w*x^q)``: coefficient ``c_i`` moves to ``x^(q*i)`` scaled by ``w^i``."""
        res = [self.ring.zero] * (q * len(self.coeffs))
        p = self.ring.one
        for i, c in enumerate(self.coeffs):
            res[q * i] = c * p if w is not None else c
            if w is not None:
                p = p * w
        return XPoly._raw(self.ring, res, self.prec * q if self.prec != INF else INF)

    def inverse(self, prec: int) -> XPoly:
        """Inverse modulo ``x^prec``; the constant term must be a unit."""
        from .ring import invert

        c0 = invert(self[0], self.ring)
        res = [c0]
        for n in range(1, prec):
            acc = self.ring.zero
            for j in range(1, min(n, len(self.coeffs) - 1) + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * res[n - j]
            res.append(-acc * c0)
        return XPoly._raw(self.ring, res, min(prec, self.prec))

    # -- printing -----------------------------------------------------------

    def terms(self) -> Iterator[tuple[int, object]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield i, c

    def __repr__(self):
        body = format_bivariate({(0, j): c for j, c in self.terms()}, self.ring)
        if self.prec != INF:
            return f"{body} + O(x^{self.prec})"
        return body


class YPoly:
    """Polynomial in ``y`` with :class:`XPoly` coefficients (low degree first)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: TowerRing, coeffs: Iterable[XPoly] = ()):
        c = []
        for a in coeffs:
            if not isinstance(a, XPoly):
                a = XPoly(ring, [a])
            elif a.ring is not ring:
                a = a.change_ring(ring)
            c.append(a)
        while c and not c[-1].coeffs:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, ring, c: list) -> YPoly:
        while c and not c[-1].coeffs:
            c.pop()
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(c)
        return obj

    @classmethod
    def from_terms(cls, ring: TowerRing, terms: dict) -> YPoly:
        """Build from ``{(i, j): c}`` meaning ``c * x^j * y^i``."""
        if not terms:
            return cls(ring, [])
        d = max(i for i, _ in terms)
        rows = [dict() for _ in range(d + 1)]
        for (i, j), c in terms.items():
            rows[i][j] = rows[i].get(j, 0) + c
        coeffs = []
        for row in rows:
            n = max(row, default=-1) + 1
            coeffs.append(XPoly(ring, [row.get(j, 0) for j in range(n)]))
        return cls(ring, coeffs)

    @classmethod
    def y(cls, ring: TowerRing) -> YPoly:
        return cls(ring, [XPoly.zero(ring), XPoly.constant(ring, 1)])

    @classmethod
    def x(cls, ring: TowerRing) -> YPoly:
        return cls(ring, [XPoly.monomial(ring, 1)])

    @classmethod
    def constant(cls, ring: TowerRing, value) -> YPoly:
        if isinstance(value, XPoly):
            return cls(ring, [value])
        return cls(ring, [XPoly.constant(ring, value)])

    # -- queries --------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> XPoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return XPoly.zero(self.ring)

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, i: int, j: int):
        return self[i][j]

    def leading(self) -> XPoly:
        return self.coeffs[-1] if self.coeffs else XPoly.zero(self.ring)

    def is_monic(self) -> bool:
        lead = self.leading()
        return lead.coeffs == (self.ring.one,) and lead.is_exact

    def is_weierstrass(self) -> bool:
        return self.is_monic() and all(not a[0] for a in self.coeffs[:-1])

    @property
    def is_exact(self) -> bool:
        return all(a.is_exact for a in self.coeffs)

    @property
    def prec(self):
        return min((a.prec for a in self.coeffs), default=INF)

    def terms(self) -> Iterator[tuple[int, int, object]]:
        """Nonzero ``(i, j, c)`` for ``c * x^j * y^i``."""
        for i, a in enumerate(self.coeffs):
            for j, c in a.terms():
                yield i, j, c

    def to_dict(self) -> dict:
        return {(i, j): c for i, j, c in self.terms()}

    def x_degree(self) -> int:
        return max((a.degree for a in self.coeffs), default=-1)

    def at_x0(self) -> list:
        """Coefficients of ``F(0, y)``."""
        return [a[0] for a in self.coeffs]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, YPoly):
            if other.ring is self.ring:
                return self, other
            ring = _common_ring(self.ring, other.ring)
            return self.change_ring(ring), other.change_ring(ring)
        if isinstance(other, (XPoly,) + _SCALARS):
            o = YPoly.constant(self.ring, other) if not isinstance(other, XPoly) else None
            if o is None:
                ring = _common_ring(self.ring, other.ring)
                return self.change_ring(ring), YPoly(ring, [other])
            return self, o
        return None

    def change_ring(self, ring: TowerRing) -> YPoly:
        if ring is self.ring:
            return self
        return YPoly._raw(ring, [a.change_ring(ring) for a in self.coeffs])

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = max(len(a.coeffs), len(b.coeffs))
        res = []
        for i in range(n):
            if i < len(a.coeffs) and i < len(b.coeffs):
                res.append(a.coeffs[i] + b.coeffs[i])
            else:
                res.append(a.coeffs[i] if i < len(a.coeffs) else b.coeffs[i])
        return YPoly._raw(a.ring, res)

    __radd__ = __add__

    def __neg__(self):
        return YPoly._raw(self.ring, [-a for a in self.coeffs])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, (XPoly,) + _SCALARS):
            if isinstance(other, XPoly) and other.ring is not self.ring:
                ring = _common_ring(self.ring, other.ring)
                return YPoly._raw(ring, [a.change_ring(ring) * other for a in self.coeffs])
            if isinstance(other, TowerElem) and other.ring is not self.ring:
                ring = _common_ring(self.ring, other.ring)
                if ring is not self.ring:
                    return self.change_ring(ring) * other
            return YPoly._raw(self.ring, [a * other for a in self.coeffs])
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if not a.coeffs or not b.coeffs:
            return YPoly._raw(a.ring, [])
        res = [None] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, u in enumerate(a.coeffs):
            if not u:
                continue
            for j, v in enumerate(b.coeffs):
                if not v:
                    continue
                p = u * v
                res[i + j] = p if res[i + j] is None else res[i + j] + p
        zero = XPoly.zero(a.ring)
        return YPoly._raw(a.ring, [zero if r is None else r for r in res])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, sq = YPoly.constant(self.ring, 1), self
        while n:
            if n & 1:
                result = result * sq
            n >>= 1
            if n:
                sq = sq * sq
        return result

    def __eq__(self, other):
        if not isinstance(other, YPoly):
            return NotImplemented
        try:
            a, b = self._coerce(other)
        except RingMismatch:
            return False
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def shift_y(self, k: int) -> YPoly:
        """Multiply by ``y^k``."""
        return YPoly._raw(self.ring, [XPoly.zero(self.ring)] * k + list(self.coeffs))

    def shift_x(self, k: int) -> YPoly:
        """Multiply by ``x^k`` (negative ``k`` divides exactly)."""
        return YPoly._raw(self.ring, [a.shift(k) for a in self.coeffs])

    def truncate(self, n) -> YPoly:
        return YPoly._raw(self.ring, [a.truncate(n) for a in self.coeffs])

    def exact(self) -> YPoly:
        return YPoly._raw(self.ring, [a.exact() for a in self.coeffs])

    def derivative(self) -> YPoly:
        """Derivative in ``y``."""
        return YPoly._raw(self.ring, [a * i for i, a in enumerate(self.coeffs)][1:])

    def compose(self, g: YPoly) -> YPoly:
        """``F(x, g(x, y))`` by Horner's rule."""
        acc = YPoly._raw(g.ring, [])
        for a in reversed(self.coeffs):
            acc = acc * g + a
        return acc

    def taylor_shift(self, c) -> YPoly:
        """``F(x, y + c(x))``."""
        if not isinstance(c, XPoly):
            c = XPoly.constant(self.ring, c)
        return self.compose(YPoly(c.ring, [c, XPoly.constant(c.ring, 1)]))

    def divmod_monic(self, D: YPoly) -> tuple[YPoly, YPoly]:
        """Euclidean division by the monic ``D``."""
        if not D.is_monic():
            raise ValueError("divisor must be monic in y")
        a, D = self._coerce(D)
        rem = list(a.coeffs)
        n = D.degree
        if len(rem) <= n:
            return YPoly._raw(a.ring, []), a
        quo = [XPoly.zero(a.ring)] * (len(rem) - n)
        for i in range(len(rem) - 1, n - 1, -1):
            c = rem[i]
            if not c:
                continue
            quo[i - n] = c
            for j in range(n):
                dj = D.coeffs[j]
                if dj:
                    rem[i - n + j] = rem[i - n + j] - c * dj
            rem[i] = XPoly.zero(a.ring)
        return YPoly._raw(a.ring, quo), YPoly._raw(a.ring, rem[:n])

    def map_coeffs(self, fn) -> YPoly:
        return YPoly(self.ring, [fn(a) for a in self.coeffs])

    # -- printing -----------------------------------------------------------

    def format(self) -> str:
        return format_bivariate(self.to_dict(), self.ring)

    def __repr__(self):
        prec = self.prec
        body = self.format()
        return body if prec == INF else f"{body} + O(x^{prec})"


def format_bivariate(terms: dict, ring: TowerRing) -> str:
    """Canonical string for ``{(i, j): c}``, highest ``y`` power first."""
    parts = []
    for (i, j) in sorted(terms, key=lambda t: (-t[0], -t[1])):
        c = terms[(i, j)]
        if not c:
            continue
        mono = "*".join(
            s for s in (
                "" if j == 0 else ("x" if j == 1 else f"x^{j}"),
                "" if i == 0 else ("y" if i == 1 else f"y^{i}"),
            ) if s
        )
        s = format_elem(c, ring)
        neg = False
        if " + " in s or " - " in s:
            s = f"({s})"
        elif s.startswith("-"):
            neg, s = True, s[1:]
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"
