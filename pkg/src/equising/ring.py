"""Exact arithmetic over a base field and over towers of residue rings.

A tower ``K_k = K_{k-1}[Z_k]/(P_k)`` is stored recursively: an element of
``K_k`` is a tuple of ``deg P_k`` elements of ``K_{k-1}``, reduced modulo the
monic ``P_k``.  Level-0 elements are plain scalars (``gmpy2.mpq`` over the
rationals, :class:`Fp` over a prime field), so generic code can use the usual
arithmetic operators on every level.

Units and inverses are decided by linear algebra over the base field: an
element is a unit iff its multiplication matrix (whose determinant is the
iterated norm down to ``K``) is nonsingular.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import prod

import gmpy2
from gmpy2 import mpq

from .errors import (
    InvalidInput,
    NotMonic,
    NotSquareFree,
    RingMismatch,
    ZeroDivisor,
    ZeroElement,
)

MPQ = type(mpq(0))


# --------------------------------------------------------------------------
# base fields


class Fp:
    """Element of a prime field; ``v`` is kept in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v
        self.p = p

    def _int(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise RingMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        w = self._int(other)
        if w is None:
            return NotImplemented
        return Fp((self.v + w) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._int(other)
        if w is None:
            return NotImplemented
        return Fp((self.v - w) % self.p, self.p)

    def __rsub__(self, other):
        w = self._int(other)
        if w is None:
            return NotImplemented
        return Fp((w - self.v) % self.p, self.p)

    def __mul__(self, other):
        w = self._int(other)
        if w is None:
            return NotImplemented
        return Fp(self.v * w % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v % self.p, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> Fp:
        if not self.v:
            raise ZeroElement("inverse of 0")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        w = self._int(other)
        if w is None:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroElement("division by 0")
        return Fp(self.v * pow(w, -1, self.p) % self.p, self.p)

    def __rtruediv__(self, other):
        w = self._int(other)
        if w is None:
            return NotImplemented
        return Fp(w % self.p, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return Fp(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        w = self._int(other)
        if w is None:
            return NotImplemented
        return (self.v - w) % self.p == 0

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def signed(self) -> int:
        """Symmetric representative in ``(-p/2, p/2]``."""
        return self.v - self.p if self.v > self.p // 2 else self.v

    def __repr__(self):
        return str(self.signed())


class RationalField:
    characteristic = 0
    zero = mpq(0)
    one = mpq(1)

    def __call__(self, value):
        if isinstance(value, (Fp, TowerElem)):
            raise RingMismatch(f"cannot coerce {value!r} into QQ")
        return mpq(value)

    def is_element(self, a) -> bool:
        return isinstance(a, MPQ)

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or not gmpy2.is_prime(p, 50):
            raise InvalidInput(f"{p} is not prime")
        self.p = int(p)
        self.characteristic = self.p
        self.zero = Fp(0, self.p)
        self.one = Fp(1, self.p)

    def __call__(self, value):
        p = self.p
        if isinstance(value, Fp):
            if value.p != p:
                raise RingMismatch(f"GF({value.p}) element in GF({p})")
            return value
        if isinstance(value, int):
            return Fp(value % p, p)
        if isinstance(value, TowerElem):
            raise RingMismatch(f"cannot coerce {value!r} into GF({p})")
        q = Fraction(value) if not isinstance(value, MPQ) else Fraction(int(value.numerator), int(value.denominator))
        if q.denominator % p == 0:
            raise ZeroElement(f"denominator of {q} vanishes mod {p}")
        return Fp(q.numerator * pow(q.denominator, -1, p) % p, p)

    def is_element(self, a) -> bool:
        return isinstance(a, Fp) and a.p == self.p

    def format(self, a) -> str:
        return str(a.signed())

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
BaseField = RationalField | PrimeField


def field_from_spec(spec: str) -> BaseField:
    """``'q'`` for the rationals, ``'fp:<p>'`` for a prime field."""
    spec = spec.strip().lower()
    if spec in ("q", "qq"):
        return QQ
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise InvalidInput(f"bad prime in field spec {spec!r}") from None
        return PrimeField(p)
    raise InvalidInput(f"unknown field spec {spec!r}")


# --------------------------------------------------------------------------
# towers


class TowerRing:
    """``K[Z_1..Z_k]/(P_1..P_k)`` with each ``P_i`` monic over the ring below.

    Build towers with :meth:`extend` (or :func:`tower_extend`); the
    constructor does not validate the moduli.
    """

    def __init__(self, base: BaseField, moduli=(), parent: TowerRing | None = None):
        self.base = base
        self.moduli = tuple(tuple(P) for P in moduli)
        self.level = len(self.moduli)
        if self.level and parent is None:
            parent = TowerRing(base, self.moduli[:-1])
        self.parent = parent
        self.degrees = tuple(len(P) - 1 for P in self.moduli)
        self.dimension = prod(self.degrees)
        if self.level:
            self.ell = self.degrees[-1]
            self._modulus = self.moduli[-1]

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, TowerRing)
            and self.base == other.base
            and self.degrees == other.degrees
            and self.moduli == other.moduli
        )

    def __hash__(self):
        return hash((self.base, self.degrees))

    def __repr__(self):
        if not self.level:
            return repr(self.base)
        mods = ", ".join(
            UPoly(self.ancestor(i), P).format(f"Z{i + 1}") for i, P in enumerate(self.moduli)
        )
        return f"{self.base!r}[{mods}]"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def ancestor(self, level: int) -> TowerRing:
        r = self
        while r.level > level:
            r = r.parent
        return r

    def is_extension_of(self, other: TowerRing) -> bool:
        return other.level <= self.level and self.ancestor(other.level) == other

    # -- elements ---------------------------------------------------------

    def __call__(self, value):
        """Coerce ints, rationals, scalars and elements of sub-rings."""
        if not self.level:
            if isinstance(value, TowerElem):
                raise RingMismatch(f"{value.ring!r} element in {self!r}")
            return self.base(value)
        if isinstance(value, TowerElem):
            if value.ring is self or value.ring == self:
                return value
            if value.ring.level >= self.level or not self.is_extension_of(value.ring):
                raise RingMismatch(f"{value.ring!r} element in {self!r}")
        lifted = self.parent(value)
        return TowerElem(self, (lifted,) + (self.parent.zero,) * (self.ell - 1))

    @cached_property
    def zero(self):
        if not self.level:
            return self.base.zero
        return TowerElem(self, (self.parent.zero,) * self.ell)

    @cached_property
    def one(self):
        if not self.level:
            return self.base.one
        return TowerElem(self, (self.parent.one,) + (self.parent.zero,) * (self.ell - 1))

    @cached_property
    def gen(self) -> TowerElem:
        """The residue class ``z_k`` of ``Z_k``."""
        if not self.level:
            raise ValueError("the base field has no generator")
        return self.from_coeffs([self.parent.zero, self.parent.one])

    def gens(self) -> list:
        return [self.ancestor(i).gen for i in range(1, self.level + 1)]

    def from_coeffs(self, coeffs) -> TowerElem:
        """Reduce ``sum coeffs[i] z_k^i`` modulo ``P_k``."""
        par = self.parent
        c = [par(a) for a in coeffs]
        self._reduce(c)
        return TowerElem(self, tuple(c))

    def _reduce(self, c: list) -> None:
        ell, P, zero = self.ell, self._modulus, self.parent.zero
        for i in range(len(c) - 1, ell - 1, -1):
            lead = c[i]
            if lead:
                base = i - ell
                for j in range(ell):
                    if P[j]:
                        c[base + j] = c[base + j] - lead * P[j]
        del c[ell:]
        c.extend([zero] * (ell - len(c)))

    # -- base-field coordinates -------------------------------------------

    def to_vector(self, a) -> list:
        a = self(a)
        if not self.level:
            return [a]
        out = []
        for c in a.coeffs:
            out.extend(self.parent.to_vector(c))
        return out

    def from_vector(self, vec):
        if not self.level:
            return self.base(vec[0])
        step = self.parent.dimension
        return TowerElem(
            self,
            tuple(self.parent.from_vector(vec[i * step:(i + 1) * step]) for i in range(self.ell)),
        )

    @cached_property
    def basis(self) -> list:
        n, base = self.dimension, self.base
        return [
            self.from_vector([base.one if i == j else base.zero for i in range(n)])
            for j in range(n)
        ]

    def multiplication_matrix(self, a) -> list[list]:
        """Matrix (over the base field) of ``b -> a*b`` in the monomial basis."""
        a = self(a)
        cols = [self.to_vector(a * b) for b in self.basis]
        n = self.dimension
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def extend(self, P, check: bool = True) -> TowerRing:
        """``self[Z]/(P)``; ``P`` must be monic, of degree >= 1 and square-free."""
        P = P if isinstance(P, UPoly) else UPoly(self, P)
        if P.ring != self:
            P = UPoly(self, P.coeffs)
        if P.degree < 1:
            raise InvalidInput("extension modulus must have degree >= 1")
        if P.coeffs[-1] != self.one:
            raise NotMonic(f"{P} is not monic")
        if check and not is_squarefree(P):
            raise NotSquareFree(f"{P} is not square-free over {self!r}")
        return TowerRing(self.base, self.moduli + (P.coeffs,), parent=self)


def tower_extend(ring: TowerRing, P) -> TowerRing:
    return ring.extend(P)


class TowerElem:
    """Reduced element of a tower ring of level >= 1 (immutable)."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: TowerRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def _lift(self, other):
        """Return (same_ring_element | None, lower_value | None) or None."""
        if isinstance(other, TowerElem):
            r = other.ring
            if r is self.ring:
                return other, None
            if r.level > self.ring.level:
                return None
            if r.level == self.ring.level:
                if r == self.ring:
                    return other, None
                raise RingMismatch(f"{r!r} vs {self.ring!r}")
            if not self.ring.is_extension_of(r):
                raise RingMismatch(f"{r!r} is not below {self.ring!r}")
            return None, other
        if isinstance(other, (int, MPQ, Fp, Fraction)):
            return None, other
        return None

    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        same, low = lifted
        if same is not None:
            return TowerElem(self.ring, tuple(a + b for a, b in zip(self.coeffs, same.coeffs)))
        return TowerElem(self.ring, (self.coeffs[0] + low,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.ring, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        same, low = lifted
        if same is not None:
            return TowerElem(self.ring, tuple(a - b for a, b in zip(self.coeffs, same.coeffs)))
        return TowerElem(self.ring, (self.coeffs[0] - low,) + self.coeffs[1:])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        same, low = lifted
        if same is None:
            return TowerElem(self.ring, tuple(a * low for a in self.coeffs))
        a, b = self.coeffs, same.coeffs
        zero = self.ring.parent.zero
        res = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        res[i + j] = res[i + j] + ai * bj
        self.ring._reduce(res)
        return TowerElem(self.ring, tuple(res))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TowerElem):
            return self * invert(other)
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self * invert(self.ring.base(other))

    def __rtruediv__(self, other):
        return invert(self) * other

    def __pow__(self, n: int):
        if n < 0:
            return invert(self) ** (-n)
        result, sq = self.ring.one, self
        while n:
            if n & 1:
                result = result * sq
            n >>= 1
            if n:
                sq = sq * sq
        return result

    def __eq__(self, other):
        try:
            lifted = self._lift(other)
        except RingMismatch:
            return False
        if lifted is None:
            return NotImplemented
        same, low = lifted
        if same is None:
            same = self.ring(low)
        return self.coeffs == same.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def __repr__(self):
        return format_elem(self)


# --------------------------------------------------------------------------
# printing


def _monomials(a, ring: TowerRing) -> list[tuple[tuple[int, ...], object]]:
    if not ring.level:
        return [((), a)] if a else []
    out = []
    for i, c in enumerate(a.coeffs):
        for exps, s in _monomials(c, ring.parent):
            out.append((exps + (i,), s))
    return out


def _signed_terms(terms) -> str:
    """Join ``(sign-bearing coefficient string, monomial)`` pairs."""
    parts = []
    for coef, mono in terms:
        neg = coef.startswith("-")
        mag = coef[1:] if neg else coef
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def format_elem(a, ring: TowerRing | None = None) -> str:
    """Canonical string of a tower element as a polynomial in ``z1..zk``."""
    if ring is None:
        ring = a.ring if isinstance(a, TowerElem) else None
    if ring is None:
        return str(a.signed()) if isinstance(a, Fp) else str(a)
    monos = _monomials(a, ring)
    monos.sort(key=lambda t: tuple(reversed(t[0])), reverse=True)
    terms = []
    for exps, c in monos:
        mono = "*".join(
            f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}" for i, e in enumerate(exps) if e
        )
        terms.append((ring.base.format(c), mono))
    return _signed_terms(terms)


# --------------------------------------------------------------------------
# univariate polynomials over a tower


class UPoly:
    """Polynomial in ``Z`` over a tower ring; coefficients low to high."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: TowerRing, coeffs):
        c = [ring(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, ring, n: int, coef=1):
        return cls(ring, [ring.zero] * n + [ring(coef)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def _other(self, other):
        if isinstance(other, UPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring!r} vs {self.ring!r}")
            return other
        return UPoly(self.ring, [other])

    def __add__(self, other):
        o = self._other(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UPoly(self.ring, [self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.ring, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        if not self.coeffs or not o.coeffs:
            return UPoly(self.ring, [])
        res = [self.ring.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    res[i + j] = res[i + j] + a * b
        return UPoly(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, sq = UPoly(self.ring, [1]), self
        while n:
            if n & 1:
                result = result * sq
            n >>= 1
            if n:
                sq = sq * sq
        return result

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, a):
        """Horner evaluation at ``a`` (an element of this ring or an extension)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def derivative(self) -> UPoly:
        return UPoly(self.ring, [i * c for i, c in enumerate(self.coeffs)][1:])

    def format(self, var: str = "Z") -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            s = format_elem(c, self.ring)
            if mono and ("+" in s or " - " in s):
                s = f"({s})"
            terms.append((s, mono))
        return _signed_terms(terms)

    def __repr__(self):
        return self.format()


# --------------------------------------------------------------------------
# linear algebra over the base field


def _eliminate(M: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (copy) and pivot columns."""
    A = [row[:] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [vi - f * vr for vi, vr in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def _kernel_vector(M: list[list], zero, one) -> list | None:
    A, pivots = _eliminate(M)
    n = len(M[0])
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    f = free[0]
    vec = [zero] * n
    vec[f] = one
    for r, c in enumerate(pivots):
        vec[c] = -A[r][f]
    return vec


def determinant(M: list[list], zero, one):
    A = [row[:] for row in M]
    n = len(A)
    det = one
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [vi - f * vc for vi, vc in zip(A[i], A[c])]
    return det


def _ring_of(a, ring: TowerRing | None) -> TowerRing | None:
    if isinstance(a, TowerElem):
        return a.ring
    return ring


def norm(a, ring: TowerRing | None = None):
    """Norm of ``a`` down to the base field (determinant of multiplication)."""
    ring = _ring_of(a, ring)
    if ring is None or not ring.level:
        return a
    M = ring.multiplication_matrix(a)
    return determinant(M, ring.base.zero, ring.base.one)


def is_unit(a, ring: TowerRing | None = None) -> bool:
    ring = _ring_of(a, ring)
    if ring is None or not ring.level:
        return bool(a)
    if not a:
        return False
    _, pivots = _eliminate(ring.multiplication_matrix(a))
    return len(pivots) == ring.dimension


def zero_divisor_witness(a, ring: TowerRing | None = None):
    """A nonzero ``b`` with ``a*b == 0``, or ``None`` when ``a`` is a unit."""
    ring = _ring_of(a, ring)
    if ring is None or not ring.level:
        return None if a else (ring.one if ring else 1)
    vec = _kernel_vector(ring.multiplication_matrix(a), ring.base.zero, ring.base.one)
    return None if vec is None else ring.from_vector(vec)


def invert(a, ring: TowerRing | None = None):
    ring = _ring_of(a, ring)
    if ring is None or not ring.level:
        if not a:
            raise ZeroElement("inverse of 0")
        return 1 / a
    if not a:
        raise ZeroElement("inverse of 0")
    M = ring.multiplication_matrix(a)
    n = ring.dimension
    rhs = ring.to_vector(ring.one)
    A, pivots = _eliminate([M[i] + [rhs[i]] for i in range(n)])
    if len(pivots) < n or pivots[-1] == n:
        raise ZeroDivisor(a, zero_divisor_witness(a, ring))
    return ring.from_vector([A[i][n] for i in range(n)])


# --------------------------------------------------------------------------
# square-freeness and roots


def _check_char(ring: TowerRing, bound: int) -> None:
    ch = ring.characteristic
    if ch and ch <= bound:
        raise InvalidInput(f"characteristic {ch} must exceed {bound}")


def is_squarefree(P: UPoly) -> bool:
    """Whether the monic ``P`` is square-free on every field component.

    Equivalent to ``Res(P, P')`` being a unit; decided as: ``P'(z)`` is a unit
    in ``ring[Z]/(P)``.
    """
    if not P.is_monic():
        raise NotMonic(f"{P} is not monic")
    if P.degree <= 1:
        return True
    _check_char(P.ring, P.degree)
    algebra = P.ring.extend(P, check=False)
    return is_unit(P.derivative()(algebra.gen))


def root_series(f, num: int, den: int, count: int, base, zero):
    """First ``count`` coefficients of ``(1 + f[1] t + f[2] t^2 + ...)^(num/den)``.

    Uses ``k g_k = sum_{j=1..k} (j*num/den - (k-j)) f_j g_{k-j}``, valid over
    any ring where ``1..count-1`` are invertible.  ``f[0]`` must be one.
    """
    g = [f[0]]
    for k in range(1, count):
        acc = zero
        for j in range(1, min(k, len(f) - 1) + 1):
            fj = f[j]
            if not fj:
                continue
            w = Fraction(j * num, den) - (k - j)
            if w:
                acc = acc + fj * g[k - j] * base(w)
        g.append(acc * base(Fraction(1, k)))
    return g


def nth_root_monic(Q: UPoly, N: int) -> UPoly | None:
    """The monic ``P`` with ``P**N == Q``, or ``None`` if there is none."""
    if N < 1:
        raise ValueError("N must be positive")
    if not Q.is_monic():
        raise NotMonic(f"{Q} is not monic")
    n = Q.degree
    if N == 1:
        return Q
    if n % N:
        return None
    _check_char(Q.ring, n)
    r = n // N
    rev = [Q.coeffs[n - j] for j in range(n + 1)]
    g = root_series(rev, 1, N, r + 1, Q.ring.base, Q.ring.zero)
    P = UPoly(Q.ring, g[::-1])
    return P if P ** N == Q else None
