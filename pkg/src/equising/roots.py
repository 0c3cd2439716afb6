"""Approximate roots and the expansion of ``F`` in powers of ``x, psi_0, ..., psi_k``."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeMismatch, InvalidInput, NotDivisor, NotMonic
from .ring import root_series
from .series import XPoly, YPoly


def approximate_root(F: YPoly, N: int) -> YPoly:
    """The monic ``psi`` of degree ``d/N`` with ``deg(F - psi^N) < d - d/N``.

    The top ``d/N + 1`` coefficients of ``psi`` are those of the formal
    ``N``-th root of ``F`` read from the leading term downwards.
    """
    if not F.is_monic():
        raise NotMonic("approximate roots need a monic polynomial")
    d = F.degree
    if N < 1 or d % N:
        raise NotDivisor(f"{N} does not divide {d}")
    ch = F.ring.characteristic
    if ch and ch <= d:
        raise InvalidInput(f"characteristic {ch} must exceed {d}")
    r = d // N
    rev = [F.coeffs[d - j] for j in range(d + 1)]
    g = root_series(rev, 1, N, r + 1, F.ring.base, XPoly.zero(F.ring))
    return YPoly(F.ring, g[::-1])


@dataclass
class PsiExpansion:
    """``F = sum f_B * x^b_{-1} * psi_0^b_0 * ... * psi_k^b_k``.

    ``terms`` maps exponent tuples ``(b_{-1}, b_0, ..., b_k)`` to nonzero
    scalars; ``psis`` holds ``psi_0..psi_k`` (``psi_{-1} = x`` is implicit).
    """

    psis: list[YPoly]
    terms: dict[tuple[int, ...], object] = field(default_factory=dict)
    degree: int = 0

    @property
    def k(self) -> int:
        return len(self.psis) - 1

    def bounds(self) -> list[int]:
        """Upper bounds (exclusive) on ``b_0..b_{k-1}``."""
        degs = [p.degree for p in self.psis]
        return [degs[i + 1] // degs[i] for i in range(len(degs) - 1)]

    def check_bounds(self) -> bool:
        """Whether every exponent tuple respects the digit bounds and ``b_k <= N_k``."""
        bnd = self.bounds()
        top = self.degree // self.psis[-1].degree
        for B in self.terms:
            if any(B[1 + i] >= b for i, b in enumerate(bnd)) or B[-1] > top:
                return False
        return True

    def reconstruct(self) -> YPoly:
        ring = self.psis[0].ring if self.psis else None
        acc = YPoly(ring, [])
        powers: dict[tuple[int, int], YPoly] = {}

        def power(i, e):
            if (i, e) not in powers:
                powers[(i, e)] = self.psis[i] ** e
            return powers[(i, e)]

        for B, c in self.terms.items():
            term = YPoly.constant(ring, XPoly.monomial(ring, B[0], c))
            for i, e in enumerate(B[1:]):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc


def _digits(G: YPoly, psi: YPoly) -> list[YPoly]:
    """``G = sum r_b psi^b`` with ``deg r_b < deg psi``."""
    out = []
    while G:
        G, r = G.divmod_monic(psi)
        out.append(r)
    return out


def psi_expand(F: YPoly, psis: list[YPoly]) -> PsiExpansion:
    """Expansion of ``F`` on ``(x, psi_0, ..., psi_k)``, highest ``psi`` divided first."""
    if not psis:
        raise DegreeMismatch("empty basis")
    if psis[0].degree != 1:
        raise DegreeMismatch("psi_0 must have degree 1")
    for a, b in zip(psis, psis[1:]):
        if b.degree % a.degree:
            raise DegreeMismatch(f"deg {b.degree} not a multiple of deg {a.degree}")
    if any(not p.is_monic() for p in psis):
        raise DegreeMismatch("basis elements must be monic")
    if not F.is_monic() or F.degree % psis[-1].degree:
        raise DegreeMismatch("F must be monic of degree a multiple of deg psi_k")

    terms: dict[tuple[int, ...], object] = {}

    def walk(G: YPoly, level: int, suffix: tuple[int, ...]) -> None:
        if level < 0:
            if G.degree > 0:
                raise DegreeMismatch("nonconstant remainder")
            for j, c in G[0].terms():
                terms[(j,) + suffix] = c
            return
        for b, r in enumerate(_digits(G, psis[level])):
            if r:
                walk(r, level - 1, (b,) + suffix)

    walk(F, len(psis) - 1, ())
    return PsiExpansion(list(psis), terms, F.degree)
