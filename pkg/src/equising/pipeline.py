"""Pseudo-irreducibility test and equisingularity invariants.

The stage loop never builds the transformed polynomials ``H_k``.  At stage
``k`` it takes the ``N_k``-th approximate root of ``F``, expands ``F`` on
``(x, psi_0, ..., psi_k)`` and reads the lower boundary polynomial of ``H_k``
off that expansion using the weight vector ``V`` and the scaling constants
``Lambda``.  Each pseudo-degenerate stage adjoins a root of its residual
polynomial to the coefficient tower.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd, prod

from .errors import (
    IncompleteData,
    InternalInvariant,
    InvalidInput,
    NoValidShift,
    NotMonic,
    NotSquareFree,
    ZeroPolynomial,
)
from .newton import EdgeData, polygon_from_points, pseudo_degeneracy_test
from .ring import TowerRing, invert, is_unit
from .roots import PsiExpansion, approximate_root, psi_expand
from .series import INF, XPoly, YPoly

PSEUDO_IRREDUCIBLE = "pseudo_irreducible"
NOT_PSEUDO_IRREDUCIBLE = "not_pseudo_irreducible"


@dataclass(frozen=True)
class StageState:
    """Bookkeeping at stage ``k``: ``V = (v_-1..v_k)``, ``Lambda = (l_-1..l_k)``."""

    k: int
    V: tuple[int, ...]
    Lambda: tuple
    ring: TowerRing
    N: int
    psis: tuple[YPoly, ...] = ()


def initial_state(ring: TowerRing, d: int) -> StageState:
    return StageState(0, (1, 0), (ring.one, ring.one), ring, d)


def update_vl(state: StageState, ed: EdgeData, ring: TowerRing | None = None) -> StageState:
    """Advance ``(V, Lambda)`` past the edge data ``ed`` of the current stage."""
    if ring is None:
        ring = state.ring.extend(ed.P)
    q, m, s, t, ell = ed.q, ed.m, ed.s, ed.t, ed.ell
    z = ring.gen
    V = state.V
    L = [ring(a) for a in state.Lambda]
    newV = [q * v for v in V[:-1]] + [q * V[-1] + m]
    newV.append(q * ell * newV[-1])
    newL = [L[i] * z ** (t * V[i]) for i in range(len(V) - 1)]
    newL.append(L[-1] * z ** (t * V[-1] + s))
    # z-exponents of the last entry combined before evaluating
    zexp = (1 - s - ell) + q * ell * (t * V[-1] + s)
    if zexp < 0:
        raise InternalInvariant(f"negative z exponent {zexp}")
    lam = ed.P.derivative()(z) * L[-1] ** (q * ell) * z ** zexp * q
    if not is_unit(lam):
        raise InternalInvariant("lambda_kk is not a unit")
    newL.append(lam)
    return StageState(state.k + 1, tuple(newV), tuple(newL), ring, ed.N, state.psis)


def _dot(B, V) -> int:
    return sum(b * v for b, v in zip(B, V))


def edge_weights(exp: PsiExpansion, V) -> tuple[int, dict[int, int]]:
    """``v_k(F)`` and the offsets ``w_i`` indexed by the ``psi_k`` exponent."""
    vals = {B: _dot(B, V) for B in exp.terms}
    v = min(vals.values())
    w: dict[int, int] = {}
    for B, val in vals.items():
        i = B[-1]
        if val - v < w.get(i, INF):
            w[i] = val - v
    return v, w


def boundary_from_expansion(exp: PsiExpansion, state: StageState) -> YPoly:
    """Lower boundary polynomial of ``H_k`` from the expansion of ``F``."""
    V, Lam, R, N = state.V, state.Lambda, state.ring, state.N
    if len(V) != len(exp.psis) + 1:
        raise InternalInvariant("expansion and state are at different stages")
    v, w = edge_weights(exp, V)
    if w.get(N) != 0:
        raise InternalInvariant(f"w_N = {w.get(N)} (expected 0)")
    poly = polygon_from_points(w.items())
    lam_inv = invert(R(Lam[-1]), R)
    cache: dict[tuple[int, int], object] = {}

    def lam_pow(j: int, e: int):
        if (j, e) not in cache:
            base = lam_inv if j == len(V) - 1 else R(Lam[j])
            cache[(j, e)] = base ** e
        return cache[(j, e)]

    terms: dict[tuple[int, int], object] = {}
    for B, c in exp.terms.items():
        i = B[-1]
        if not poly.on_lower_edge(i, w[i]) or _dot(B, V) != w[i] + v:
            continue
        coef = R(c)
        for j, b in enumerate(B[:-1]):
            if b:
                coef = coef * lam_pow(j, b)
        if N - i:
            coef = coef * lam_pow(len(V) - 1, N - i)
        key = (i, w[i])
        terms[key] = terms[key] + coef if key in terms else coef
    return YPoly.from_terms(R, terms)


@dataclass
class Analysis:
    """Outcome of the stage loop together with per-stage traces."""

    verdict: str
    stage: int | None
    data: list[EdgeData]
    degree: int
    states: list[StageState] = field(default_factory=list)
    boundaries: list[YPoly] = field(default_factory=list)
    expansions: list[PsiExpansion] = field(default_factory=list)

    @property
    def is_pseudo_irreducible(self) -> bool:
        return self.verdict == PSEUDO_IRREDUCIBLE


def check_input(F: YPoly, check_squarefree: bool = True) -> int:
    if not F:
        raise ZeroPolynomial("zero polynomial")
    if F.ring.level:
        raise InvalidInput("input must have base-field coefficients")
    if not F.is_monic():
        raise NotMonic("input must be monic in y")
    d = F.degree
    if d < 1:
        raise InvalidInput("input must have positive degree in y")
    ch = F.ring.characteristic
    if ch and ch <= d:
        raise InvalidInput(f"characteristic {ch} must exceed deg_y F = {d}")
    if check_squarefree:
        from ._flint import is_squarefree_xy

        if not is_squarefree_xy(F):
            raise NotSquareFree("input has a repeated factor")
    return d


def pseudo_irreducible(F: YPoly, check_squarefree: bool = True) -> Analysis:
    """Run the stage loop on a monic ``F`` over the base field."""
    d = check_input(F, check_squarefree)
    state = initial_state(F.ring, d)
    out = Analysis(PSEUDO_IRREDUCIBLE, None, [], d, [state])
    while state.N > 1:
        psis = state.psis + (approximate_root(F, state.N),)
        state = replace(state, psis=psis)
        out.states[-1] = state
        exp = psi_expand(F, list(psis))
        out.expansions.append(exp)
        Hbar = boundary_from_expansion(exp, state)
        out.boundaries.append(Hbar)
        ed = pseudo_degeneracy_test(Hbar, state.N)
        if ed is None:
            out.verdict, out.stage = NOT_PSEUDO_IRREDUCIBLE, state.k
            return out
        if ed.N >= state.N:
            raise InvalidInput("no progress at a stage: input is not square-free")
        if ed.N * ed.q * ed.ell != state.N:
            raise InternalInvariant("N_k != N_(k-1) / (q_k l_k)")
        if state.k > 0 and ed.m <= 0:
            raise InternalInvariant("H_k is not Weierstrass for k >= 1")
        ring = state.ring.extend(ed.P, check=False)
        state = update_vl(state, ed, ring)
        out.data.append(ed)
        out.states.append(state)
    return out


# --------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class EquisingReport:
    verdict: str
    stage: int | None
    data: tuple[EdgeData, ...]
    e: int | None = None
    f: int | None = None
    B: tuple[int, ...] = ()
    M: tuple[int, ...] = ()
    C: tuple[int, ...] = ()
    Gamma: tuple[int, ...] = ()
    vF: int | None = None
    vFi: int | None = None

    @property
    def is_pseudo_irreducible(self) -> bool:
        return self.verdict == PSEUDO_IRREDUCIBLE


def invariants_from_data(data, d: int | None = None) -> EquisingReport:
    """Characteristic exponents, intersection multiset and discriminant valuations."""
    data = tuple(data)
    if not data:
        if d == 1:
            return EquisingReport(PSEUDO_IRREDUCIBLE, None, (), 1, 1, (1,), (), (1,), (), 0, 0)
        raise IncompleteData("no edge data")
    if data[-1].N != 1:
        raise IncompleteData(f"last N is {data[-1].N}, expected 1")
    g = len(data)
    qs = [ed.q for ed in data]
    ls = [ed.ell for ed in data]
    ms = [ed.m for ed in data]
    e, f = prod(qs), prod(ls)
    if d is not None and d != e * f:
        raise InternalInvariant(f"d = {d} but e*f = {e * f}")
    ehat = [e // prod(qs[:k]) for k in range(g + 1)]
    fhat = [f // prod(ls[:k]) for k in range(g + 1)]
    B = [e]
    M = []
    for k in range(1, g + 1):
        B.append(sum(ms[i - 1] * ehat[i] for i in range(1, k + 1)))
        M.append(sum(ms[i - 1] * ehat[i - 1] * ehat[i] for i in range(1, k + 1)))
    C = (B[0],) + tuple(B[k] for k in range(1, g + 1) if qs[k - 1] > 1)
    Gamma = []
    for k in range(1, g + 1):
        if ls[k - 1] > 1:
            Gamma += [M[k - 1]] * (fhat[k - 1] - fhat[k])
    vFi = sum((ehat[k - 1] - ehat[k]) * B[k] for k in range(1, g + 1) if qs[k - 1] > 1)
    vF = f * (
        sum((fhat[k - 1] - fhat[k]) * M[k - 1] for k in range(1, g + 1) if ls[k - 1] > 1) + vFi
    )
    return EquisingReport(
        PSEUDO_IRREDUCIBLE, None, data, e, f, tuple(B), tuple(M), C, tuple(sorted(Gamma)), vF, vFi
    )


def ehat_chain(report: EquisingReport) -> list[int]:
    """``gcd(B_0..B_k)`` for ``k = 0..g``."""
    out, acc = [], 0
    for b in report.B:
        acc = gcd(acc, b)
        out.append(acc)
    return out


# --------------------------------------------------------------------------
# non-monic input


@dataclass(frozen=True)
class MonicTransform:
    """How a monic polynomial was obtained from the input.

    ``kind`` is ``"identity"`` or ``"reciprocal"``; for the latter the input
    became ``u^(d-1) * Ft(x, y/u)`` with ``Ft = y^d F(x, (z*y + 1)/y)`` and
    ``u = F(x, z)``.
    """

    kind: str
    z: int | None = None
    unit: XPoly | None = None


def monic_reduce(F: YPoly) -> tuple[YPoly, MonicTransform]:
    """A monic polynomial with the same verdict and equisingularity type as ``F``."""
    if not F:
        raise ZeroPolynomial("zero polynomial")
    if F.is_monic():
        return F, MonicTransform("identity")
    R, d = F.ring, F.degree
    at0 = F.at_x0()
    if not any(at0):
        raise NoValidShift("F(0, y) vanishes identically")
    for z in range(d + 1):
        val = R.zero
        for c in reversed(at0):
            val = val * z + c
        if val:
            break
    else:
        raise NoValidShift("no z in 0..d with F(0, z) != 0")
    # Ft = sum a_i (z y + 1)^i y^(d - i)
    y = YPoly.y(R)
    lin = y * z + 1
    Ft = YPoly(R, [])
    pw = YPoly.constant(R, 1)
    for i, a in enumerate(F.coeffs):
        Ft = Ft + (pw * a).shift_y(d - i)
        pw = pw * lin
    u = Ft.leading()
    coeffs = [Ft[i] * u ** (d - 1 - i) for i in range(d)] + [XPoly.constant(R, 1)]
    return YPoly(R, coeffs), MonicTransform("reciprocal", z, u)


# --------------------------------------------------------------------------
# one-call entry point


def analyze(
    F: YPoly, check_squarefree: bool = True, reduce_monic: bool = True
) -> tuple[EquisingReport, Analysis, YPoly, MonicTransform]:
    """Reduce to monic (if allowed), run the stage loop and compute invariants."""
    if not F:
        raise ZeroPolynomial("zero polynomial")
    ch = F.ring.characteristic
    if ch and ch <= F.degree:
        raise InvalidInput(f"characteristic {ch} must exceed deg_y F = {F.degree}")
    if reduce_monic:
        G, tr = monic_reduce(F)
    else:
        G, tr = F, MonicTransform("identity")
    an = pseudo_irreducible(G, check_squarefree)
    if an.is_pseudo_irreducible:
        rep = invariants_from_data(an.data, an.degree)
    else:
        rep = EquisingReport(NOT_PSEUDO_IRREDUCIBLE, an.stage, tuple(an.data))
    return rep, an, G, tr
