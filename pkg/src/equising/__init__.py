"""Pseudo-irreducibility test and equisingularity invariants for ``F(x, y)``.

Typical use::

    from equising import parse_poly, analyze
    rep, *_ = analyze(parse_poly("y^2 - x^3"))
    rep.C, rep.Gamma, rep.vF
"""
from .cli import parse_poly
from .errors import EquisingError, InternalInvariant, InvalidInput
from .newton import EdgeData, newton_polygon, pseudo_degeneracy_test
from .oracle import BranchSpec, branch_oracle, disc_valuation
from .pipeline import (
    NOT_PSEUDO_IRREDUCIBLE,
    PSEUDO_IRREDUCIBLE,
    EquisingReport,
    analyze,
    invariants_from_data,
    pseudo_irreducible,
)
from .ring import QQ, PrimeField, TowerRing, field_from_spec
from .series import XPoly, YPoly

__all__ = [
    "BranchSpec",
    "EdgeData",
    "EquisingError",
    "EquisingReport",
    "InternalInvariant",
    "InvalidInput",
    "NOT_PSEUDO_IRREDUCIBLE",
    "PSEUDO_IRREDUCIBLE",
    "PrimeField",
    "QQ",
    "TowerRing",
    "XPoly",
    "YPoly",
    "analyze",
    "branch_oracle",
    "disc_valuation",
    "field_from_spec",
    "invariants_from_data",
    "newton_polygon",
    "parse_poly",
    "pseudo_degeneracy_test",
    "pseudo_irreducible",
]
