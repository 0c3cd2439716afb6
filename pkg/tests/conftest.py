from __future__ import annotations

import pytest

from equising.cli import parse_poly
from equising.ring import QQ, PrimeField, TowerRing, UPoly, invert

EX1 = "y^6 - 3*x^3*y^4 - 2*x^2*y^4 + 3*x^6*y^2 + x^4*y^2 - x^9 + 2*x^8 - x^7"
EX2 = (
    "y^6 - x^6*y^4 - 2*x^4*y^4 - 2*x^2*y^4 + 2*x^10*y^2 + 3*x^8*y^2"
    " - 2*x^6*y^2 + x^4*y^2 - x^14 + 2*x^12 - x^10"
)
EX3 = "(y+1)^6 - 3*x^3*(y+1)^4 - 2*(y+1)^4 + 3*x^6*(y+1)^2 + (y+1)^2 - x^9 + 2*x^6 - x^3"
GOLDEN = {"ex1": EX1, "ex2": EX2, "ex3": EX3}


def poly(text: str, field=QQ):
    return parse_poly(text, field)


def cubic_ring(base=QQ):
    """``K[z1]/(z1^3 - z1)``, the first stage ring of the worked examples."""
    R0 = TowerRing(base)
    return R0.extend(UPoly(R0, [0, -1, 0, 1]))


def alpha_ex1(R1):
    z = R1.gen
    return (3 * z ** 2 + 1) * invert((3 * z ** 2 - 1) ** 2)


def alpha_ex2(R1):
    z = R1.gen
    return 4 * z ** 2 * invert((3 * z ** 2 - 1) ** 2)


@pytest.fixture
def R1():
    return cubic_ring()


@pytest.fixture(params=[QQ, PrimeField(101)], ids=["QQ", "GF101"])
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
