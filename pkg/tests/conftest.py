import sys
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import HealthCheck, settings

from jacksov.scalars import RatFunc, SpecializedField, SymbolicField

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

G = sp.Symbol("g")
SYM = SymbolicField()
SPECIAL_G = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


def to_sympy(c):
    """Independent representation of a scalar for oracle comparisons."""
    if isinstance(c, RatFunc):
        num = sum(sp.Integer(a) * G**i for i, a in enumerate(c.num))
        den = sum(sp.Integer(a) * G**i for i, a in enumerate(c.den))
        return num / den
    return sp.Rational(Fraction(c).numerator, Fraction(c).denominator)


def same(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


@pytest.fixture
def sym():
    return SYM


@pytest.fixture(params=SPECIAL_G, ids=lambda g: f"g={g}")
def special(request):
    return SpecializedField(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
