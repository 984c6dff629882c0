from fractions import Fraction
from itertools import combinations

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import G, SPECIAL_G, to_sympy
from jacksov.jack import (
    SpectralCollisionError,
    apply_H,
    apply_H_direct,
    eval_at_ones,
    h_eigenvalue,
    jack,
    jack_poly,
    restricted_jack,
)
from jacksov.partitions import enumerate_partitions, lower_set
from jacksov.scalars import SpecializedField, SymbolicField, specialize
from jacksov.sympoly import RawPoly, SymPoly, m_basis, restrict_last_to_zero

F = SymbolicField()
g = F.g
X = sp.symbols("x1:5")


def sym_expr(p: SymPoly):
    return sum((to_sympy(c) * sp.Add(*[sp.prod([X[i] ** e for i, e in enumerate(k)])
                                       for k in p.expand_raw().terms if sorted(k, reverse=True) == list(lam)])
                for lam, c in p.terms.items()), sp.Integer(0))


def H_sympy(expr, n):
    """Sutherland operator written out directly with sympy derivatives."""
    D = [lambda f, i=i: X[i] * sp.diff(f, X[i]) for i in range(n)]
    out = sum(D[i](D[i](expr)) for i in range(n))
    for i, j in combinations(range(n), 2):
        out += G * (X[i] + X[j]) / (X[i] - X[j]) * (D[i](expr) - D[j](expr))
    return sp.simplify(sp.cancel(sp.together(out)))


def schur(lam):
    n = len(lam)
    num = sp.Matrix(n, n, lambda i, j: X[j] ** (lam[i] + n - 1 - i))
    den = sp.Matrix(n, n, lambda i, j: X[j] ** (n - 1 - i))
    return sp.cancel(num.det() / den.det())


small = [lam for n in (1, 2, 3) for w in range(5) for lam in enumerate_partitions(n, w)]


def test_apply_H_examples():
    assert apply_H(m_basis((1, 1)), F) == m_basis((1, 1)) * 2
    assert apply_H(m_basis((2, 0)), F) == m_basis((2, 0)) * (4 + 2 * g) + m_basis((1, 1)) * (4 * g)
    assert apply_H(SymPoly.constant(2, 1), F).is_zero()


def test_h_eigenvalue_examples():
    assert h_eigenvalue((0, 0, 0), F) == 0
    assert h_eigenvalue((1, 0), F) == 1 + g
    assert h_eigenvalue((2, 0), F) == 4 + 2 * g


def test_jack_examples():
    assert jack((1, 0)).coefficients == {(1, 0): 1}
    assert jack((2, 0)).coefficients == {(2, 0): 1, (1, 1): 2 * g / (1 + g)}
    assert jack((1, 1)).coefficients == {(1, 1): 1}


def test_eval_at_ones_examples():
    assert eval_at_ones((0, 0, 0)) == 1
    assert eval_at_ones((1, 0)) == 2
    assert eval_at_ones((1, 1)) == 1


def test_restricted_examples():
    assert restricted_jack((1, 0), 1) == RawPoly(1, {(1,): 1, (0,): 1})
    assert restricted_jack((1, 1), 1) == RawPoly(1, {(1,): 1})
    for lam in small:
        assert restricted_jack(lam, 0).terms.get((), 0) == eval_at_ones(lam)


def test_jack_rejects_wrong_length():
    with pytest.raises(ValueError):
        jack((2, 1), n=3)


@pytest.mark.parametrize("lam", [lam for lam in small if len(lam) <= 2 or sum(lam) <= 3])
def test_apply_H_matches_sympy(lam):
    p = m_basis(lam)
    n = len(lam)
    assert sp.simplify(sym_expr(apply_H(p, F)) - H_sympy(sym_expr(p), n)) == 0


@pytest.mark.parametrize("lam", small)
def test_two_H_implementations_agree(lam):
    p = m_basis(lam)
    assert apply_H(p, F) == apply_H_direct(p, F)


@pytest.mark.parametrize("lam", [lam for n in (1, 2, 3) for w in range(6) for lam in enumerate_partitions(n, w)])
def test_jack_at_g_one_is_schur(lam):
    P = jack_poly(lam, SpecializedField(1))
    assert sp.expand(sym_expr(P) - schur(lam)) == 0


@pytest.mark.parametrize("lam", [lam for n in (2, 3) for w in range(6) for lam in enumerate_partitions(n, w)])
def test_specialized_matches_symbolic(lam):
    P = jack_poly(lam, F)
    for g0 in SPECIAL_G:
        Q = jack_poly(lam, SpecializedField(g0))
        assert Q == P.map_coeffs(lambda c: specialize(c, g0))


@pytest.mark.parametrize("lam", [lam for n in (2, 3, 4) for w in range(6) for lam in enumerate_partitions(n, w)])
def test_jack_structure(lam):
    P = jack_poly(lam, F)
    assert P.terms[lam] == 1
    assert set(P.terms) <= set(lower_set(lam))
    assert apply_H(P, F) == P * h_eigenvalue(lam, F)
    assert P.expand_raw().evaluate((1,) * len(lam)) == eval_at_ones(lam)


@pytest.mark.parametrize("lam", [lam for n in (2, 3, 4) for w in range(6) for lam in enumerate_partitions(n, w)])
def test_restriction_to_zero(lam):
    # P at x_n = 0 for the flat partition equals P of the natural partition
    if lam[-1] != 0:
        return
    assert restrict_last_to_zero(jack_poly(lam, F)) == jack_poly(lam[:-1], F)


def test_spectral_collision_detected():
    # h((2,0)) = h((1,1)) when 4 + 2g = 2, i.e. g = -1
    with pytest.raises(SpectralCollisionError):
        jack((2, 0), field=SpecializedField(-1))


@given(st.integers(2, 3).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=n, max_size=n).map(lambda p: tuple(sorted(p, reverse=True)))),
    st.fractions(min_value=Fraction(1, 4), max_value=5, max_denominator=5))
def test_homogeneity_and_shift(lam, g0):
    field = SpecializedField(g0)
    P = jack_poly(lam, field)
    assert P.is_homogeneous() and P.degree() == sum(lam)
    shifted = tuple(p + 1 for p in lam)
    assert jack_poly(shifted, field) == P.times_en_power(1)
