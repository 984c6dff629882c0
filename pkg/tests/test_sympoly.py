from fractions import Fraction
from itertools import combinations, permutations

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from jacksov.partitions import enumerate_partitions, lower_set
from jacksov.sympoly import (
    E_basis,
    RawPoly,
    SymPoly,
    elementary,
    evaluate,
    expand_in_e,
    from_e_expansion,
    m_basis,
    mul,
    restrict_last_to_zero,
    restrict_tail_to_one,
)

X = sp.symbols("x1:5")


def m_sympy(lam):
    n = len(lam)
    return sum(sp.prod([X[i] ** e for i, e in enumerate(p)]) for p in set(permutations(lam)))


def e_sympy(r, n):
    return sum((sp.prod(c) for c in combinations(X[:n], r)), sp.Integer(0))


def to_expr(p: SymPoly):
    return sum((sp.Rational(c) * m_sympy(lam) for lam, c in p.terms.items()), sp.Integer(0))


partitions = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=n, max_size=n).map(lambda p: tuple(sorted(p, reverse=True)))
)


@st.composite
def sympolys(draw, n):
    lams = [lam for w in range(4) for lam in enumerate_partitions(n, w)]
    chosen = draw(st.lists(st.sampled_from(lams), max_size=4, unique=True))
    return SymPoly(n, {lam: Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 3))) for lam in chosen})


def test_m_basis_and_raw_expansion():
    assert m_basis((1, 0)).terms == {(1, 0): 1}
    assert m_basis((1, 0)).expand_raw().terms == {(1, 0): 1, (0, 1): 1}
    assert m_basis((1, 1)).expand_raw().terms == {(1, 1): 1}


def test_elementary_examples():
    assert elementary(0, 3) == SymPoly.constant(3, 1)
    assert elementary(2, 2) == m_basis((1, 1))
    assert elementary(1, 3) == m_basis((1, 0, 0))


def test_E_basis_examples():
    assert E_basis((1, 0)) == m_basis((1, 0))
    assert E_basis((1, 1)) == m_basis((1, 1))
    assert E_basis((2, 0)) == m_basis((2, 0)) + m_basis((1, 1)) * 2


def test_mul_examples():
    one = SymPoly.constant(2, 1)
    p = m_basis((2, 1))
    assert one * p == p
    assert mul(m_basis((1, 0)), m_basis((1, 0))) == m_basis((2, 0)) + m_basis((1, 1)) * 2
    assert mul(elementary(2, 2), elementary(2, 2)) == m_basis((2, 2))


def test_expand_in_e_examples():
    assert expand_in_e(m_basis((1, 1))) == {(0, 1): 1}
    assert expand_in_e(m_basis((2, 0))) == {(2, 0): 1, (0, 1): -2}
    assert expand_in_e(SymPoly.constant(2, 1)) == {(0, 0): 1}


def test_evaluate_examples():
    z = Fraction(7, 3)
    assert evaluate(m_basis((1, 0)), (1, 1)) == 2
    assert evaluate(m_basis((1, 1)), (z, 1)) == z
    assert evaluate(elementary(2, 2), (3, 4)) == 12


def test_restriction_examples():
    assert restrict_tail_to_one(m_basis((1, 0)), 1) == RawPoly(1, {(1,): 1, (0,): 1})
    p = m_basis((2, 1, 0))
    assert restrict_tail_to_one(p, 3) == p.expand_raw()
    assert restrict_tail_to_one(m_basis((1, 1)), 0) == RawPoly(0, {(): 1})


@pytest.mark.parametrize("lam", [lam for n in (1, 2, 3, 4) for w in range(6) for lam in enumerate_partitions(n, w)])
def test_E_basis_matches_sympy(lam):
    n = len(lam)
    exps = [lam[i] - (lam[i + 1] if i + 1 < n else 0) for i in range(n)]
    expr = sp.expand(sp.prod([e_sympy(r + 1, n) ** k for r, k in enumerate(exps)]))
    E = E_basis(lam)
    assert sp.expand(to_expr(E) - expr) == 0
    assert E.terms[lam] == 1 and set(E.terms) <= set(lower_set(lam))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(sympolys(n), sympolys(n))))
def test_mul_matches_sympy(pq):
    p, q = pq
    assert sp.expand(to_expr(mul(p, q)) - to_expr(p) * to_expr(q)) == 0
    assert mul(p, q) == mul(q, p)


@given(st.integers(1, 4).flatmap(sympolys))
def test_e_expansion_round_trip(p):
    assert from_e_expansion(p.n, expand_in_e(p)) == p


@given(st.integers(1, 3).flatmap(sympolys), st.lists(st.fractions(-3, 3, max_denominator=4), min_size=3, max_size=3))
def test_evaluate_matches_sympy(p, pt):
    pt = pt[: p.n]
    expr = to_expr(p).subs({X[i]: sp.Rational(v.numerator, v.denominator) for i, v in enumerate(pt)})
    assert sp.Rational(evaluate(p, pt)) == expr


@given(st.integers(2, 4).flatmap(sympolys))
def test_restrict_last_to_zero(p):
    n = p.n
    expr = to_expr(p).subs({X[n - 1]: 0})
    assert sp.expand(to_expr(restrict_last_to_zero(p)) - expr) == 0


@given(st.integers(1, 3).flatmap(sympolys))
def test_raw_round_trip(p):
    raw = p.expand_raw()
    assert raw.is_symmetric() and raw.to_sympoly() == p
