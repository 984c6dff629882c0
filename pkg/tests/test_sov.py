from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from conftest import G, SPECIAL_G, to_sympy
from oracles import Y, Z, a_oracle, q0_oracle, sym_to_expr, symz_to_expr
from jacksov.jack import eval_at_ones, jack, jack_poly, restricted_jack
from jacksov.partitions import enumerate_partitions
from jacksov.qop import SymZPoly, ZPoly, q_eigenvalue_sum, qz_apply
from jacksov.scalars import SpecializedField, SymbolicField
from jacksov.sov import (
    MultiZPoly,
    a_k_apply,
    q0_prime_apply,
    reconstruct,
    separate_via_chain,
    separate_via_q,
)
from jacksov.sympoly import E_basis, RawPoly, SymPoly, elementary, m_basis, restrict_last_to_zero

F = SymbolicField()
g = F.g
half = Fraction(1, 2)


def parts(max_n, max_w, min_n=1):
    return [lam for n in range(min_n, max_n + 1) for w in range(max_w + 1) for lam in enumerate_partitions(n, w)]


def exact(p):
    return p.map_coeffs(lambda c: F.one * c)


def test_separation_examples():
    assert separate_via_q(SymPoly.constant(2, F.one)) == MultiZPoly(2, {(0, 0): F.one})
    expected = MultiZPoly.from_factors(F.one * 2, [ZPoly([half, half])] * 2)
    assert separate_via_q(jack_poly((1, 0))) == expected
    assert expected.terms == {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): half}
    assert separate_via_q(jack_poly((1, 1))) == MultiZPoly(2, {(1, 1): F.one})


def test_a_k_examples():
    f = restricted_jack((1, 0), 2)
    got = a_k_apply(f, 2, 1)
    x1_plus_1 = SymPoly(1, {(1,): F.one, (0,): F.one})
    assert got == SymZPoly(1, {0: x1_plus_1 * half, 1: x1_plus_1 * half})
    one = SymPoly.constant(1, F.one)
    assert a_k_apply(one, 3, 0) == SymZPoly(0, {0: SymPoly.constant(0, F.one)})


def test_chain_examples():
    assert separate_via_chain(jack_poly((1, 0))) == separate_via_q(jack_poly((1, 0)))
    E = exact(E_basis((2, 0)))
    assert separate_via_chain(E) == separate_via_q(E)
    assert separate_via_chain(SymPoly.constant(2, F.one)) == MultiZPoly(2, {(0, 0): F.one})


def test_q0_prime_examples():
    assert q0_prime_apply(SymPoly.constant(1, F.one)) == SymPoly.constant(2, F.one)
    assert q0_prime_apply(exact(m_basis((1,)))) == exact(m_basis((1, 0))) * half
    E = exact(elementary(2, 3))
    assert q0_prime_apply(restrict_last_to_zero(E)) == qz_apply(E, F).coeffs.get(0, SymPoly(3, {}))


def test_reconstruct_examples():
    assert reconstruct((1, 0)).coefficients == {(1, 0): 1}
    assert reconstruct((1, 1)).coefficients == {(1, 1): 1}
    assert reconstruct((4,)).coefficients == {(4,): 1}


def test_stage_argument_checks():
    with pytest.raises(ValueError):
        a_k_apply(exact(m_basis((1, 0))), 3, 0)
    with pytest.raises(ValueError):
        a_k_apply(exact(m_basis((1, 0, 0, 0))), 2, 3)


@pytest.mark.parametrize("n,k,lam", [(n, k, lam) for n in (2, 3) for k in range(n)
                                      for w in range(4) for lam in enumerate_partitions(k + 1, w)])
def test_a_k_matches_oracle(n, k, lam):
    f = exact(m_basis(lam))
    got = symz_to_expr(a_k_apply(f, n, k, F), ys=Y[:k] if k else ())
    assert sp.simplify(got - a_oracle(f, n, k)) == 0


@pytest.mark.parametrize("lam", parts(3, 3))
def test_q0_prime_matches_oracle(lam):
    p = exact(m_basis(lam))
    got = sym_to_expr(q0_prime_apply(p, F), Y)
    assert sp.simplify(got - q0_oracle(p)) == 0


@pytest.mark.parametrize("lam", parts(3, 5))
def test_separation(lam):
    q = q_eigenvalue_sum(lam)
    expected = MultiZPoly.from_factors(eval_at_ones(lam), [q] * len(lam))
    assert separate_via_q(jack_poly(lam)) == expected


@pytest.mark.parametrize("lam", parts(3, 5))
def test_chain_agrees_on_E_basis(lam):
    E = exact(E_basis(lam))
    assert separate_via_chain(E) == separate_via_q(E)


@pytest.mark.parametrize("lam", parts(3, 5))
def test_stage_identity(lam):
    q = q_eigenvalue_sum(lam)
    n = len(lam)
    for k in range(n):
        lhs = a_k_apply(restricted_jack(lam, k + 1), n, k)
        assert lhs == SymZPoly.from_scaled(q, restricted_jack(lam, k).to_sympoly())


@pytest.mark.parametrize("lam", parts(3, 5, min_n=2))
def test_q0_factorisation(lam):
    E = exact(E_basis(lam))
    z0 = qz_apply(E, F).coeffs.get(0, SymPoly(len(lam), {}))
    assert q0_prime_apply(restrict_last_to_zero(E)) == z0


@pytest.mark.parametrize("lam", parts(4, 6))
def test_reconstruction(lam):
    assert reconstruct(lam) == jack(lam)


@given(st.sampled_from(SPECIAL_G), st.sampled_from(parts(3, 5, min_n=2)))
def test_reconstruction_specialized(g0, lam):
    field = SpecializedField(g0)
    assert reconstruct(lam, field=field) == jack(lam, field=field)


@given(st.sampled_from(parts(3, 4, min_n=2)), st.lists(st.fractions(-2, 2, max_denominator=3), min_size=3, max_size=3))
def test_multizpoly_evaluation(lam, zs):
    field = SpecializedField(2)
    n = len(lam)
    sep = separate_via_q(jack_poly(lam, field), field=field)
    q = q_eigenvalue_sum(lam, field=field)
    zs = zs[:n]
    expected = eval_at_ones(lam, field=field)
    for z in zs:
        expected *= q(z)
    assert sep(zs) == expected
    assert (sep - sep).is_zero()
