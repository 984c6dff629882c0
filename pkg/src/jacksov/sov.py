"""Separation of variables for Jack polynomials.

``separate_via_q`` applies Q_{z_n}, ..., Q_{z_1} and evaluates at
y = (1, ..., 1). ``separate_via_chain`` reaches the same result through
the factorised chain, where each factor A_{k+1} removes one variable:

    e_j(x_1..x_{k+1}) -> sum_{S in {0..k}, |S|=j} (1 + sum_{i in S} eta_i) prod_{i in S} y_i,
    y_0 = 1,
    eta^m -> (z_{k+1}-1)^{|m|} ((n-k)g)_{m_0} prod_{i>=1} (g)_{m_i} / (ng)_{|m|}.

``q0_prime_apply`` lifts a symmetric polynomial in n-1 variables to n
variables. The lift writes the input in e_i(x') and substitutes
e_i(x') = sum_j xihat_j [e_i(y)]_{y_j=0}, with xihat^k mapped to its
Dirichlet moment prod (g)_{k_i} / (ng)_{|k|}. Iterating the lift
rebuilds P_lambda one variable at a time.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, Mapping, Tuple

from . import _subst
from .jack import JackExpansion
from .partitions import as_partition, flat_and_natural
from .qop import SymZPoly, ZPoly, beta_lambda, qz_apply
from .scalars import SymbolicField
from .sympoly import RawPoly, SymPoly, as_sympoly, evaluate, expand_in_e

__all__ = [
    "MultiZPoly",
    "separate_via_q",
    "a_k_apply",
    "separate_via_chain",
    "q0_prime_apply",
    "reconstruct",
]

_SYMBOLIC = SymbolicField()


class MultiZPoly:
    """Sparse polynomial in z_1..z_n: exponent tuple -> scalar."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Tuple[int, ...], object] | None = None):
        self.n = n
        self.terms: Dict[Tuple[int, ...], object] = {
            k: v for k, v in sorted((terms or {}).items()) if v != 0
        }

    @classmethod
    def from_factors(cls, c, factors) -> "MultiZPoly":
        """c * prod_k q_k(z_k)."""
        terms = {(): c}
        for q in factors:
            new = {}
            for key, v in terms.items():
                for j, a in enumerate(q.coeffs):
                    if a != 0:
                        new[key + (j,)] = v * a
            terms = new
        return cls(len(factors), terms)

    def __eq__(self, other):
        if not isinstance(other, MultiZPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __sub__(self, other: "MultiZPoly") -> "MultiZPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] - v if k in out else -v
        return MultiZPoly(self.n, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, zs):
        total = 0
        for key, c in self.terms.items():
            t = c
            for z, e in zip(zs, key):
                t = t * z ** e
            total = total + t
        return total

    def __repr__(self):
        return f"MultiZPoly({self.n}: {self.terms})"


def _ones(p: SymPoly):
    return evaluate(p, (1,) * p.n) if p.n else p.terms.get((), 0)


def separate_via_q(p: SymPoly, n: int | None = None, field=_SYMBOLIC) -> MultiZPoly:
    """rho_0 Q_{z_1} ... Q_{z_n} p, with Q_{z_n} acting first."""
    n = p.n
    state: Dict[Tuple[int, ...], SymPoly] = {(): p}
    for _ in range(n):
        new: Dict[Tuple[int, ...], SymPoly] = {}
        for key, poly in state.items():
            for j, c in qz_apply(poly, field).coeffs.items():
                k2 = (j,) + key
                new[k2] = new[k2] + c if k2 in new else c
        state = new
    return MultiZPoly(n, {key: _ones(poly) for key, poly in state.items()})


def a_k_apply(f, n: int, k: int, field=_SYMBOLIC) -> SymZPoly:
    """A_{k+1}: symmetric in k+1 variables -> symmetric in k variables, polynomial in z_{k+1}."""
    f = as_sympoly(f)
    if f.n != k + 1:
        raise ValueError(f"A_{k + 1} acts on {k + 1} variables, got {f.n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"stage k={k} out of range for n={n}")
    raw = _subst.apply_operator("A", n, k, expand_in_e(f), field)
    return SymZPoly(k, {j: SymPoly(k, terms) for j, terms in raw.items()})


def separate_via_chain(p: SymPoly, n: int | None = None, field=_SYMBOLIC) -> MultiZPoly:
    """A_1 A_2 ... A_n p, with A_n acting first."""
    n = p.n
    state: Dict[Tuple[int, ...], SymPoly] = {(): p}
    for k in range(n - 1, -1, -1):
        new: Dict[Tuple[int, ...], SymPoly] = {}
        for key, poly in state.items():
            for j, c in a_k_apply(poly, n, k, field).coeffs.items():
                k2 = (j,) + key
                new[k2] = new[k2] + c if k2 in new else c
        state = new
    return MultiZPoly(n, {key: poly.terms.get((), 0) for key, poly in state.items()})


def q0_prime_apply(p, field=_SYMBOLIC) -> SymPoly:
    """Q0': symmetric in n-1 variables -> symmetric in n variables."""
    p = as_sympoly(p)
    n = p.n + 1
    raw = _subst.apply_operator("Q0", n, 0, expand_in_e(p), field)
    return SymPoly(n, raw.get(0, {}))


@lru_cache(maxsize=None)
def _reconstruct(lam: Tuple[int, ...], field) -> SymPoly:
    if len(lam) == 1:
        return SymPoly(1, {lam: field.one})
    _, nat = flat_and_natural(lam)
    lifted = q0_prime_apply(_reconstruct(nat, field), field)
    return (lifted * beta_lambda(lam, field=field)).times_en_power(lam[-1])


def reconstruct(lam, n: int | None = None, field=_SYMBOLIC) -> JackExpansion:
    """P_lambda = beta_lambda e_n^{lambda_n} Q0'[P_{lambda natural}], down to x_1^{lambda_1}."""
    lam = as_partition(lam)
    if not lam:
        raise ValueError("reconstruct needs at least one variable")
    p = _reconstruct(lam, field)
    return JackExpansion(lam, len(lam), dict(p.terms))
