"""Jack polynomials P_lambda^(1/g) as eigenfunctions of the Sutherland operator.

    H = sum_i (x_i d_i)^2 + g sum_{i<j} (x_i + x_j)/(x_i - x_j) (x_i d_i - x_j d_j)

``H`` is triangular on the monomial basis, with diagonal entry h(mu) at
m_mu, so P_lambda follows from a triangular solve down the dominance order.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from .partitions import Partition, as_partition, lower_set, part_difference
from .scalars import SymbolicField, pochhammer
from .sympoly import RawPoly, SymPoly, m_basis, restrict_tail_to_one

__all__ = [
    "JackExpansion",
    "SpectralCollisionError",
    "apply_H",
    "apply_H_direct",
    "h_eigenvalue",
    "jack",
    "jack_poly",
    "eval_at_ones",
    "restricted_jack",
]

_SYMBOLIC = SymbolicField()


class SpectralCollisionError(ZeroDivisionError):
    """h(lambda) == h(mu) for some mu below lambda at the chosen g."""

    def __init__(self, lam, mu, g):
        super().__init__(f"h{lam} == h{mu} at g={g}")
        self.lam = lam
        self.mu = mu


@dataclass(frozen=True)
class JackExpansion:
    lam: Partition
    n: int
    coefficients: Mapping[Partition, object] = dc_field(hash=False, compare=True)

    def as_sympoly(self) -> SymPoly:
        return SymPoly(self.n, dict(self.coefficients))


# ---------------------------------------------------------------------------
# the operator H
# ---------------------------------------------------------------------------

def _divide_by_difference(terms: Dict[tuple, object], i: int, j: int) -> Dict[tuple, object]:
    """Exact quotient of a raw polynomial by (x_i - x_j), synthetic division in x_i."""
    by_power: Dict[int, Dict[tuple, object]] = {}
    for exps, c in terms.items():
        rest = exps[:i] + (0,) + exps[i + 1:]
        by_power.setdefault(exps[i], {})[rest] = c
    if not by_power:
        return {}
    top = max(by_power)
    quotient: Dict[int, Dict[tuple, object]] = {}
    carry: Dict[tuple, object] = {}
    for k in range(top, -1, -1):
        # coefficient of x_i^k in D equals q_{k-1} - x_j q_k
        cur = dict(by_power.get(k, {}))
        for rest, c in carry.items():
            shifted = rest[:j] + (rest[j] + 1,) + rest[j + 1:]
            cur[shifted] = cur.get(shifted, 0) + c
        cur = {r: c for r, c in cur.items() if c != 0}
        if k == 0:
            if cur:
                raise ArithmeticError(f"nonzero remainder dividing by x_{i + 1} - x_{j + 1}")
            break
        quotient[k - 1] = cur
        carry = cur
    out: Dict[tuple, object] = {}
    for k, poly in quotient.items():
        for rest, c in poly.items():
            key = rest[:i] + (k,) + rest[i + 1:]
            out[key] = c
    return out


def _H_parts(raw: RawPoly) -> Tuple[RawPoly, RawPoly]:
    """(Euler-squared part, coefficient of g) of H applied to a raw polynomial."""
    n = raw.n
    euler = {exps: c * sum(a * a for a in exps) for exps, c in raw.terms.items()}
    cross: Dict[tuple, object] = {}
    for i in range(n):
        for j in range(i + 1, n):
            num = {exps: c * (exps[i] - exps[j]) for exps, c in raw.terms.items() if exps[i] != exps[j]}
            q = _divide_by_difference(num, i, j)
            for exps, c in q.items():
                for shift in (i, j):
                    key = exps[:shift] + (exps[shift] + 1,) + exps[shift + 1:]
                    cross[key] = cross.get(key, 0) + c
    return RawPoly(n, euler), RawPoly(n, cross)


@lru_cache(maxsize=None)
def _H_column(nu: Partition) -> Tuple[Tuple[Partition, int, int], ...]:
    """H m_nu = sum_mu (a + b g) m_mu, as (mu, a, b) with integer a, b."""
    euler, cross = _H_parts(m_basis(nu).expand_raw())
    e = euler.to_sympoly().terms
    c = cross.to_sympoly().terms
    keys = sorted(set(e) | set(c), reverse=True)
    return tuple((mu, e.get(mu, 0), c.get(mu, 0)) for mu in keys)


def apply_H(p: SymPoly, field=_SYMBOLIC) -> SymPoly:
    """H p using the cached monomial-basis columns of H."""
    g = field.g
    out: dict = {}
    for nu, c in p.terms.items():
        for mu, a, b in _H_column(nu):
            v = c * (a + b * g) if b else c * a
            out[mu] = out[mu] + v if mu in out else v
    return SymPoly(p.n, out)


def apply_H_direct(p: SymPoly, field=_SYMBOLIC) -> SymPoly:
    """H p computed on the raw expansion of p itself (no caching)."""
    euler, cross = _H_parts(p.expand_raw())
    return euler.to_sympoly() + cross.to_sympoly() * field.g


def h_eigenvalue(lam, field=_SYMBOLIC):
    lam = as_partition(lam)
    n = len(lam)
    a = sum(p * p for p in lam)
    b = sum(p * (n + 1 - 2 * i) for i, p in enumerate(lam, start=1))
    return field.one * a + field.g * b


# ---------------------------------------------------------------------------
# Jack polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _jack_cached(lam: Partition, field) -> JackExpansion:
    g = field.g
    lower = lower_set(lam)
    h_lam = h_eigenvalue(lam, field)
    coeffs: Dict[Partition, object] = {lam: field.one}
    # rows[mu] accumulates sum_{nu above mu} v_nu H_{nu, mu}
    rows: Dict[Partition, object] = {}
    diag: Dict[Partition, object] = {}
    allowed = set(lower)

    def push(nu):
        v = coeffs[nu]
        for mu, a, b in _H_column(nu):
            if mu == nu:
                diag[nu] = a + b * g
                continue
            if mu not in allowed:
                raise ArithmeticError(f"H m{nu} leaves the lower set of {lam}")
            t = v * (a + b * g)
            rows[mu] = rows[mu] + t if mu in rows else t

    push(lam)
    if diag.get(lam, 0) != h_lam:
        raise ArithmeticError(f"diagonal of H at {lam} differs from h(lambda)")
    for mu in lower[1:]:
        gap = h_lam - h_eigenvalue(mu, field)
        if gap == 0:
            raise SpectralCollisionError(lam, mu, getattr(field, "g0", "g"))
        rhs = rows.get(mu, 0)
        coeffs[mu] = rhs / gap if rhs != 0 else field.zero
        push(mu)
        if diag.get(mu, 0) != h_eigenvalue(mu, field):
            raise ArithmeticError(f"diagonal of H at {mu} differs from h(mu)")
    coeffs = {mu: c for mu, c in coeffs.items() if c != 0}
    return JackExpansion(lam, len(lam), coeffs)


def jack(lam, n: int | None = None, field=_SYMBOLIC) -> JackExpansion:
    """Monic Jack polynomial P_lambda^(1/g) in the monomial basis."""
    lam = as_partition(lam)
    if n is not None and n != len(lam):
        raise ValueError(f"partition {lam} does not have length {n}")
    return _jack_cached(lam, field)


def jack_poly(lam, field=_SYMBOLIC) -> SymPoly:
    return jack(lam, field=field).as_sympoly()


def eval_at_ones(lam, n: int | None = None, field=_SYMBOLIC):
    """P_lambda(1, ..., 1) by the product formula over pairs i < j."""
    lam = as_partition(lam)
    n = len(lam)
    g = field.g
    out = field.one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = part_difference(lam, i, j)
            if d:
                out = out * pochhammer(g * (j - i + 1), d) / pochhammer(g * (j - i), d)
    return out


def restricted_jack(lam, k: int, field=_SYMBOLIC) -> RawPoly:
    """P_lambda(x_1, ..., x_k, 1, ..., 1)."""
    return restrict_tail_to_one(jack_poly(lam, field), k)
