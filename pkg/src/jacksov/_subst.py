"""Shared engine for the three substitution-type operators.

Each operator acts on a symmetric polynomial written in elementary
symmetric functions. Every e_i is replaced by an integer polynomial in
output variables y and auxiliary variables (eta or xi-hat). The product is
expanded exactly with packed integer keys. Each auxiliary monomial is then
mapped to a ratio of Pochhammer symbols in g, times (z - 1)^{degree} when
the operator carries a spectral variable.

Operators handled (``kind``):

``"Q"``   Q_z on n variables: e_i -> sum_{|S|=i} y_S (1 + sum_{s in S} eta_s),
          eta^k -> (z-1)^{|k|} prod (g)_{k_i} / (ng)_{|k|}.
``"A"``   the chain factor acting on k+1 variables inside an n-variable
          problem: as ``"Q"`` but with an extra slot 0 whose y is fixed to 1,
          and eta_0 weighted by ((n-k)g)_{m_0}.
``"Q0"``  Q0' from n-1 to n variables:
          e_i(x') -> sum_j xihat_j e_i(y)|_{y_j=0},
          xihat^k -> prod (g)_{k_i} / (ng)_{|k|}, no z.

Results are cached per (kind, n, k, e-exponent vector) in integer form,
independently of the coefficient field, and separately per field after
conversion.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Tuple

from .kernels import Packing, sparse_mul, sparse_pow
from .scalars import IntPoly, ipoly_add, ipoly_mul, ipoly_pochhammer, ipoly_scale

GROUP = Dict[Tuple[int, ...], Dict[int, IntPoly]]


def _layout(kind: str, n: int, k: int) -> Tuple[int, int, int]:
    """(number of input variables, output y variables, auxiliary variables)."""
    if kind == "Q":
        return n, n, n
    if kind == "A":
        return k + 1, k, k + 1
    if kind == "Q0":
        return n - 1, n, n
    raise ValueError(kind)


@lru_cache(maxsize=None)
def _e_polys(kind: str, n: int, k: int, bits: int) -> Tuple[Dict[int, int], ...]:
    n_in, n_y, n_aux = _layout(kind, n, k)
    pk = Packing(n_y + n_aux, (1 << (bits - 1)) - 1)
    y = [pk.unit(i) for i in range(n_y)]
    aux = [pk.unit(n_y + i) for i in range(n_aux)]
    polys = []
    for r in range(1, n_in + 1):
        out: Dict[int, int] = {}
        if kind == "Q":
            for S in combinations(range(n), r):
                base = sum(y[s] for s in S)
                out[base] = out.get(base, 0) + 1
                for s in S:
                    out[base + aux[s]] = out.get(base + aux[s], 0) + 1
        elif kind == "A":
            # slot 0 carries y_0 = 1, slots 1..k carry y_1..y_k
            for S in combinations(range(k + 1), r):
                base = sum(y[s - 1] for s in S if s > 0)
                out[base] = out.get(base, 0) + 1
                for s in S:
                    out[base + aux[s]] = out.get(base + aux[s], 0) + 1
        else:
            for j in range(n):
                rest = [i for i in range(n) if i != j]
                for S in combinations(rest, r):
                    key = aux[j] + sum(y[s] for s in S)
                    out[key] = out.get(key, 0) + 1
        polys.append({key: c for key, c in out.items() if c})
    return tuple(polys)


@lru_cache(maxsize=None)
def _poch_g(scale: int, m: int) -> IntPoly:
    """(scale*g)_m as an integer polynomial in g."""
    return ipoly_pochhammer((0, scale), m)


def _aux_weight(kind: str, n: int, k: int, aux: Tuple[int, ...]) -> IntPoly:
    w: IntPoly = (1,)
    for idx, m in enumerate(aux):
        if m:
            scale = n - k if (kind == "A" and idx == 0) else 1
            w = ipoly_mul(w, _poch_g(scale, m))
    return w


@lru_cache(maxsize=None)
def grouped(kind: str, n: int, k: int, e_exps: Tuple[int, ...]) -> GROUP:
    """{y-partition a: {|aux|: integer numerator}} for one product of e's.

    The full coefficient of m_a(y) is sum_m (z-1)^m num[m] / (ng)_m.
    """
    n_in, n_y, n_aux = _layout(kind, n, k)
    # no single exponent can exceed the number of e-factors
    pk = Packing(n_y + n_aux, max(sum(e_exps), 1))
    polys = _e_polys(kind, n, k, pk.bits)
    prod = {0: 1}
    for r, e in enumerate(e_exps):
        if e:
            prod = sparse_mul(prod, sparse_pow(polys[r], e))
    out: GROUP = {}
    weights: Dict[Tuple[int, ...], IntPoly] = {}
    for key, c in prod.items():
        exps = pk.unpack(key)
        a = exps[:n_y]
        if any(a[i] < a[i + 1] for i in range(n_y - 1)):
            continue
        aux = exps[n_y:]
        w = weights.get(aux)
        if w is None:
            w = weights[aux] = _aux_weight(kind, n, k, aux)
        m = sum(aux)
        slot = out.setdefault(a, {})
        slot[m] = ipoly_add(slot.get(m, ()), ipoly_scale(w, c))
    return out


@lru_cache(maxsize=None)
def z_expanded(kind: str, n: int, k: int, e_exps: Tuple[int, ...]):
    """{a: {j: (num, den)}}: coefficient of z^j m_a(y) as num(g)/den(g).

    For ``"Q0"`` there is no z and only j = 0 appears; the (z-1)^m factor
    is simply dropped.
    """
    out = {}
    for a, by_m in grouped(kind, n, k, e_exps).items():
        M = max(by_m)
        den = _poch_g(n, M)
        scaled = {}
        for m, num in by_m.items():
            # bring num / (ng)_m onto the common denominator (ng)_M
            fill: IntPoly = (1,)
            for t in range(m, M):
                fill = ipoly_mul(fill, (t, n))
            scaled[m] = ipoly_mul(num, fill)
        if kind == "Q0":
            total: IntPoly = ()
            for num in scaled.values():
                total = ipoly_add(total, num)
            coeffs = {0: total}
        else:
            coeffs: Dict[int, IntPoly] = {}
            for m, num in scaled.items():
                for j in range(m + 1):
                    c = comb(m, j) * (-1) ** (m - j)
                    coeffs[j] = ipoly_add(coeffs.get(j, ()), ipoly_scale(num, c))
        entry = {j: (num, den) for j, num in coeffs.items() if num}
        if entry:
            out[a] = entry
    return out


@lru_cache(maxsize=None)
def converted(kind: str, n: int, k: int, e_exps: Tuple[int, ...], field):
    """:func:`z_expanded` with each ratio turned into an element of ``field``."""
    return {
        a: {j: field.ratio(num, den) for j, (num, den) in entry.items()}
        for a, entry in z_expanded(kind, n, k, e_exps).items()
    }


def apply_operator(kind: str, n: int, k: int, e_expansion, field) -> Dict[int, Dict[tuple, object]]:
    """Apply the operator to sum_c c * e^{exps}; returns {j: {a: coefficient}}."""
    out: Dict[int, Dict[tuple, object]] = {}
    for exps, c in e_expansion.items():
        for a, entry in converted(kind, n, k, tuple(exps), field).items():
            for j, s in entry.items():
                slot = out.setdefault(j, {})
                v = c * s
                slot[a] = slot[a] + v if a in slot else v
    return out
