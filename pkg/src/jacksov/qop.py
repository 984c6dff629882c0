"""The Q-operator Q_z and its eigenvalues.

``qz_apply`` is the exact algebraic action: write p in e_1..e_n, replace

    e_i(x) -> sum_{|S|=i} (1 + sum_{s in S} eta_s) prod_{s in S} y_s

and send eta^k to (z-1)^{|k|} prod_i (g)_{k_i} / (ng)_{|k|}.

The eigenvalue q_lambda(z) on P_lambda comes from three independent
routes: the closed multiple sum (``q_eigenvalue_sum``), the same eta rule
applied to prod_i (1 + eta_1 + ... + eta_i)^{lambda_i - lambda_{i+1}}
(``q_eigenvalue_eta``), and the normalised finite hypergeometric sum
``f_polynomial`` divided by ``beta_lambda``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, List, Sequence, Tuple

from . import _subst
from .kernels import Packing, sparse_mul, sparse_pow
from .partitions import Partition, as_partition, part_difference
from .scalars import SymbolicField, ipoly_add, ipoly_mul, ipoly_pochhammer, pochhammer
from .sympoly import SymPoly, expand_in_e

__all__ = [
    "ZPoly",
    "SymZPoly",
    "HypergeomParams",
    "qz_apply",
    "q_eigenvalue_sum",
    "q_eigenvalue_eta",
    "beta_lambda",
    "f_polynomial",
    "hypergeom_params",
    "baxter_residual",
]

_SYMBOLIC = SymbolicField()


class ZPoly:
    """Univariate polynomial in z, coefficients listed from z^0 upward."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple = tuple(c)

    @classmethod
    def monomial(cls, c, k: int) -> "ZPoly":
        return cls([0] * k + [c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, ZPoly):
            other = ZPoly([other])
        m = max(len(self.coeffs), len(other.coeffs))
        return ZPoly([self[j] + other[j] for j in range(m)])

    __radd__ = __add__

    def __neg__(self):
        return ZPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, ZPoly):
            other = ZPoly([other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ZPoly):
            if not self.coeffs or not other.coeffs:
                return ZPoly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return ZPoly(out)
        return ZPoly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ZPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            other = ZPoly([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def map_coeffs(self, f) -> "ZPoly":
        return ZPoly([f(c) for c in self.coeffs])

    def lowest_term(self) -> Tuple[int, object]:
        for j, c in enumerate(self.coeffs):
            if c != 0:
                return j, c
        raise ValueError("zero polynomial has no lowest term")

    def __repr__(self):
        return f"ZPoly([{', '.join(str(c) for c in self.coeffs)}])"


class SymZPoly:
    """Polynomial in z whose coefficients are symmetric polynomials in y."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Dict[int, SymPoly] | None = None):
        self.n = n
        self.coeffs: Dict[int, SymPoly] = {
            j: p for j, p in sorted((coeffs or {}).items()) if not p.is_zero()
        }

    @classmethod
    def from_scaled(cls, q: ZPoly, p: SymPoly) -> "SymZPoly":
        """q(z) * p(y)."""
        return cls(p.n, {j: p * c for j, c in enumerate(q.coeffs) if c != 0})

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __add__(self, other: "SymZPoly") -> "SymZPoly":
        out = dict(self.coeffs)
        for j, p in other.coeffs.items():
            out[j] = out[j] + p if j in out else p
        return SymZPoly(self.n, out)

    def __sub__(self, other: "SymZPoly") -> "SymZPoly":
        return self + SymZPoly(other.n, {j: -p for j, p in other.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, SymZPoly):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def at(self, z) -> SymPoly:
        out = SymPoly(self.n, {})
        for j, p in self.coeffs.items():
            out = out + p * (z ** j)
        return out

    def __repr__(self):
        body = " + ".join(f"z^{j}*({p!r})" for j, p in self.coeffs.items())
        return f"SymZPoly({self.n}: {body or '0'})"


@dataclass(frozen=True)
class HypergeomParams:
    a: Tuple
    b: Tuple


# ---------------------------------------------------------------------------
# the operator
# ---------------------------------------------------------------------------

def qz_apply(p: SymPoly, field=_SYMBOLIC) -> SymZPoly:
    """[Q_z p](y) as a polynomial in z with symmetric coefficients in y."""
    n = p.n
    if n == 0:
        return SymZPoly(0, {0: p})
    raw = _subst.apply_operator("Q", n, 0, expand_in_e(p), field)
    return SymZPoly(n, {j: SymPoly(n, terms) for j, terms in raw.items()})


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------

def _k_ranges(lam: Partition):
    n = len(lam)
    return [range(part_difference(lam, i, i + 1) + 1) for i in range(1, n)]


def q_eigenvalue_sum(lam, n: int | None = None, field=_SYMBOLIC) -> ZPoly:
    """q_lambda(z) from the closed multiple sum over k_1..k_{n-1}."""
    lam = as_partition(lam)
    n = len(lam)
    g = field.g
    one_minus_z = ZPoly([1, -1])
    total = ZPoly()
    for ks in product(*_k_ranges(lam)):
        coef = field.one
        partial = 0
        for i, k in enumerate(ks, start=1):
            if k == 0:
                continue
            d = part_difference(lam, i, i + 1)
            coef = coef * Fraction(pochhammer(Fraction(-d), k), factorial(k))
        for i, k in enumerate(ks, start=1):
            partial += k
            if partial:
                coef = coef * pochhammer(g * i, partial) / pochhammer(g * (i + 1), partial)
        total = total + one_minus_z ** sum(ks) * coef
    return ZPoly.monomial(field.one, lam[-1] if n else 0) * total


def q_eigenvalue_eta(lam, n: int | None = None, field=_SYMBOLIC) -> ZPoly:
    """q_lambda(z) by the eta rule applied to prod_i (1 + eta_1 + ... + eta_i)^{lambda_{i,i+1}}."""
    lam = as_partition(lam)
    n = len(lam)
    if n == 0:
        return ZPoly([field.one])
    pk = Packing(n, max(lam[0], 1))
    prod = {0: 1}
    for i in range(1, n + 1):
        d = part_difference(lam, i, i + 1)
        if d:
            base = {0: 1}
            for s in range(i):
                base[pk.unit(s)] = 1
            prod = sparse_mul(prod, sparse_pow(base, d))
    by_m: Dict[int, tuple] = {}
    for key, c in prod.items():
        ks = pk.unpack(key)
        w: tuple = (c,)
        for k in ks:
            if k:
                w = ipoly_mul(w, ipoly_pochhammer((0, 1), k))
        m = sum(ks)
        by_m[m] = ipoly_add(by_m.get(m, ()), w)
    total = ZPoly()
    z_minus_one = ZPoly([-1, 1])
    for m, num in by_m.items():
        total = total + z_minus_one ** m * field.ratio(num, ipoly_pochhammer((0, n), m))
    return total


def beta_lambda(lam, n: int | None = None, field=_SYMBOLIC):
    lam = as_partition(lam)
    n = len(lam)
    g = field.g
    out = field.one
    for i in range(1, n):
        d = part_difference(lam, i, n)
        if d:
            out = out * pochhammer(g * (n - i + 1), d) / pochhammer(g * (n - i), d)
    return out


def f_polynomial(lam, n: int | None = None, field=_SYMBOLIC) -> ZPoly:
    """f_lambda(z) from its finite multiple-sum form."""
    lam = as_partition(lam)
    n = len(lam)
    g = field.g
    one_minus_z = ZPoly([1, -1])
    minus_z = ZPoly([0, -1])
    total = ZPoly()
    for ks in product(*_k_ranges(lam)):
        coef = field.one
        poly = ZPoly([1])
        for i, k in enumerate(ks, start=1):
            d = part_difference(lam, i, i + 1)
            # (1-z)^d (z/(z-1))^k = (-z)^k (1-z)^(d-k)
            poly = poly * minus_z ** k * one_minus_z ** (d - k)
            if k:
                coef = coef * Fraction(pochhammer(Fraction(-d), k), factorial(k))
            tail = sum(ks[i - 1:])
            if tail:
                lin = part_difference(lam, i, n)
                coef = coef * pochhammer(1 - g * (n - i + 1) - lin, tail) / pochhammer(
                    1 - g * (n - i) - lin, tail
                )
        total = total + poly * coef
    return ZPoly.monomial(field.one, lam[-1] if n else 0) * total


def hypergeom_params(lam, n: int | None = None, field=_SYMBOLIC) -> HypergeomParams:
    lam = as_partition(lam)
    n = len(lam)
    g = field.g
    a = tuple(field.one * (part_difference(lam, n, i) + 1) - g * (n - i + 1) for i in range(1, n + 1))
    b = tuple(a[i] + g for i in range(n - 1))
    return HypergeomParams(a, b)


def baxter_residual(lam, n: int | None = None, order: int | None = None, field=_SYMBOLIC) -> List:
    """Leading series coefficients of the Baxter operator applied to
    u(z) = z^{-lambda_n} (1-z)^{ng-1} f_lambda(z).

    With theta = z d/dz the operator is
    theta prod_i (theta + b_i - 1) - z prod_i (theta + a_i), so the
    coefficient of z^j is j prod(j + b_i - 1) u_j - prod(j - 1 + a_i) u_{j-1}.
    """
    lam = as_partition(lam)
    n = len(lam)
    if order is None:
        order = 2 * ((lam[0] if n else 0) + n)
    if order < 1:
        raise ValueError("order must be at least 1")
    g = field.g
    f = f_polynomial(lam, field=field)
    shift = lam[-1] if n else 0
    ftilde = [f[j + shift] for j in range(max(f.degree() + 1 - shift, 0))]
    # binomial series (1-z)^{ng-1} = sum_k (1-ng)_k / k! z^k
    s = field.one - g * n
    series = [field.one]
    for k in range(1, order):
        series.append(series[-1] * (s + (k - 1)) / k)
    u = []
    for j in range(order):
        acc = field.zero
        for i, c in enumerate(ftilde[: j + 1]):
            if c != 0:
                acc = acc + c * series[j - i]
        u.append(acc)
    params = hypergeom_params(lam, field=field)
    out = []
    for j in range(order):
        left = field.one * j
        for b in params.b:
            left = left * (b + (j - 1))
        left = left * u[j]
        right = field.zero
        if j >= 1:
            right = field.one
            for a in params.a:
                right = right * (a + (j - 1))
            right = right * u[j - 1]
        out.append(left - right)
    return out
