"""Symmetric polynomials in the monomial basis, plus raw expanded polynomials.

:class:`SymPoly` stores only the coefficients of ``m_lambda``; the full
expansion over all monomials (:class:`RawPoly`) is produced on demand for
evaluation and for operators that act monomial by monomial.
Coefficients are scalars of either field variant, or plain integers.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .kernels import Packing, sparse_mul, sparse_pow
from .partitions import Partition, as_partition

Exps = Tuple[int, ...]

__all__ = [
    "SymPoly",
    "RawPoly",
    "NotSymmetricError",
    "m_basis",
    "elementary",
    "E_basis",
    "E_exponents",
    "partition_from_E",
    "mul",
    "expand_in_e",
    "evaluate",
    "restrict_tail_to_one",
    "restrict_last_to_zero",
    "from_e_expansion",
    "as_sympoly",
    "distinct_permutations",
]


class NotSymmetricError(ValueError):
    """A polynomial expected to be symmetric has unequal orbit coefficients."""


@lru_cache(maxsize=None)
def distinct_permutations(lam: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted(set(permutations(lam)), reverse=True))


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v != 0}


class RawPoly:
    """Polynomial in ``n`` variables as a map exponent-tuple -> coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exps, object] | None = None):
        self.n = n
        self.terms: Dict[Exps, object] = _clean(terms or {})
        for k in self.terms:
            if len(k) != n:
                raise ValueError(f"exponent {k} does not have length {n}")

    @classmethod
    def constant(cls, n: int, c) -> "RawPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "RawPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    def __add__(self, other: "RawPoly") -> "RawPoly":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return RawPoly(self.n, out)

    def __neg__(self):
        return RawPoly(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "RawPoly") -> "RawPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RawPoly):
            self._check(other)
            out: dict = {}
            for a, c in self.terms.items():
                for b, d in other.terms.items():
                    k = tuple(x + y for x, y in zip(a, b))
                    out[k] = out[k] + c * d if k in out else c * d
            return RawPoly(self.n, out)
        return RawPoly(self.n, {k: v * other for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RawPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def evaluate(self, point: Sequence):
        if len(point) != self.n:
            raise ValueError("point has the wrong length")
        total = 0
        for exps, c in self.terms.items():
            t = c
            for x, e in zip(point, exps):
                if e:
                    t = t * x ** e
            total = total + t
        return total

    def is_symmetric(self) -> bool:
        try:
            self.to_sympoly()
        except NotSymmetricError:
            return False
        return True

    def to_sympoly(self) -> "SymPoly":
        """Collect into the m-basis after checking every orbit is uniform."""
        out = {}
        for exps, c in self.terms.items():
            lam = tuple(sorted(exps, reverse=True))
            if lam in out:
                continue
            for perm in distinct_permutations(lam):
                if self.terms.get(perm, 0) != c:
                    raise NotSymmetricError(f"orbit of {lam} is not uniform")
            out[lam] = c
        return SymPoly(self.n, out)

    def univariate_coeffs(self) -> list:
        """Coefficient list for a polynomial in one variable."""
        if self.n != 1:
            raise ValueError("not univariate")
        deg = self.degree()
        out = [0] * (deg + 1)
        for (e,), c in self.terms.items():
            out[e] = c
        return out

    def __repr__(self):
        return f"RawPoly({self.n}, {self.terms!r})"


class SymPoly:
    """Symmetric polynomial ``sum_lambda c_lambda m_lambda`` in ``n`` variables."""

    __slots__ = ("n", "terms", "_raw")

    def __init__(self, n: int, terms: Mapping[Partition, object] | None = None):
        self.n = n
        self.terms: Dict[Partition, object] = _clean(terms or {})
        for lam in self.terms:
            if len(lam) != n:
                raise ValueError(f"partition {lam} does not have length {n}")
        self._raw = None

    @classmethod
    def constant(cls, n: int, c) -> "SymPoly":
        return cls(n, {(0,) * n: c})

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SymPoly(self.n, out)

    def __neg__(self):
        return SymPoly(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return mul(self, other)
        return SymPoly(self.n, {k: v * other for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.terms}) <= 1

    def support(self) -> List[Partition]:
        return sorted(self.terms, reverse=True)

    def map_coeffs(self, f) -> "SymPoly":
        return SymPoly(self.n, {k: f(v) for k, v in self.terms.items()})

    def expand_raw(self) -> RawPoly:
        if self._raw is None:
            out = {}
            for lam, c in self.terms.items():
                for perm in distinct_permutations(lam):
                    out[perm] = c
            self._raw = RawPoly(self.n, out)
        return self._raw

    def times_en_power(self, k: int) -> "SymPoly":
        """Multiply by ``e_n**k``: every part shifts up by k."""
        return SymPoly(self.n, {tuple(p + k for p in lam): c for lam, c in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"({c})*m{lam}" for lam, c in sorted(self.terms.items(), reverse=True))
        return f"SymPoly({self.n}: {body or '0'})"


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

def m_basis(lam: Sequence[int]) -> SymPoly:
    lam = as_partition(lam)
    return SymPoly(len(lam), {lam: 1})


def elementary(r: int, n: int) -> SymPoly:
    if not 0 <= r <= n:
        raise ValueError(f"e_{r} is not defined in {n} variables")
    return SymPoly(n, {(1,) * r + (0,) * (n - r): 1})


def E_exponents(lam: Sequence[int]) -> Exps:
    """Exponents (lam_1-lam_2, ..., lam_n) of e_1..e_n in E_lambda."""
    n = len(lam)
    return tuple(lam[i] - (lam[i + 1] if i + 1 < n else 0) for i in range(n))


def partition_from_E(exps: Sequence[int]) -> Partition:
    out = []
    acc = 0
    for e in reversed(exps):
        acc += e
        out.append(acc)
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def _elementary_packed(n: int, r: int, packing_bits: int) -> Dict[int, int]:
    bits = packing_bits
    out = {}
    for subset in combinations(range(n), r):
        key = 0
        for i in subset:
            key |= 1 << (i * bits)
        out[key] = 1
    return out


@lru_cache(maxsize=None)
def _E_basis_int(lam: Partition) -> Tuple[Tuple[Partition, int], ...]:
    """Integer m-expansion of E_lambda, dominant term first."""
    n = len(lam)
    pk = Packing(n, max(sum(lam), 1))
    prod = {0: 1}
    for r, e in enumerate(E_exponents(lam), start=1):
        if e:
            prod = sparse_mul(prod, sparse_pow(_elementary_packed(n, r, pk.bits), e))
    out = {}
    for key, c in prod.items():
        exps = pk.unpack(key)
        if all(a >= b for a, b in zip(exps, exps[1:])):
            out[exps] = c
    return tuple(sorted(out.items(), reverse=True))


def E_basis(lam: Sequence[int]) -> SymPoly:
    lam = as_partition(lam)
    return SymPoly(len(lam), dict(_E_basis_int(lam)))


def E_basis_terms(lam: Partition) -> Tuple[Tuple[Partition, int], ...]:
    return _E_basis_int(lam)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def mul(p: SymPoly, q: SymPoly) -> SymPoly:
    """Product via raw expansion of one factor, collected on dominant monomials."""
    p._check(q)
    if len(p.terms) < len(q.terms):
        p, q = q, p
    out: dict = {}
    qraw = q.expand_raw().terms
    for lam, c in p.terms.items():
        for a in distinct_permutations(lam):
            for b, d in qraw.items():
                k = tuple(x + y for x, y in zip(a, b))
                if all(k[i] >= k[i + 1] for i in range(len(k) - 1)):
                    cd = c * d
                    out[k] = out[k] + cd if k in out else cd
    return SymPoly(p.n, out)


def expand_in_e(p: SymPoly) -> Dict[Exps, object]:
    """Write p as a polynomial in e_1..e_n by triangular elimination.

    Returns a map from exponent vectors of (e_1, ..., e_n) to coefficients.
    """
    remaining = dict(p.terms)
    out: Dict[Exps, object] = {}
    while remaining:
        lam = max(remaining)
        c = remaining.pop(lam)
        out[E_exponents(lam)] = c
        for mu, a in _E_basis_int(lam)[1:]:
            v = remaining.get(mu, 0) - c * a
            if v != 0:
                remaining[mu] = v
            else:
                remaining.pop(mu, None)
    return out


def from_e_expansion(n: int, expansion: Mapping[Exps, object]) -> SymPoly:
    """Inverse of :func:`expand_in_e`."""
    out: dict = {}
    for exps, c in expansion.items():
        for mu, a in _E_basis_int(partition_from_E(exps)):
            out[mu] = out[mu] + c * a if mu in out else c * a
    return SymPoly(n, out)


def evaluate(p: SymPoly, point: Sequence):
    if len(point) != p.n:
        raise ValueError(f"point has length {len(point)}, expected {p.n}")
    return p.expand_raw().evaluate(point)


def restrict_tail_to_one(p: SymPoly, k: int) -> RawPoly:
    """p(x_1, ..., x_k, 1, ..., 1) as a raw polynomial in k variables."""
    if not 0 <= k <= p.n:
        raise ValueError(f"cannot keep {k} of {p.n} variables")
    out: dict = {}
    for exps, c in p.expand_raw().terms.items():
        key = exps[:k]
        out[key] = out[key] + c if key in out else c
    return RawPoly(k, out)


def restrict_last_to_zero(p: SymPoly) -> SymPoly:
    """p(x_1, ..., x_{n-1}, 0) in n-1 variables."""
    return SymPoly(p.n - 1, {lam[:-1]: c for lam, c in p.terms.items() if lam[-1] == 0})


def as_sympoly(f, n: int | None = None) -> SymPoly:
    if isinstance(f, SymPoly):
        return f
    if isinstance(f, RawPoly):
        return f.to_sympoly()
    raise TypeError(f"expected SymPoly or RawPoly, got {type(f).__name__}")


def sympoly_from_items(n: int, items: Iterable[Tuple[Partition, object]]) -> SymPoly:
    out: dict = {}
    for lam, c in items:
        out[lam] = out[lam] + c if lam in out else c
    return SymPoly(n, out)
