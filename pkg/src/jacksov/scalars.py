"""Coefficient fields: exact rationals and rational functions in ``g``.

Two scalar variants are used throughout the package:

* ``Fraction`` -- the field element at a fixed rational value of ``g``
  (the *specialized* variant);
* :class:`RatFunc` -- an element of Q(g) held as a reduced quotient of
  integer polynomials (the *exact* variant).

Higher-level code never branches on the variant. It receives a field object
(:class:`SymbolicField` or :class:`SpecializedField`) and uses ``field.g``,
``field.one`` and plain integer constants; Python's operator protocol does
the rest.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple, Union

IntPoly = Tuple[int, ...]

__all__ = [
    "RatFunc",
    "SymbolicField",
    "SpecializedField",
    "VariantMismatchError",
    "PoleError",
    "scalar_arith",
    "pochhammer",
    "specialize",
    "field_from_text",
]


class VariantMismatchError(TypeError):
    """Raised when an exact and a specialized scalar meet in one operation."""


class PoleError(ZeroDivisionError):
    """Raised when specializing a rational function at one of its poles."""


# ---------------------------------------------------------------------------
# dense integer polynomials, coefficient i multiplies g**i
# ---------------------------------------------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def ipoly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def ipoly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def ipoly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * v for v in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * v for v in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return tuple(out)


def ipoly_scale(a: IntPoly, s: int) -> IntPoly:
    if s == 0:
        return ()
    return tuple(s * v for v in a)


def ipoly_content(a: IntPoly) -> int:
    c = 0
    for v in a:
        c = gcd(c, v)
        if c == 1:
            break
    return c


def ipoly_divexact_int(a: IntPoly, d: int) -> IntPoly:
    return tuple(v // d for v in a)


def ipoly_eval(a: IntPoly, x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc


def ipoly_pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of lead(b)**k * a divided by b, with integer arithmetic."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, v in enumerate(b):
            r[i + shift] -= lr * v
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def ipoly_primitive(a: IntPoly) -> IntPoly:
    if not a:
        return a
    c = ipoly_content(a)
    if a[-1] < 0:
        c = -c
    return a if c == 1 else ipoly_divexact_int(a, c)


def ipoly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z[g] with positive leading coefficient."""
    if not a:
        return ipoly_primitive(b)
    if not b:
        return ipoly_primitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    a = ipoly_primitive(a)
    b = ipoly_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = ipoly_pseudo_rem(a, b)
        a, b = b, ipoly_primitive(r)
        if len(b) == 1:
            return (1,)
    return ipoly_primitive(a)


def ipoly_divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient a / b over Z[g]; raises ArithmeticError otherwise."""
    if len(b) == 1:
        d = b[0]
        if any(v % d for v in a):
            raise ArithmeticError("inexact division by a constant")
        return tuple(v // d for v in a)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        top = r[k + db]
        if top == 0:
            continue
        if top % lb:
            raise ArithmeticError("inexact polynomial division")
        t = top // lb
        q[k] = t
        for i, v in enumerate(b):
            r[k + i] -= t * v
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


# ---------------------------------------------------------------------------
# rational functions in g
# ---------------------------------------------------------------------------

class RatFunc:
    """Reduced quotient ``num/den`` of integer polynomials in ``g``.

    Canonical form: ``num`` and ``den`` coprime in Q[g], the joint integer
    content of both is 1 and ``den`` has a positive leading coefficient.
    Equality is therefore a structural comparison.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Sequence[int] = (), den: Sequence[int] = (1,), *, reduced: bool = False):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("RatFunc with zero denominator")
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def const(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, int):
            return cls((value,) if value else (), (1,), reduced=True)
        if isinstance(value, Fraction):
            if value == 0:
                return cls((), (1,), reduced=True)
            return cls((value.numerator,), (value.denominator,), reduced=True)
        raise VariantMismatchError(f"cannot embed {type(value).__name__} into Q(g)")

    @classmethod
    def poly(cls, coeffs: Sequence) -> "RatFunc":
        """Polynomial in g with rational coefficients."""
        fr = [Fraction(c) for c in coeffs]
        d = 1
        for c in fr:
            d = d * c.denominator // gcd(d, c.denominator)
        return cls(tuple(int(c * d) for c in fr), (d,))

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return self
                other = RatFunc.const(other)
            else:
                return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RatFunc(ipoly_add(self.num, other.num), self.den)
        if len(self.den) == 1 and len(other.den) == 1:
            a, b = self.den[0], other.den[0]
            num = ipoly_add(ipoly_scale(self.num, b), ipoly_scale(other.num, a))
            return RatFunc(num, (a * b,))
        num = ipoly_add(ipoly_mul(self.num, other.den), ipoly_mul(other.num, self.den))
        return RatFunc(num, ipoly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(tuple(-v for v in self.num), self.den, reduced=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, Fraction)):
                if other == 0 or not self.num:
                    return RatFunc((), (1,), reduced=True)
                if isinstance(other, int):
                    num, den = ipoly_scale(self.num, other), self.den
                else:
                    num = ipoly_scale(self.num, other.numerator)
                    den = ipoly_scale(self.den, other.denominator)
                return RatFunc(*_normalise_content(num, den), reduced=True)
            return NotImplemented
        if not self.num or not other.num:
            return RatFunc((), (1,), reduced=True)
        # cross-cancellation keeps the product coprime without a final gcd
        g1 = ipoly_gcd(self.num, other.den)
        g2 = ipoly_gcd(other.num, self.den)
        n1, d2 = self.num, other.den
        if g1 != (1,):
            n1, d2 = ipoly_divexact(n1, g1), ipoly_divexact(d2, g1)
        n2, d1 = other.num, self.den
        if g2 != (1,):
            n2, d1 = ipoly_divexact(n2, g2), ipoly_divexact(d1, g2)
        return RatFunc(*_normalise_content(ipoly_mul(n1, n2), ipoly_mul(d1, d2)), reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(g)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num = tuple(-v for v in num)
            den = tuple(-v for v in den)
        return RatFunc(num, den, reduced=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(g)")
            return self * (1 / Fraction(other))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = RatFunc((1,), (1,), reduced=True)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.num
            c = RatFunc.const(other)
            return self.num == c.num and self.den == c.den
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if len(self.num) <= 1 and len(self.den) == 1:
                self._hash = hash(Fraction(self.num[0] if self.num else 0, self.den[0]))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # evaluation ----------------------------------------------------------------
    def __call__(self, g0):
        return specialize(self, g0)

    def rational_parts(self) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        """Numerator and denominator with the denominator made primitive."""
        c = ipoly_content(self.den)
        return (tuple(Fraction(v, c) for v in self.num),
                tuple(Fraction(v // c) for v in self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = _ipoly_str(self.num)
        if self.den == (1,):
            return n
        d = _ipoly_str(self.den)
        if len(self.num) > 1 or (self.num and self.num[0] < 0):
            n = f"({n})"
        if len([v for v in self.den if v]) > 1:
            d = f"({d})"
        return f"{n}/{d}"


def _ipoly_str(a: IntPoly) -> str:
    if not a:
        return "0"
    parts = []
    for i, v in enumerate(a):
        if not v:
            continue
        mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
        if mono and abs(v) == 1:
            coef = "-" if v < 0 else ""
            parts.append(f"{coef}{mono}")
        else:
            parts.append(f"{v}{'*' if mono else ''}{mono}")
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


def _normalise_content(num: IntPoly, den: IntPoly):
    c = gcd(ipoly_content(num), ipoly_content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = ipoly_divexact_int(num, c)
        den = ipoly_divexact_int(den, c)
    return num, den


def _reduce(num: IntPoly, den: IntPoly):
    if not num:
        return (), (1,)
    if len(den) > 1 and len(num) > 1:
        g = ipoly_gcd(num, den)
        if g != (1,):
            num = ipoly_divexact(num, g)
            den = ipoly_divexact(den, g)
    return _normalise_content(num, den)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class SymbolicField:
    """Q(g) with ``g`` an indeterminate."""

    key = "symbolic"

    def __init__(self):
        self.g = RatFunc((0, 1), (1,), reduced=True)
        self.one = RatFunc((1,), (1,), reduced=True)
        self.zero = RatFunc((), (1,), reduced=True)

    def __call__(self, value):
        return RatFunc.const(value)

    def ratio(self, num: IntPoly, den: IntPoly) -> RatFunc:
        """The element num(g)/den(g) for integer polynomials."""
        return RatFunc(num, den)

    def is_element(self, value) -> bool:
        return isinstance(value, RatFunc)

    def __eq__(self, other):
        return isinstance(other, SymbolicField)

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "SymbolicField()"


class SpecializedField:
    """Q with ``g`` fixed to a rational value ``g0``."""

    def __init__(self, g0):
        g0 = Fraction(g0)
        self.g0 = g0
        self.g = g0
        self.one = Fraction(1)
        self.zero = Fraction(0)
        self.key = f"g={g0}"

    def __call__(self, value):
        if isinstance(value, RatFunc):
            raise VariantMismatchError("exact scalar passed to a specialized field")
        return Fraction(value)

    def ratio(self, num: IntPoly, den: IntPoly) -> Fraction:
        d = ipoly_eval(den, self.g0)
        if d == 0:
            raise PoleError(f"denominator vanishes at g={self.g0}")
        return Fraction(ipoly_eval(num, self.g0)) / d

    def is_element(self, value) -> bool:
        return isinstance(value, (int, Fraction))

    def __eq__(self, other):
        return isinstance(other, SpecializedField) and other.g0 == self.g0

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"SpecializedField({self.g0})"


Field = Union[SymbolicField, SpecializedField]


def field_from_text(text: str | None) -> Field:
    """``None``/``"symbolic"`` gives Q(g); anything else is parsed as g0."""
    if text is None or text == "symbolic":
        return SymbolicField()
    from .serialize import parse_rational

    return SpecializedField(parse_rational(text))


# ---------------------------------------------------------------------------
# field-level operations
# ---------------------------------------------------------------------------

def _variant(x) -> str:
    if isinstance(x, RatFunc):
        return "exact"
    if isinstance(x, (int, Fraction)):
        return "specialized"
    raise TypeError(f"not a scalar: {x!r}")


def scalar_arith(a, b, op: str):
    """Strict field arithmetic; both operands must be the same variant."""
    if _variant(a) != _variant(b):
        raise VariantMismatchError(f"{_variant(a)} {op} {_variant(b)}")
    if isinstance(a, int):
        a = Fraction(a)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("scalar division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def pochhammer(a, k: int):
    """Rising factorial a(a+1)...(a+k-1)."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    result = RatFunc.const(1) if isinstance(a, RatFunc) else Fraction(1)
    for i in range(k):
        result = result * (a + i)
    return result


def specialize(s, g0) -> Fraction:
    """Evaluate an exact scalar at g = g0."""
    if not isinstance(s, RatFunc):
        raise VariantMismatchError("specialize expects an exact scalar")
    g0 = Fraction(g0)
    d = ipoly_eval(s.den, g0)
    if d == 0:
        raise PoleError(f"pole at g={g0}")
    return Fraction(ipoly_eval(s.num, g0)) / d


def ipoly_pochhammer(a: IntPoly, k: int) -> IntPoly:
    """(a)_k for an integer polynomial a in g."""
    out: IntPoly = (1,)
    for i in range(k):
        out = ipoly_mul(out, ipoly_add(a, (i,)))
    return out
