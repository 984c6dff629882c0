"""Text parsing and JSON round-tripping for every value the CLI prints.

Rationals are written as ``"p/q"``. Elements of Q(g) are written as
``{"num": [...], "den": [...]}``, coefficients low degree first, with a
primitive integer denominator whose leading coefficient is positive.
Floats are written with 17 significant digits, so they read back exactly.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

from .jack import JackExpansion
from .partitions import Partition, PartitionError, as_partition
from .qop import SymZPoly, ZPoly
from .scalars import RatFunc
from .sov import MultiZPoly
from .sympoly import RawPoly, SymPoly

__all__ = [
    "parse_partition",
    "parse_rational",
    "scalar_to_json",
    "scalar_from_json",
    "to_json",
    "from_json",
    "dumps",
    "loads",
]


def parse_partition(text: str) -> Partition:
    body = text.strip().strip("[]()")
    if not body:
        raise PartitionError("empty partition text")
    try:
        parts = [int(p) for p in body.split(",")]
    except ValueError as exc:
        raise PartitionError(f"not a comma-separated list of naturals: {text!r}") from exc
    return as_partition(parts)


def parse_rational(text: str) -> Fraction:
    s = str(text).strip()
    if "/" in s:
        p, q = s.split("/", 1)
        try:
            p, q = int(p), int(q)
        except ValueError as exc:
            raise ValueError(f"not a rational: {text!r}") from exc
        if q == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(p, q)
    try:
        return Fraction(int(s))
    except ValueError:
        pass
    try:
        return Fraction(s)
    except ValueError as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def _rat_text(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def scalar_to_json(c) -> Any:
    if isinstance(c, RatFunc):
        num, den = c.rational_parts()
        return {"num": [_rat_text(a) for a in num], "den": [_rat_text(a) for a in den]}
    if isinstance(c, (int, Fraction)):
        return _rat_text(c)
    raise TypeError(f"not a scalar: {c!r}")


def scalar_from_json(obj) -> Any:
    if isinstance(obj, dict):
        num = [parse_rational(a) for a in obj["num"]]
        den = [parse_rational(a) for a in obj["den"]]
        # clear denominators to integers
        scale = 1
        for a in num + den:
            scale = scale * a.denominator // math.gcd(scale, a.denominator)
        return RatFunc([int(a * scale) for a in num], [int(a * scale) for a in den])
    if isinstance(obj, (str, int)):
        return parse_rational(str(obj))
    raise ValueError(f"not a scalar: {obj!r}")


def _terms_sym(p: SymPoly):
    return [{"partition": list(lam), "coeff": scalar_to_json(c)} for lam, c in sorted(p.terms.items(), reverse=True)]


def to_json(x) -> Any:
    """JSON-ready structure for library values."""
    if isinstance(x, SymPoly):
        return {"type": "sympoly", "n": x.n, "basis": "m", "terms": _terms_sym(x)}
    if isinstance(x, RawPoly):
        return {
            "type": "rawpoly",
            "n": x.n,
            "terms": [{"exponents": list(e), "coeff": scalar_to_json(c)} for e, c in sorted(x.terms.items(), reverse=True)],
        }
    if isinstance(x, ZPoly):
        return {"type": "zpoly", "coeffs": [scalar_to_json(c) for c in x.coeffs]}
    if isinstance(x, SymZPoly):
        return {
            "type": "symzpoly",
            "n": x.n,
            "z_coeffs": [{"power": j, "poly": to_json(p)} for j, p in x.coeffs.items()],
        }
    if isinstance(x, MultiZPoly):
        return {
            "type": "multizpoly",
            "n": x.n,
            "terms": [{"exponents": list(e), "coeff": scalar_to_json(c)} for e, c in x.terms.items()],
        }
    if isinstance(x, JackExpansion):
        return {
            "type": "jack",
            "lambda": list(x.lam),
            "n": x.n,
            "coefficients": _terms_sym(x.as_sympoly()),
        }
    if isinstance(x, (RatFunc, Fraction)) or (isinstance(x, int) and not isinstance(x, bool)):
        return scalar_to_json(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _sym_from_terms(n, terms):
    return SymPoly(n, {tuple(t["partition"]): scalar_from_json(t["coeff"]) for t in terms})


def from_json(obj) -> Any:
    if not isinstance(obj, dict):
        return scalar_from_json(obj)
    kind = obj.get("type")
    if kind is None and "num" in obj:
        return scalar_from_json(obj)
    if kind == "sympoly" or (kind is None and obj.get("basis") == "m"):
        return _sym_from_terms(obj["n"], obj["terms"])
    if kind == "rawpoly":
        return RawPoly(obj["n"], {tuple(t["exponents"]): scalar_from_json(t["coeff"]) for t in obj["terms"]})
    if kind == "zpoly":
        return ZPoly([scalar_from_json(c) for c in obj["coeffs"]])
    if kind == "symzpoly":
        return SymZPoly(obj["n"], {t["power"]: from_json(t["poly"]) for t in obj["z_coeffs"]})
    if kind == "multizpoly":
        return MultiZPoly(obj["n"], {tuple(t["exponents"]): scalar_from_json(t["coeff"]) for t in obj["terms"]})
    if kind == "jack":
        p = _sym_from_terms(obj["n"], obj["coefficients"])
        return JackExpansion(tuple(obj["lambda"]), obj["n"], dict(p.terms))
    raise ValueError(f"unknown JSON value type {kind!r}")


def _encode(obj, indent: int, level: int) -> str:
    pad = "\n" + " " * (indent * (level + 1)) if indent else ""
    end = "\n" + " " * (indent * level) if indent else ""
    sep = "," + pad if indent else ", "
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            return json.dumps(obj)
        return format(obj, ".17g")
    if isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [json.dumps(str(k)) + ": " + _encode(v, indent, level + 1) for k, v in obj.items()]
        return "{" + pad + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[" + pad + sep.join(_encode(v, indent, level + 1) for v in obj) + end + "]"
    return _encode(to_json(obj), indent, level)


def dumps(obj, indent: int = 2) -> str:
    """JSON text; library values are converted and floats keep 17 digits."""
    return _encode(obj, indent, 0)


def loads(text: str):
    return json.loads(text)
