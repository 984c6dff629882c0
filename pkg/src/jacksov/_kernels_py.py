"""Pure-Python implementations of the hot kernels.

Sparse integer polynomials are dictionaries mapping a *packed* exponent
(one fixed-width bit field per variable) to an integer coefficient. With
packing, adding two keys multiplies the monomials, as long as no field
overflows; callers choose the width from the degree bound.
"""
from __future__ import annotations

from typing import Dict

BACKEND = "python"


def sparse_mul(a: Dict[int, int], b: Dict[int, int]) -> Dict[int, int]:
    if len(a) < len(b):
        a, b = b, a
    out: Dict[int, int] = {}
    get = out.get
    bitems = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bitems:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def sparse_pow(a: Dict[int, int], e: int) -> Dict[int, int]:
    result = {0: 1}
    if e == 0:
        return result
    base = a
    while True:
        if e & 1:
            result = sparse_mul(result, base)
        e >>= 1
        if not e:
            return result
        base = sparse_mul(base, base)
