"""Backend selection for the sparse-polynomial kernels.

The compiled extension ``jacksov._kernels`` is used when it was built;
otherwise, or when ``JACKSOV_PURE_PYTHON=1`` is set, the pure-Python
module takes over. Both expose the same functions and agree exactly.
"""
from __future__ import annotations

import os

from . import _kernels_py

python_backend = _kernels_py

try:
    if os.environ.get("JACKSOV_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _kernels as _impl  # type: ignore[attr-defined]
    compiled_backend = _impl
except ImportError:
    _impl = _kernels_py
    try:
        from . import _kernels as compiled_backend  # type: ignore[attr-defined,no-redef]
    except ImportError:
        compiled_backend = None

BACKEND: str = _impl.BACKEND
sparse_mul = _impl.sparse_mul
sparse_pow = _impl.sparse_pow


class Packing:
    """Fixed-width bit packing of exponent vectors into one integer."""

    __slots__ = ("nvars", "bits", "mask")

    def __init__(self, nvars: int, max_degree: int):
        bits = max(int(max_degree).bit_length() + 1, 2)
        self.nvars = nvars
        self.bits = bits
        self.mask = (1 << bits) - 1

    def pack(self, exps) -> int:
        key = 0
        for i, e in enumerate(exps):
            key |= e << (i * self.bits)
        return key

    def unpack(self, key: int):
        bits, mask = self.bits, self.mask
        return tuple((key >> (i * bits)) & mask for i in range(self.nvars))

    def unit(self, i: int) -> int:
        return 1 << (i * self.bits)
