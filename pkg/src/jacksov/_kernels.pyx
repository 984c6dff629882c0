# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled sparse-polynomial kernels.

Keys and coefficients are accumulated in a C++ hash map of int64 while
they fit; any overflow (or a key outside int64) reruns the product in
the pure-Python kernel, so results are always exact.
"""
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libc.stdint cimport int64_t

from . import _kernels_py

cdef extern from *:
    """
    static inline int jk_mul_add(long long a, long long b, long long *acc) {
        long long p;
        if (__builtin_mul_overflow(a, b, &p)) return 1;
        return __builtin_add_overflow(*acc, p, acc);
    }
    static inline int jk_add(long long a, long long b, long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    """
    int jk_mul_add(long long a, long long b, long long *acc) nogil
    int jk_add(long long a, long long b, long long *out) nogil

BACKEND = "compiled"

cdef long long _LIMIT = 1LL << 62


cdef bint _load(dict d, vector[int64_t]& keys, vector[int64_t]& vals):
    cdef object k, v
    for k, v in d.items():
        if not (-_LIMIT < v < _LIMIT) or not (0 <= k < _LIMIT):
            return False
        keys.push_back(k)
        vals.push_back(v)
    return True


def sparse_mul(dict a, dict b):
    cdef vector[int64_t] ka, va, kb, vb
    if not (_load(a, ka, va) and _load(b, kb, vb)):
        return _kernels_py.sparse_mul(a, b)
    cdef unordered_map[int64_t, long long] out
    cdef size_t i, j
    cdef long long key
    cdef bint overflow = False
    out.reserve(ka.size() * kb.size())
    with nogil:
        for i in range(ka.size()):
            for j in range(kb.size()):
                if jk_add(ka[i], kb[j], &key) or key >= _LIMIT:
                    overflow = True
                    break
                if jk_mul_add(va[i], vb[j], &out[key]):
                    overflow = True
                    break
            if overflow:
                break
    if overflow:
        return _kernels_py.sparse_mul(a, b)
    cdef pair[int64_t, long long] kv
    result = {}
    for kv in out:
        if kv.second != 0:
            result[kv.first] = kv.second
    return result


def sparse_pow(dict a, int e):
    if e < 0:
        raise ValueError("negative exponent")
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
