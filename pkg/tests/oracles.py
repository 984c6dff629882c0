"""Brute-force sympy versions of the substitution rules, used as test oracles."""
from itertools import combinations, permutations

import sympy as sp
from sympy.polys.polyfuncs import symmetrize

from conftest import G, to_sympy

X = sp.symbols("x1:6")
Y = sp.symbols("y1:6")
Z = sp.Symbol("z")


def rf(a, k):
    return sp.prod([a + i for i in range(k)]) if k else sp.Integer(1)


def sym_to_expr(p, xs=X):
    out = sp.Integer(0)
    for lam, c in p.terms.items():
        out += to_sympy(c) * sum(sp.prod([xs[i] ** e for i, e in enumerate(q)]) for q in set(permutations(lam)))
    return out


def _in_e(expr, xs):
    if not xs:
        return expr, []
    formal, rem, defs = symmetrize(sp.expand(expr), *xs, formal=True)
    assert rem == 0
    return formal, [s for s, _ in defs]


def _eta_map(expr, etas, weight):
    poly = sp.Poly(sp.expand(expr), *etas)
    total = sp.Integer(0)
    for mono, c in poly.terms():
        total += c * weight(mono)
    return sp.expand(total)


def qz_oracle(p, g=G):
    """Q_z on a SymPoly; returns a sympy expression in y_1..y_n and z."""
    n = p.n
    ys = Y[:n]
    etas = sp.symbols(f"eta1:{n + 1}")
    formal, svars = _in_e(sym_to_expr(p), X[:n])
    subs = {}
    for j, s in enumerate(svars, start=1):
        subs[s] = sum((1 + sum(etas[i] for i in S)) * sp.prod([ys[i] for i in S]) for S in combinations(range(n), j))
    body = formal.subs(subs) if svars else formal

    def weight(m):
        k = sum(m)
        return (Z - 1) ** k * sp.prod([rf(g, mi) for mi in m]) / rf(n * g, k)

    return sp.expand(sp.simplify(_eta_map(body, etas, weight)))


def a_oracle(f, n, k, g=G):
    """A_{k+1} on a SymPoly in k+1 variables; expression in y_1..y_k and z."""
    ys = (sp.Integer(1),) + Y[:k]
    etas = sp.symbols(f"eta0:{k + 1}")
    formal, svars = _in_e(sym_to_expr(f), X[: k + 1])
    subs = {}
    for j, s in enumerate(svars, start=1):
        subs[s] = sum((1 + sum(etas[i] for i in S)) * sp.prod([ys[i] for i in S]) for S in combinations(range(k + 1), j))
    body = formal.subs(subs) if svars else formal

    def weight(m):
        tot = sum(m)
        w = rf((n - k) * g, m[0]) * sp.prod([rf(g, mi) for mi in m[1:]])
        return (Z - 1) ** tot * w / rf(n * g, tot)

    return sp.expand(sp.simplify(_eta_map(body, etas, weight)))


def q0_oracle(p, g=G):
    """Q0' on a SymPoly in n-1 variables; expression in y_1..y_n."""
    n = p.n + 1
    ys = Y[:n]
    xis = sp.symbols(f"xi1:{n + 1}")
    formal, svars = _in_e(sym_to_expr(p), X[: n - 1])
    subs = {}
    for i, s in enumerate(svars, start=1):
        subs[s] = sum(xis[j] * sum(sp.prod([ys[t] for t in S]) for S in combinations([t for t in range(n) if t != j], i))
                      for j in range(n))
    body = formal.subs(subs) if svars else formal

    def weight(m):
        return sp.prod([rf(g, mi) for mi in m]) / rf(n * g, sum(m))

    # the constant term carries (sum xi)^0; homogenise by the degree-0 rule
    return sp.expand(sp.simplify(_eta_map(body, xis, weight)))


def symz_to_expr(q, ys=Y):
    return sp.expand(sum(Z**j * sym_to_expr(p, ys) for j, p in q.coeffs.items()))
