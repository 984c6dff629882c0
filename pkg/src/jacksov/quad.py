"""Floating-point checks of the integral identities behind the algebra.

Each delta constraint is resolved analytically by eliminating one variable.
The remaining domain is an exact polytope, and Gauss-Legendre rules are
applied to it.

* The product constraint  x_1 ... x_n = z y_1 ... y_n  is handled in
  logarithmic coordinates s_i = ln x_i (i < n). There the Jacobian
  1/(x_1 ... x_{n-1}) of the elimination cancels against dx_i = x_i ds_i,
  and the ordering conditions become a box cut by a half-space on sum(s).
* The linear constraints (simplex, trigonometric sum) become a box cut by
  a slab on the coordinate sum.

Polytopes are split into simplices (Delaunay on their vertices). Each
simplex is integrated with a collapsed (Duffy) tensor Gauss-Legendre rule.
Box domains use a plain tensor rule.

Integrands with g >= 1 are bounded, so the default rules converge
geometrically. For 0 < g < 1 the ``grading`` option clusters nodes at
the cube faces through u -> u^r / (u^r + (1-u)^r).
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from scipy.spatial import Delaunay

from .jack import jack_poly
from .partitions import as_partition, flat_and_natural
from .qop import beta_lambda, qz_apply
from .scalars import RatFunc, SpecializedField, specialize
from .sov import a_k_apply, q0_prime_apply
from .sympoly import RawPoly, SymPoly, as_sympoly, elementary, m_basis

__all__ = [
    "QuadProblem",
    "QuadReport",
    "KINDS",
    "dirichlet_liouville",
    "rational_modified",
    "trigonometric_modified",
    "qz_numeric",
    "a_kernel_numeric",
    "q0_numeric",
    "jack_representation_numeric",
    "solve",
    "default_suite",
    "run_suite",
    "convergence_check",
    "commutation_check",
    "worker_count",
]

KINDS = (
    "dirichlet",
    "rational_modified",
    "trigonometric",
    "qz_kernel",
    "a_kernel",
    "q0_kernel",
    "jack_representation",
)
ERROR_FLOOR = 1e-300


@dataclass(frozen=True)
class QuadReport:
    kind: str
    label: str
    computed: float
    expected: float
    relative_error: float
    evaluations: int
    nodes: int
    tolerance: float = 1e-6

    @property
    def passed(self) -> bool:
        return self.relative_error <= self.tolerance


@dataclass(frozen=True)
class QuadProblem:
    kind: str
    params: Dict = field(hash=False)
    tolerance: float = 1e-6
    label: str = ""


def _report(kind, label, computed, expected, evaluations, nodes, tol) -> QuadReport:
    computed = float(computed)
    expected = float(expected)
    rel = abs(computed - expected) / max(abs(expected), ERROR_FLOOR)
    return QuadReport(kind, label, computed, expected, rel, int(evaluations), nodes, tol)


# ---------------------------------------------------------------------------
# rules
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _gl01(nodes: int, grading: float) -> Tuple[np.ndarray, np.ndarray]:
    t, w = np.polynomial.legendre.leggauss(nodes)
    u = (t + 1.0) / 2.0
    w = w / 2.0
    if grading != 1:
        r = grading
        a, b = u ** r, (1.0 - u) ** r
        phi = a / (a + b)
        dphi = r * (u * (1.0 - u)) ** (r - 1) / (a + b) ** 2
        u, w = phi, w * dphi
    return u, w


@lru_cache(maxsize=None)
def _cube_rule(d: int, nodes: int, grading: float) -> Tuple[np.ndarray, np.ndarray]:
    u, w = _gl01(nodes, grading)
    if d == 0:
        return np.zeros((1, 0)), np.ones(1)
    grids = np.meshgrid(*([u] * d), indexing="ij")
    wgrids = np.meshgrid(*([w] * d), indexing="ij")
    pts = np.stack([gr.ravel() for gr in grids], axis=1)
    wts = np.prod(np.stack([gr.ravel() for gr in wgrids], axis=1), axis=1)
    return pts, wts


@lru_cache(maxsize=None)
def _duffy_rule(d: int, nodes: int, grading: float) -> Tuple[np.ndarray, np.ndarray]:
    """Rule on the standard simplex {t >= 0, sum t <= 1} in d dimensions."""
    u, w = _cube_rule(d, nodes, grading)
    t = np.empty_like(u)
    remaining = np.ones(len(u))
    jac = np.ones(len(u))
    for i in range(d):
        if i:
            jac = jac * remaining
        t[:, i] = remaining * u[:, i]
        remaining = remaining * (1.0 - u[:, i])
    return t, w * jac


def _simplex_rule(vertices: np.ndarray, nodes: int, grading: float):
    d = vertices.shape[1]
    t, w = _duffy_rule(d, nodes, grading)
    base = vertices[0]
    edges = vertices[1:] - base
    vol = abs(np.linalg.det(edges))
    return base + t @ edges, w * vol


def _polytope_rule(vertices: np.ndarray, nodes: int, grading: float):
    """Quadrature points and weights on the convex hull of ``vertices``."""
    if vertices.size == 0:
        return None
    d = vertices.shape[1]
    if d == 0:
        return np.zeros((1, 0)), np.ones(1)
    if d == 1:
        lo, hi = vertices[:, 0].min(), vertices[:, 0].max()
        if hi <= lo:
            return None
        u, w = _gl01(nodes, grading)
        return (lo + (hi - lo) * u)[:, None], w * (hi - lo)
    if len(vertices) <= d or np.linalg.matrix_rank(vertices[1:] - vertices[0]) < d:
        return None
    tri = Delaunay(vertices)
    pts, wts = [], []
    for simplex in tri.simplices:
        p, w = _simplex_rule(vertices[simplex], nodes, grading)
        pts.append(p)
        wts.append(w)
    return np.concatenate(pts), np.concatenate(wts)


def _box_slab_vertices(lo: Sequence[float], hi: Sequence[float], a: float, b: float) -> np.ndarray:
    """Vertices of {lo <= s <= hi, a <= sum(s) <= b}."""
    d = len(lo)
    pts = []
    for corner in product((0, 1), repeat=d):
        s = [hi[i] if c else lo[i] for i, c in enumerate(corner)]
        if a - 1e-14 <= sum(s) <= b + 1e-14:
            pts.append(s)
    for i in range(d):
        others = [j for j in range(d) if j != i]
        for corner in product((0, 1), repeat=d - 1):
            rest = {j: (hi[j] if c else lo[j]) for j, c in zip(others, corner)}
            for target in (a, b):
                if not math.isfinite(target):
                    continue
                si = target - sum(rest.values())
                if lo[i] < si < hi[i]:
                    s = [rest[j] if j != i else si for j in range(d)]
                    pts.append(s)
    if not pts:
        return np.zeros((0, d))
    arr = np.unique(np.round(np.array(pts, dtype=float), 14), axis=0)
    return arr


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------

def _vandermonde(X: np.ndarray) -> np.ndarray:
    out = np.ones(X.shape[:-1])
    n = X.shape[-1]
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (X[..., j] - X[..., i])
    return out


def _vandermonde_scalar(y: Sequence[float]) -> float:
    out = 1.0
    for i in range(len(y)):
        for j in range(i + 1, len(y)):
            out *= y[j] - y[i]
    return out


def _xi(X: np.ndarray, y: Sequence[float]) -> np.ndarray:
    """xi_i = prod_k (x_k - y_i) / prod_{k != i} (y_k - y_i), last axis i."""
    n = len(y)
    cols = []
    for i in range(n):
        num = np.prod(X - y[i], axis=-1)
        den = 1.0
        for k in range(n):
            if k != i:
                den *= y[k] - y[i]
        cols.append(num / den)
    return np.maximum(np.stack(cols, axis=-1), 0.0)


def _pow(x: np.ndarray, e: float) -> np.ndarray:
    """max(x, 0)**e; for e < 0 a node that rounded onto the boundary (a null set) contributes 0."""
    x = np.maximum(x, 0.0)
    if e >= 0:
        return x ** e
    pos = x > 0
    return np.where(pos, np.where(pos, x, 1.0) ** e, 0.0)


def _powers(xi: np.ndarray, alpha: Sequence[float]) -> np.ndarray:
    out = np.ones(xi.shape[:-1])
    for i, a in enumerate(alpha):
        if a != 1:
            out = out * _pow(xi[..., i], a - 1.0)
    return out


def _rational_kernel_integral(F: Callable, y: Sequence[float], z: float, nodes: int, grading: float):
    """int over y_1 < x_1 < y_2 < ... < y_n < x_n of delta(prod x - z prod y) F(x) dx."""
    n = len(y)
    if n == 1:
        X = np.array([[z * y[0]]])
        return float(F(X)[0]), 1
    logy = [math.log(v) for v in y]
    L = math.log(z) + sum(logy)
    lo, hi = logy[:-1], logy[1:]
    verts = _box_slab_vertices(lo, hi, -math.inf, L - logy[-1])
    rule = _polytope_rule(verts, nodes, grading)
    if rule is None:
        return 0.0, 0
    S, w = rule
    X = np.empty((len(S), n))
    X[:, :-1] = np.exp(S)
    X[:, -1] = np.exp(L - S.sum(axis=1))
    return float(np.dot(F(X), w)), len(S)


def _raw_numeric(p: RawPoly) -> Callable[[np.ndarray], np.ndarray]:
    terms = [(tuple(e), float(c)) for e, c in p.terms.items()]

    def f(X: np.ndarray) -> np.ndarray:
        out = np.zeros(X.shape[:-1])
        for exps, c in terms:
            t = np.full(X.shape[:-1], c)
            for i, e in enumerate(exps):
                if e:
                    t = t * X[..., i] ** e
            out = out + t
        return out

    return f


def _specialize_poly(p, g0: Fraction):
    """Coefficients of a SymPoly/RawPoly as exact rationals at g = g0."""
    def conv(c):
        return specialize(c, g0) if isinstance(c, RatFunc) else Fraction(c)

    if isinstance(p, SymPoly):
        return SymPoly(p.n, {k: conv(c) for k, c in p.terms.items()})
    return RawPoly(p.n, {k: conv(c) for k, c in p.terms.items()})


def _exact_g(g) -> Fraction:
    return Fraction(g) if not isinstance(g, float) else Fraction(g).limit_denominator(10 ** 12)


def _eval_sym_z(result, y: Sequence[float], z: float) -> float:
    """Evaluate a SymZPoly with rational coefficients at (y, z)."""
    yq = [Fraction(v) for v in y]
    zq = Fraction(z)
    total = Fraction(0)
    for j, poly in result.coeffs.items():
        val = poly.expand_raw().evaluate(yq) if poly.n else poly.terms.get((), 0)
        total += val * zq ** j
    return float(total)


# ---------------------------------------------------------------------------
# problems
# ---------------------------------------------------------------------------

def dirichlet_liouville(alpha: Sequence[float], n: int | None = None, *, nodes: int = 64,
                        grading: float = 1, tolerance: float = 1e-6) -> QuadReport:
    alpha = [float(a) for a in alpha]
    n = len(alpha)
    expected = math.exp(sum(math.lgamma(a) for a in alpha) - math.lgamma(sum(alpha)))
    if n == 1:
        return _report("dirichlet", f"alpha={alpha}", 1.0, expected, 1, nodes, tolerance)
    d = n - 1
    verts = np.vstack([np.zeros(d), np.eye(d)])
    S, w = _polytope_rule(verts, nodes, grading)
    xi = np.empty((len(S), n))
    xi[:, :-1] = S
    xi[:, -1] = np.maximum(1.0 - S.sum(axis=1), 0.0)
    computed = float(np.dot(_powers(xi, alpha), w))
    return _report("dirichlet", f"alpha={alpha}", computed, expected, len(S), nodes, tolerance)


def rational_modified(y: Sequence[float], alpha: Sequence[float], z: float, *, nodes: int = 64,
                      grading: float = 1, tolerance: float = 1e-6) -> QuadReport:
    y = [float(v) for v in y]
    alpha = [float(a) for a in alpha]
    _check_ordered(y)
    if z <= 1:
        raise ValueError("z must exceed 1")

    def F(X):
        return _vandermonde(X) * _powers(_xi(X, y), alpha)

    computed, evals = _rational_kernel_integral(F, y, z, nodes, grading)
    A = sum(alpha)
    expected = (z - 1) ** (A - 1) * _vandermonde_scalar(y) * math.exp(
        sum((a - 1) * math.log(v) + math.lgamma(a) for a, v in zip(alpha, y)) - math.lgamma(A)
    )
    return _report("rational_modified", f"y={y} alpha={alpha} z={z}", computed, expected, evals, nodes, tolerance)


def trigonometric_modified(v: Sequence[float], alpha: Sequence[float], gamma: float, *, nodes: int = 64,
                           grading: float = 1, tolerance: float = 1e-6) -> QuadReport:
    v = [float(a) for a in v]
    alpha = [float(a) for a in alpha]
    n = len(v)
    if not all(a < b for a, b in zip(v, v[1:])) or (n > 1 and v[-1] >= math.pi + v[0]):
        raise ValueError("need v_1 < ... < v_n < pi + v_1")
    if not 0 < gamma < math.pi:
        raise ValueError("gamma must lie in (0, pi)")
    total = sum(v) + gamma

    def F(U):
        out = np.ones(U.shape[:-1])
        for i in range(n):
            for j in range(i + 1, n):
                out = out * np.sin(U[..., j] - U[..., i])
        for i in range(n):
            num = np.prod(np.sin(U - v[i]), axis=-1)
            den = 1.0
            for k in range(n):
                if k != i:
                    den *= math.sin(v[k] - v[i])
            out = out * _pow(num / den, alpha[i] - 1.0)
        return out

    if n == 1:
        computed, evals = float(F(np.array([[total]]))[0]), 1
    else:
        lo, hi = v[:-1], v[1:]
        verts = _box_slab_vertices(lo, hi, total - math.pi - v[0], total - v[-1])
        rule = _polytope_rule(verts, nodes, grading)
        if rule is None:
            computed, evals = 0.0, 0
        else:
            S, w = rule
            U = np.empty((len(S), n))
            U[:, :-1] = S
            U[:, -1] = total - S.sum(axis=1)
            computed, evals = float(np.dot(F(U), w)), len(S)
    A = sum(alpha)
    vprod = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            vprod *= math.sin(v[j] - v[i])
    expected = math.sin(gamma) ** (A - 1) * vprod * math.exp(
        sum(math.lgamma(a) for a in alpha) - math.lgamma(A)
    )
    return _report("trigonometric", f"v={v} alpha={alpha} gamma={gamma}", computed, expected, evals, nodes, tolerance)


def _check_ordered(y):
    if not (y[0] > 0 and all(a < b for a, b in zip(y, y[1:]))):
        raise ValueError(f"anchors must satisfy 0 < y_1 < ... < y_n, got {y}")


def _qz_integral(p_num: Callable, y: Sequence[float], z: float, g: float, nodes: int, grading: float):
    n = len(y)

    def F(X):
        return _vandermonde(X) * _powers(_xi(X, y), [g] * n) * p_num(X)

    integral, evals = _rational_kernel_integral(F, y, z, nodes, grading)
    log_pref = (
        math.lgamma(n * g) - n * math.lgamma(g) + (1 - n * g) * math.log(z - 1)
        - (g - 1) * sum(math.log(v) for v in y)
    )
    return math.exp(log_pref) / _vandermonde_scalar(y) * integral, evals


def qz_numeric(p, y: Sequence[float], z: float, g, *, nodes: int = 64, grading: float = 1,
               tolerance: float = 1e-6) -> QuadReport:
    """[Q_z p](y) by quadrature against the exact algebraic action."""
    y = [float(v) for v in y]
    _check_ordered(y)
    if z <= 1:
        raise ValueError("z must exceed 1")
    g0 = _exact_g(g)
    p = _specialize_poly(as_sympoly(p), g0)
    if p.n != len(y):
        raise ValueError("anchor count differs from the number of variables")
    computed, evals = _qz_integral(_raw_numeric(p.expand_raw()), y, z, float(g0), nodes, grading)
    expected = _eval_sym_z(qz_apply(p, SpecializedField(g0)), y, z)
    return _report("qz_kernel", f"p={p!r} y={y} z={z} g={g0}", computed, expected, evals, nodes, tolerance)


def a_kernel_numeric(f, n: int, k: int, ytilde: Sequence[float], z: float, g, *, nodes: int = 64,
                     grading: float = 1, tolerance: float = 1e-6) -> QuadReport:
    """[A_{k+1} f](ytilde) by quadrature; anchors are (1, ytilde_1, ..., ytilde_k)."""
    ytilde = [float(v) for v in ytilde]
    if len(ytilde) != k:
        raise ValueError(f"A_{k + 1} needs {k} anchors")
    anchors = [1.0] + ytilde
    _check_ordered(anchors)
    if z <= 1:
        raise ValueError("z must exceed 1")
    g0 = _exact_g(g)
    gf = float(g0)
    f = _specialize_poly(as_sympoly(f), g0)
    fnum = _raw_numeric(f.expand_raw())
    alpha = [(n - k) * gf] + [gf] * k

    def F(X):
        return _vandermonde(X) * _powers(_xi(X, anchors), alpha) * fnum(X)

    integral, evals = _rational_kernel_integral(F, anchors, z, nodes, grading)
    log_pref = (
        math.lgamma(n * gf) - math.lgamma((n - k) * gf) - k * math.lgamma(gf)
        + (1 - n * gf) * math.log(z - 1) + (1 - gf) * sum(math.log(v) for v in ytilde)
    )
    computed = math.exp(log_pref) / _vandermonde_scalar(anchors) * integral
    expected = _eval_sym_z(a_k_apply(f, n, k, SpecializedField(g0)), ytilde, z)
    return _report("a_kernel", f"f={f!r} n={n} k={k} y={ytilde} z={z} g={g0}", computed, expected, evals,
                   nodes, tolerance)


def _q0_batch(p_num: Callable, Y: np.ndarray, g: float, nodes: int, grading: float) -> np.ndarray:
    """[Q0' p](y) for each row of Y (shape (M, n)) by a tensor rule on the ordered box."""
    M, n = Y.shape
    d = n - 1
    T, w = _cube_rule(d, nodes, grading)
    lo, width = Y[:, :-1], Y[:, 1:] - Y[:, :-1]
    X = lo[:, None, :] + width[:, None, :] * T[None, :, :]
    vol = np.prod(width, axis=1)
    kern = _vandermonde(X) * _xi_hat_power(X, Y, g)
    vals = p_num(X.reshape(M * len(T), d)).reshape(M, len(T))
    integral = (kern * vals) @ w * vol
    pref = math.exp(math.lgamma(n * g) - n * math.lgamma(g))
    return pref * integral / _vandermonde(Y)


def _xi_hat_power(X: np.ndarray, Y: np.ndarray, g: float) -> np.ndarray:
    """prod_i xihat_i^{g-1}, xihat_i = prod_k (x_k - y_i) / prod_{k != i} (y_k - y_i)."""
    n = Y.shape[1]
    out = np.ones(X.shape[:-1])
    if g == 1:
        return out
    for i in range(n):
        num = np.prod(X - Y[:, None, i:i + 1], axis=-1)
        den = np.ones(Y.shape[0])
        for k in range(n):
            if k != i:
                den = den * (Y[:, k] - Y[:, i])
        out = out * _pow(num / den[:, None], g - 1.0)
    return out


def q0_numeric(p, y: Sequence[float], g, *, nodes: int = 64, grading: float = 1,
               tolerance: float = 1e-6) -> QuadReport:
    y = [float(v) for v in y]
    _check_ordered(y)
    g0 = _exact_g(g)
    p = _specialize_poly(as_sympoly(p), g0)
    if p.n != len(y) - 1:
        raise ValueError("Q0' maps n-1 variables to n anchors")
    Y = np.array([y])
    computed = float(_q0_batch(_raw_numeric(p.expand_raw()), Y, float(g0), nodes, grading)[0])
    exact = q0_prime_apply(p, SpecializedField(g0))
    expected = float(exact.expand_raw().evaluate([Fraction(v) for v in y]))
    return _report("q0_kernel", f"p={p!r} y={y} g={g0}", computed, expected, nodes ** (len(y) - 1), nodes,
                   tolerance)


def _representation(lam: Tuple[int, ...], Y: np.ndarray, g: float, g0: Fraction, nodes: int,
                    grading: float) -> np.ndarray:
    """P_lambda at each row of Y through nested Q0' integrals."""
    n = len(lam)
    if n == 1:
        return Y[:, 0] ** lam[0]
    _, nat = flat_and_natural(lam)
    inner = lambda X: _representation(nat, X, g, g0, nodes, grading)  # noqa: E731
    lifted = _q0_batch(inner, Y, g, nodes, grading)
    beta = float(beta_lambda(lam, field=SpecializedField(g0)))
    return beta * np.prod(Y, axis=1) ** lam[-1] * lifted


def jack_representation_numeric(lam, x: Sequence[float], g, *, nodes: int = 64, grading: float = 1,
                                tolerance: float = 1e-6) -> QuadReport:
    lam = as_partition(lam)
    x = [float(v) for v in x]
    _check_ordered(x)
    if len(lam) != len(x):
        raise ValueError("point length differs from the partition length")
    if len(lam) > 3:
        raise ValueError("nested quadrature is limited to n <= 3")
    g0 = _exact_g(g)
    computed = float(_representation(lam, np.array([x]), float(g0), g0, nodes, grading)[0])
    P = jack_poly(lam, SpecializedField(g0))
    expected = float(P.expand_raw().evaluate([Fraction(v) for v in x]))
    evals = sum(nodes ** (j * (j - 1) // 2) for j in range(2, len(lam) + 1))
    return _report("jack_representation", f"lambda={lam} x={x} g={g0}", computed, expected, evals, nodes,
                   tolerance)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

_SOLVERS = {
    "dirichlet": lambda p, **kw: dirichlet_liouville(p["alpha"], **kw),
    "rational_modified": lambda p, **kw: rational_modified(p["y"], p["alpha"], p["z"], **kw),
    "trigonometric": lambda p, **kw: trigonometric_modified(p["v"], p["alpha"], p["gamma"], **kw),
    "qz_kernel": lambda p, **kw: qz_numeric(p["p"], p["y"], p["z"], p["g"], **kw),
    "a_kernel": lambda p, **kw: a_kernel_numeric(p["f"], p["n"], p["k"], p["y"], p["z"], p["g"], **kw),
    "q0_kernel": lambda p, **kw: q0_numeric(p["p"], p["y"], p["g"], **kw),
    "jack_representation": lambda p, **kw: jack_representation_numeric(p["lambda"], p["x"], p["g"], **kw),
}


def solve(problem: QuadProblem, nodes: int = 64, grading: float = 1) -> QuadReport:
    report = _SOLVERS[problem.kind](problem.params, nodes=nodes, grading=grading, tolerance=problem.tolerance)
    if problem.label:
        report = QuadReport(report.kind, problem.label, report.computed, report.expected,
                            report.relative_error, report.evaluations, report.nodes, report.tolerance)
    return report


def _raw(n: int, terms: Dict[Tuple[int, ...], int]) -> RawPoly:
    return RawPoly(n, terms)


def default_suite(g_values: Sequence = (1, 2, 3), tolerance: float = 1e-6, extended: bool = False) -> List[QuadProblem]:
    """Problems with n in {2, 3} and polynomial degree at most 3."""
    P = []

    def add(kind, label, **params):
        P.append(QuadProblem(kind, params, tolerance, label))

    add("dirichlet", "alpha=(1,1)", alpha=(1, 1))
    add("dirichlet", "alpha=(2,3)", alpha=(2, 3))
    add("dirichlet", "alpha=(2,2,2)", alpha=(2, 2, 2))
    add("rational_modified", "y=(1,2) alpha=(1,1) z=2", y=(1, 2), alpha=(1, 1), z=2)
    add("rational_modified", "y=(1,2) alpha=(2,1) z=3", y=(1, 2), alpha=(2, 1), z=3)
    add("rational_modified", "y=(1,2,3) alpha=(1,1,1) z=2", y=(1, 2, 3), alpha=(1, 1, 1), z=2)
    add("trigonometric", "v=(0,pi/2) alpha=(1,1) gamma=pi/2", v=(0, math.pi / 2), alpha=(1, 1), gamma=math.pi / 2)
    add("trigonometric", "v=(0,1) alpha=(2,2) gamma=1", v=(0, 1), alpha=(2, 2), gamma=1.0)
    add("trigonometric", "v=(0,1) alpha=(1,1) gamma=0.05", v=(0, 1), alpha=(1, 1), gamma=0.05)
    for g in g_values:
        gs = str(g)
        add("dirichlet", f"alpha=(g,g) g={gs}", alpha=(float(g),) * 2)
        add("dirichlet", f"alpha=(g,g,g) g={gs}", alpha=(float(g),) * 3)
        add("rational_modified", f"y=(1,2) alpha=(g,g) z=3 g={gs}", y=(1, 2), alpha=(float(g),) * 2, z=3)
        add("rational_modified", f"y=(1,2,3) alpha=(g,g,g) z=2.5 g={gs}", y=(1, 2, 3), alpha=(float(g),) * 3, z=2.5)
        add("trigonometric", f"v=(0,0.7,1.9) alpha=(g,g,g) gamma=1 g={gs}", v=(0, 0.7, 1.9),
            alpha=(float(g),) * 3, gamma=1.0)
        for lam in ((0, 0), (1, 0), (1, 1), (2, 1)):
            add("qz_kernel", f"p=m{lam} y=(1,2) z=3 g={gs}", p=m_basis(lam), y=(1, 2), z=3, g=g)
        for lam in ((1, 0, 0), (1, 1, 1), (2, 1, 0), (1, 1, 0)):
            add("qz_kernel", f"p=m{lam} y=(1,2,3) z=2.5 g={gs}", p=m_basis(lam), y=(1, 2, 3), z=2.5, g=g)
        add("a_kernel", f"n=2 k=1 f=e1 y=(2) z=3 g={gs}", f=elementary(1, 2), n=2, k=1, y=(2,), z=3, g=g)
        add("a_kernel", f"n=3 k=1 f=e1 y=(2) z=2 g={gs}", f=elementary(1, 2), n=3, k=1, y=(2,), z=2, g=g)
        add("a_kernel", f"n=3 k=1 f=m(2,1) y=(2) z=2 g={gs}", f=m_basis((2, 1)), n=3, k=1, y=(2,), z=2, g=g)
        add("a_kernel", f"n=3 k=2 f=m(2,1,0) y=(2,3) z=2 g={gs}", f=m_basis((2, 1, 0)), n=3, k=2, y=(2, 3),
            z=2, g=g)
        add("a_kernel", f"n=3 k=0 f=x^3 z=2 g={gs}", f=_raw(1, {(3,): 1}), n=3, k=0, y=(), z=2, g=g)
        add("q0_kernel", f"n=2 p=1 g={gs}", p=_raw(1, {(0,): 1}), y=(1, 2), g=g)
        add("q0_kernel", f"n=2 p=x1 g={gs}", p=_raw(1, {(1,): 1}), y=(1, 2), g=g)
        add("q0_kernel", f"n=3 p=x1+x2 g={gs}", p=elementary(1, 2), y=(1, 2, 3), g=g)
        add("q0_kernel", f"n=3 p=x1x2 g={gs}", p=elementary(2, 2), y=(1, 2, 3), g=g)
        add("q0_kernel", f"n=3 p=m(2,1) g={gs}", p=m_basis((2, 1)), y=(1, 2, 3), g=g)
        for lam in ((1, 0), (1, 1), (3, 0)):
            add("jack_representation", f"lambda={lam} x=(1,2) g={gs}", **{"lambda": lam}, x=(1, 2), g=g)
        for lam in ((2, 1, 0), (1, 1, 1), (3, 0, 0)):
            add("jack_representation", f"lambda={lam} x=(1,2,3) g={gs}", **{"lambda": lam}, x=(1, 2, 3), g=g)
    if extended:
        for g in g_values:
            add("qz_kernel", f"p=m(3,1) y=(0.5,2) z=4 g={g}", p=m_basis((3, 1)), y=(0.5, 2), z=4, g=g)
            add("jack_representation", f"lambda=(3,2,1) x=(0.5,1.5,2) g={g}", **{"lambda": (3, 2, 1)},
                x=(0.5, 1.5, 2), g=g)
    return P


def worker_count() -> int:
    env = os.environ.get("JACKSOV_THREADS", "").strip()
    cpus = os.cpu_count() or 1
    if env:
        try:
            return max(1, min(int(env), cpus))
        except ValueError:
            pass
    return cpus


def run_suite(problems: Sequence[QuadProblem], nodes: int = 64, grading: float = 1) -> List[QuadReport]:
    """Solve every problem; the result order matches the input order."""
    workers = worker_count()
    if workers == 1:
        return [solve(p, nodes, grading) for p in problems]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: solve(p, nodes, grading), problems))


def convergence_check(problem: QuadProblem, nodes: int = 8, floor: float = 1e-12) -> Tuple[QuadReport, QuadReport, bool]:
    """Compare resolutions ``nodes`` and ``2 * nodes``; True if the error shrank or sits at the floor."""
    coarse = solve(problem, nodes)
    fine = solve(problem, 2 * nodes)
    ok = fine.relative_error <= max(coarse.relative_error, floor)
    return coarse, fine, ok


def commutation_check(p: SymPoly, y: Sequence[float], z: float, g, *, nodes: int = 64) -> Tuple[float, float]:
    """Numeric [Q_z(e_n p)](y) against z e_n(y) [Q_z p](y)."""
    y = [float(v) for v in y]
    n = len(y)
    g0 = _exact_g(g)
    p = _specialize_poly(as_sympoly(p), g0)
    en_p = p.times_en_power(1)
    lhs, _ = _qz_integral(_raw_numeric(en_p.expand_raw()), y, z, float(g0), nodes, 1)
    base, _ = _qz_integral(_raw_numeric(p.expand_raw()), y, z, float(g0), nodes, 1)
    return lhs, z * math.prod(y) * base
