"""Consolidated identity suites behind the ``verify`` command.

Every suite is a list of cases; a case returns ``None`` on success or a
``(expected, actual)`` pair that is digested into the failure record.
Case order is fixed by the enumeration below, so reports are reproducible
whatever the worker count.
"""
from __future__ import annotations

import hashlib
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from . import quad
from .jack import apply_H, eval_at_ones, h_eigenvalue, jack, jack_poly, restricted_jack
from .partitions import enumerate_partitions, lower_set
from .qop import (
    SymZPoly,
    ZPoly,
    baxter_residual,
    beta_lambda,
    f_polynomial,
    q_eigenvalue_eta,
    q_eigenvalue_sum,
    qz_apply,
)
from .serialize import dumps
from .sov import (
    MultiZPoly,
    a_k_apply,
    q0_prime_apply,
    reconstruct,
    separate_via_chain,
    separate_via_q,
)
from .sympoly import (
    E_basis,
    SymPoly,
    expand_in_e,
    from_e_expansion,
    m_basis,
    restrict_last_to_zero,
)

__all__ = ["Failure", "VerifyReport", "run_verify", "SUITE_NAMES"]


@dataclass(frozen=True)
class Failure:
    identity: str
    lam: Tuple[int, ...]
    n: int
    g: str
    expected: str
    actual: str

    def as_json(self):
        return {
            "identity": self.identity,
            "lambda": list(self.lam),
            "n": self.n,
            "g": self.g,
            "expected_digest": self.expected,
            "actual_digest": self.actual,
        }


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: List[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_json(self):
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "failures": [f.as_json() for f in self.failures],
            "wall_time": self.wall_time,
        }


def _digest(value) -> str:
    try:
        text = dumps(value, indent=0)
    except TypeError:
        text = repr(value)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _partitions(max_n: int, max_weight: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for w in range(max_weight + 1):
            yield from enumerate_partitions(n, w)


Case = Tuple[Tuple[int, ...], Callable[[], Optional[tuple]]]


def _run(suite: str, identity: str, cases: Sequence[Case], g_label: str, workers: int) -> VerifyReport:
    start = time.perf_counter()
    report = VerifyReport(suite)

    def one(case):
        lam, fn = case
        return lam, fn()

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, cases))
    else:
        results = [one(c) for c in cases]
    for lam, outcome in results:
        report.cases += 1
        if outcome is not None:
            expected, actual = outcome
            report.failures.append(Failure(identity, tuple(lam), len(lam), g_label, _digest(expected), _digest(actual)))
    report.wall_time = time.perf_counter() - start
    return report


def _check(expected, actual):
    return None if expected == actual else (expected, actual)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _sympoly_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            p = m_basis(lam)
            back = from_e_expansion(len(lam), expand_in_e(p))
            if back != p:
                return p, back
            E = E_basis(lam)
            allowed = set(lower_set(lam))
            if E.terms.get(lam) != 1 or not set(E.terms) <= allowed:
                return lam, sorted(E.terms)
            return None
        yield lam, case


def _jack_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            P = jack_poly(lam, field)
            lhs = apply_H(P, field)
            rhs = P * h_eigenvalue(lam, field)
            if lhs != rhs:
                return rhs, lhs
            if P.terms.get(lam) != 1 or not set(P.terms) <= set(lower_set(lam)):
                return lam, sorted(P.terms)
            ones = P.expand_raw().evaluate((1,) * len(lam))
            return _check(eval_at_ones(lam, field=field), ones)
        yield lam, case


def _q_eigen_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            P = jack_poly(lam, field)
            q = q_eigenvalue_sum(lam, field=field)
            r = _check(SymZPoly.from_scaled(q, P), qz_apply(P, field))
            return r or _check(q, q_eigenvalue_eta(lam, field=field))
        yield lam, case


def _proportionality_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            q = q_eigenvalue_sum(lam, field=field)
            beta = beta_lambda(lam, field=field)
            r = _check(q * beta, f_polynomial(lam, field=field))
            if r:
                return r
            j, c = q.lowest_term()
            return _check((lam[-1], field.one / beta), (j, c))
        yield lam, case


def _triangularity_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            allowed = set(lower_set(lam))
            image = qz_apply(E_basis(lam), field)
            support = set()
            for p in image.coeffs.values():
                support |= set(p.terms)
            return None if support <= allowed else (sorted(allowed), sorted(support))
        yield lam, case


def _commutation_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            p = m_basis(lam)
            n = len(lam)
            lhs = qz_apply(p.times_en_power(1), field)
            base = qz_apply(p, field)
            rhs = SymZPoly(n, {j + 1: c.times_en_power(1) for j, c in base.coeffs.items()})
            return _check(rhs, lhs)
        yield lam, case


def _baxter_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            res = baxter_residual(lam, field=field)
            return None if all(r == 0 for r in res) else ([0] * len(res), res)
        yield lam, case


def _restricted_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            q = q_eigenvalue_sum(lam, field=field)
            P1 = restricted_jack(lam, 1, field)
            direct = ZPoly(P1.univariate_coeffs())
            return _check(q * eval_at_ones(lam, field=field), direct)
        yield lam, case


def _separation_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            n = len(lam)
            q = q_eigenvalue_sum(lam, field=field)
            expected = MultiZPoly.from_factors(eval_at_ones(lam, field=field), [q] * n)
            return _check(expected, separate_via_q(jack_poly(lam, field), field=field))
        yield lam, case


def _chain_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            E = E_basis(lam)
            return _check(separate_via_q(E, field=field), separate_via_chain(E, field=field))
        yield lam, case


def _stage_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            n = len(lam)
            q = q_eigenvalue_sum(lam, field=field)
            for k in range(n):
                lhs = a_k_apply(restricted_jack(lam, k + 1, field), n, k, field)
                rhs = SymZPoly.from_scaled(q, restricted_jack(lam, k, field).to_sympoly())
                if lhs != rhs:
                    return rhs, lhs
            return None
        yield lam, case


def _reconstruction_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w):
        def case(lam=lam):
            return _check(jack(lam, field=field), reconstruct(lam, field=field))
        yield lam, case


def _q0_factorisation_cases(max_n, max_w, field):
    for lam in _partitions(max_n, max_w, min_n=2):
        def case(lam=lam):
            E = E_basis(lam)
            z0 = qz_apply(E, field).coeffs.get(0, SymPoly(len(lam), {}))
            return _check(z0, q0_prime_apply(restrict_last_to_zero(E), field))
        yield lam, case


EXACT_SUITES = [
    ("sympoly.round_trip", "e-expansion round trip and E-basis triangularity", _sympoly_cases),
    ("jack.eigen", "Sutherland eigen-equation H P = h(lambda) P", _jack_cases),
    ("qop.eigen", "Q_z eigen-equation with q_lambda from the multiple sum", _q_eigen_cases),
    ("qop.proportionality", "f_lambda = beta_lambda q_lambda and small-z behaviour", _proportionality_cases),
    ("qop.triangularity", "Q_z E_lambda supported on the dominance lower set", _triangularity_cases),
    ("qop.commutation", "Q_z (e_n p) = z e_n Q_z p", _commutation_cases),
    ("qop.baxter", "Baxter differential equation residual", _baxter_cases),
    ("qop.restricted", "q_lambda(z) c_lambda = P_lambda(z, 1, ..., 1)", _restricted_cases),
    ("sov.separation", "rho_0 Q_z1 ... Q_zn P = c_lambda prod q_lambda(z_k)", _separation_cases),
    ("sov.chain", "A-chain equals the separating operator", _chain_cases),
    ("sov.stage", "A_{k+1} on restricted Jack polynomials", _stage_cases),
    ("sov.reconstruction", "Jack polynomials rebuilt by Q0' recursion", _reconstruction_cases),
    ("sov.q0_factorisation", "Q_0 = Q0' composed with x_n -> 0", _q0_factorisation_cases),
]
SUITE_NAMES = [s[0] for s in EXACT_SUITES] + ["quad.default"]


def run_verify(max_weight: int, max_n: int, field, g_label: str, *, tol: float = 1e-6, nodes: int = 64,
               quad_suite: str = "default", include_quad: bool = True, workers: int | None = None,
               only: Sequence[str] | None = None) -> List[VerifyReport]:
    if workers is None:
        workers = quad.worker_count()
    reports = []
    for name, identity, make in EXACT_SUITES:
        if only and name not in only:
            continue
        cases = list(make(max_n, max_weight, field))
        reports.append(_run(name, identity, cases, g_label, workers))
    if include_quad and (not only or "quad.default" in only):
        start = time.perf_counter()
        problems = quad.default_suite(tolerance=tol, extended=quad_suite == "extended")
        results = quad.run_suite(problems, nodes=nodes)
        rep = VerifyReport("quad.default", cases=len(results))
        for r in results:
            if not r.passed:
                rep.failures.append(Failure(f"{r.kind}: {r.label}", (), 0, "numeric",
                                            format(r.expected, ".17g"), format(r.computed, ".17g")))
        rep.wall_time = time.perf_counter() - start
        reports.append(rep)
    return reports
