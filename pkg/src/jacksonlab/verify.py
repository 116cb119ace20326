"""Cross-validation suite: closed forms against the statevector oracle.

Each check pits two independently coded paths against each other (or an
exact identity against floating-point evaluation) and reports the max
residual with its contract tolerance.
"""

from __future__ import annotations

import numpy as np

from . import phase_dist, qsim
from .counting_model import single_run_pmf
from .numerics import circle_dist


def _x_sweep(count):
    # includes exact-phase points (multiples of 1/M for small M) and irrationals
    return np.linspace(0.0, 1.0, count, endpoint=False)


def check_pe_equivalence(m_max=64, x_count=32):
    worst = 0.0
    for M in range(2, m_max + 1):
        for x in _x_sweep(x_count):
            a = qsim.pe_statevector_pmf(M, x)
            b = phase_dist.pe_pmf(M, x).probs
            worst = max(worst, float(np.max(np.abs(a - b))))
    return worst


def check_tail_bound(m_max=64, x_count=32):
    worst = 0.0
    for M in range(2, m_max + 1):
        for x in _x_sweep(x_count):
            pmf = phase_dist.pe_pmf(M, x)
            d = np.atleast_1d(circle_dist(np.arange(M) / M, pmf.x))
            far = d > 0
            bound = phase_dist.tail_bound(M, d[far])
            worst = max(worst, float(np.max(pmf.probs[far] - bound, initial=0.0)))
    return worst


def check_eigenstructure(sizes=(4, 8, 16)):
    worst = 0.0
    for N in sizes:
        for k in range(1, N):
            w = np.array([1] * k + [0] * (N - k))
            ec = qsim.eigencheck(w)
            worst = max(worst, ec.residual, ec.orthogonality, ec.decomposition)
        # degenerate weights: u itself is an eigenvector with eigenvalue +-1
        u = np.ones(N) / np.sqrt(N)
        for k, sign in ((0, 1.0), (N, -1.0)):
            w = np.array([1] * k + [0] * (N - k))
            U = qsim.grover_unitary(w)
            worst = max(worst, float(np.linalg.norm(U @ u - sign * u)))
    return worst


def check_mixture(sizes=(4, 8, 16), m_range=(2, 8)):
    worst = 0.0
    for N in sizes:
        for k in range(N + 1):
            w = np.array([1] * k + [0] * (N - k))
            for M in range(m_range[0], m_range[1] + 1):
                a = qsim.counting_statevector_pmf(w, M)
                b = single_run_pmf(k, N, M)
                worst = max(worst, float(np.max(np.abs(a - b))))
    return worst


def check_fejer_identity(m_max=64, x_count=32):
    worst = 0.0
    xs = (np.arange(x_count) + 0.5) / x_count + 1e-4  # avoid M*x integer
    for M in range(2, m_max + 1):
        for x in xs:
            worst = max(worst, phase_dist.fejer_identity_check(M, x))
    return worst


def check_kernel_normalization(n_max=32):
    worst = 0.0
    for n in range(1, n_max + 1):
        worst = max(worst, abs(phase_dist.kernel_integral(phase_dist.fejer_kernel(n)) - 1.0))
        worst = max(worst, abs(phase_dist.kernel_integral(phase_dist.jackson_kernel(n)) - 1.0))
    worst = max(worst, abs(phase_dist.jackson_kernel(2).norm_const - 2.0 / 3.0))
    return worst


CHECKS = (
    ("pe_closed_form_vs_statevector", check_pe_equivalence, 1e-12),
    ("quadratic_tail_bound", check_tail_bound, 1e-15),
    ("grover_eigenstructure", check_eigenstructure, 1e-10),
    ("no_interference_mixture", check_mixture, 1e-12),
    ("fejer_identity", check_fejer_identity, 1e-12),
    ("kernel_normalization", check_kernel_normalization, 1e-10),
)


def run_verification():
    """Run every cross-check; returns a JSON-serializable manifest."""
    checks = {}
    passed = True
    for name, fn, tol in CHECKS:
        residual = fn()
        ok = residual <= tol
        passed = passed and ok
        checks[name] = {"max_residual": residual, "tolerance": tol, "pass": ok}
    return {"schema_version": 1, "passed": passed, "checks": checks}
