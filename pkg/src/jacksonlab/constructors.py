"""The four approximation constructions and their error reports.

Given a degree budget n, builds: the Bernstein operator of order n, the
quantum-counting polynomial (median-of-three, or the single-run variant
that loses a log factor), the phase-estimation trigonometric polynomial,
and convolution with the Jackson kernel.  All expectations are exact
sums; no sampling is involved anywhere.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .numerics import (
    Grid,
    PreconditionError,
    TrigPoly,
    cheb_coeffs_from_samples,
    cheb_nodes,
    circle_dist,
    modulus_estimate,
    sup_distance,
    trig_coeffs_from_samples,
)
from .counting_model import binom_weight_matrix, median3_amp_pmf, single_run_amp_pmf
from .phase_dist import KernelSpec, jackson_kernel

ALGEBRAIC_METHODS = ("bernstein", "counting_median3", "counting_single")
TRIG_METHODS = ("phase_median3", "jackson_kernel")
METHODS = ALGEBRAIC_METHODS + TRIG_METHODS


@dataclass(frozen=True)
class ErrorReport:
    """Grid sup error of an approximant against its target, scaled by omega_{1/n}."""

    method: str
    n: int
    sup_err: float
    omega_ref: float
    ratio: float
    grid_size: int


@dataclass(frozen=True)
class Approximant:
    """A built approximant: callable, with its derived parameters."""

    method: str
    n: int
    M: Optional[int]
    N: Optional[int]
    fn: Callable
    degenerate: bool = False

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))


def derived_params(method, n):
    """(M, N) for a method at degree budget n; None where not applicable.

    M is chosen as the largest precision whose degree bound fits inside
    n: 6(M-1) <= n for three counting runs, 2(M-1) <= n for one run,
    3(M-1) <= n for three phase estimations.
    """
    n = int(n)
    if n < 1:
        raise PreconditionError("degree budget n must be >= 1")
    if method == "bernstein":
        return None, None
    if method == "counting_median3":
        return n // 6 + 1, n * n
    if method == "counting_single":
        return n // 2 + 1, n * n
    if method == "phase_median3":
        return n // 3 + 1, None
    if method == "jackson_kernel":
        return None, None
    raise PreconditionError(f"unknown method {method!r}; valid: {', '.join(METHODS)}")


def bernstein_eval(g, n, x):
    """Value at x of the order-n Bernstein operator applied to g."""
    return build_approximant(g, "bernstein", n)(x)


def _bernstein_approximant(g, n):
    values = np.asarray(g(np.arange(n + 1) / n), dtype=float)

    def fn(x):
        scalar = np.ndim(x) == 0
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = binom_weight_matrix(n, x) @ values
        return float(out[0]) if scalar else out

    return Approximant(method="bernstein", n=n, M=None, N=None, fn=fn)


def _counting_value_table(g, N, M, median3):
    """v_k = E[g(A)|weight k] (or E[g(A')|k]), one entry per weight."""
    table = np.empty(N + 1)
    for k in range(N + 1):
        if median3:
            values, probs = median3_amp_pmf(k, N, M)
        else:
            values, probs = single_run_amp_pmf(k, N, M)
        table[k] = float(np.dot(probs, np.asarray(g(values), dtype=float)))
    return table


def _counting_approximant(g, n, median3):
    method = "counting_median3" if median3 else "counting_single"
    M, N = derived_params(method, n)
    degenerate = M == 1
    if degenerate:
        warnings.warn(
            f"{method} with n={n} gives precision M=1: the approximant "
            "degenerates to the constant g(0)",
            stacklevel=3,
        )
    table = _counting_value_table(g, N, M, median3)

    def fn(x):
        scalar = np.ndim(x) == 0
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = binom_weight_matrix(N, x) @ table
        return float(out[0]) if scalar else out

    return Approximant(method=method, n=n, M=M, N=N, fn=fn, degenerate=degenerate)


def counting_eval(g, n, x):
    """Quantum-counting polynomial (median-of-three estimate) at x."""
    return build_approximant(g, "counting_median3", n)(x)


def counting_single_eval(g, n, x):
    """Single-run quantum-counting polynomial at x."""
    return build_approximant(g, "counting_single", n)(x)


def _phase_approximant(g, n):
    if not g.periodic:
        raise PreconditionError("phase construction requires a periodic target")
    M, _ = derived_params("phase_median3", n)
    gvals = np.asarray(g(np.arange(M) / M), dtype=float)
    support, inverse = np.unique(gvals, return_inverse=True)

    def fn(x):
        scalar = np.ndim(x) == 0
        x = np.atleast_1d(np.asarray(x, dtype=float))
        d = circle_dist(np.arange(M)[None, :] / M, (x % 1.0)[:, None])
        probs = np.ones_like(d)
        far = d > 1e-15
        probs[far] = np.sin(np.pi * M * d[far]) ** 2 / (
            M**2 * np.sin(np.pi * d[far]) ** 2
        )
        # aggregate outcome probabilities onto distinct g-values, then take
        # the exact median-of-three law columnwise
        agg = np.zeros((len(x), len(support)))
        np.add.at(agg.T, inverse, probs.T)
        cdf = np.clip(np.cumsum(agg, axis=1), 0.0, 1.0)
        med_cdf = cdf * cdf * (3.0 - 2.0 * cdf)
        pmf = np.diff(np.concatenate((np.zeros((len(x), 1)), med_cdf), axis=1), axis=1)
        out = pmf @ support
        return float(out[0]) if scalar else out

    return Approximant(method="phase_median3", n=n, M=M, N=None, fn=fn)


def phase_eval(g, n, x):
    """Phase-estimation construction E[median of three g(Z_i/M)] at x."""
    return build_approximant(g, "phase_median3", n)(x)


def phase_to_trigpoly(g, n):
    """Fourier-coefficient form of the phase construction (degree <= n)."""
    approx = build_approximant(g, "phase_median3", n)
    m = 2 * n + 3  # odd, comfortably above twice the true degree 3(M-1)
    samples = np.asarray(approx(np.arange(m) / m), dtype=float)
    return trig_coeffs_from_samples(samples)


def kernel_convolve(g, kernel: KernelSpec, quad_points):
    """Convolution of a periodic g with a trig-polynomial kernel.

    Uses the uniform-node composite rule, which is exact (to rounding)
    for trigonometric integrands of degree below the node count.
    """
    if not g.periodic:
        raise PreconditionError("kernel convolution requires a periodic target")
    quad_points = int(quad_points)
    if quad_points < 8 * (kernel.trig_degree + 1):
        raise PreconditionError(
            "quad_points must be at least 8*(kernel trig degree + 1)"
        )
    s = np.arange(quad_points) / quad_points
    gs = np.asarray(g(s), dtype=float)

    def fn(x):
        scalar = np.ndim(x) == 0
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = kernel(s[None, :] - x[:, None]) @ gs / quad_points
        return float(out[0]) if scalar else out

    return fn


def _jackson_approximant(g, n):
    order = max(n // 2, 1)
    kernel = jackson_kernel(order)
    quad = 8 * (kernel.trig_degree + 1)
    fn = kernel_convolve(g, kernel, quad)
    return Approximant(method="jackson_kernel", n=n, M=None, N=None, fn=fn)


def build_approximant(g, method, n):
    """Build the named construction for target g at degree budget n."""
    if method in TRIG_METHODS and not g.periodic:
        raise PreconditionError(f"method {method!r} requires a periodic target")
    if method == "bernstein":
        return _bernstein_approximant(g, n)
    if method == "counting_median3":
        return _counting_approximant(g, n, median3=True)
    if method == "counting_single":
        return _counting_approximant(g, n, median3=False)
    if method == "phase_median3":
        return _phase_approximant(g, n)
    if method == "jackson_kernel":
        return _jackson_approximant(g, n)
    raise PreconditionError(f"unknown method {method!r}; valid: {', '.join(METHODS)}")


def approximant_coefficients(g, approx):
    """Spectral coefficients of a built approximant.

    Chebyshev for the algebraic methods (sampled at n+1 nodes, exact for
    a polynomial of degree <= n), Fourier for the trigonometric ones.
    """
    n = approx.n
    if approx.method in ALGEBRAIC_METHODS:
        return cheb_coeffs_from_samples(approx(cheb_nodes(n + 1)))
    m = 2 * n + 3
    return trig_coeffs_from_samples(np.asarray(approx(np.arange(m) / m), dtype=float))


def omega_reference(g, delta, grid_size=None):
    """omega_delta(g): analytic when the target ships one, else a grid estimate."""
    if g.analytic_modulus is not None:
        return float(g.analytic_modulus(delta))
    size = grid_size or max(4097, int(np.ceil(16.0 / delta)) + 1)
    return modulus_estimate(g, delta, Grid.uniform(size))


def error_report(g, method, n, grid=None):
    """Grid sup error of the named construction, with the omega_{1/n} ratio."""
    grid = grid or Grid.uniform(4097)
    approx = build_approximant(g, method, n)
    sup_err = sup_distance(g, approx, grid)
    omega = omega_reference(g, 1.0 / n)
    ratio = sup_err / omega if omega > 0 else 0.0
    return ErrorReport(
        method=method,
        n=int(n),
        sup_err=sup_err,
        omega_ref=omega,
        ratio=ratio,
        grid_size=len(grid),
    )
