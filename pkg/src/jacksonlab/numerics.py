"""Core function representations and numerical utilities.

Provides target-function and polynomial containers (Chebyshev and
trigonometric bases), circle distance, median-of-three helpers, sup-norm
and modulus-of-continuity estimation on grids, spectral coefficient
extraction from samples, and effective-degree certification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

import numpy as np


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""


class EvaluationError(ArithmeticError):
    """A function produced a non-finite value at a named point."""


def _scalarize(out, like):
    if np.isscalar(like) or np.ndim(like) == 0:
        return float(out)
    return out


def circle_dist(a, b):
    """Distance between phases a and b on the circle R/Z, in [0, 1/2]."""
    d = (np.asarray(a, dtype=float) - np.asarray(b, dtype=float)) % 1.0
    out = np.minimum(d, 1.0 - d)
    if out.ndim == 0:
        return float(out)
    return out


def median3(a, b, c):
    """Middle value of three reals."""
    return sorted((a, b, c))[1]


def median3_pmf(values, probs):
    """Exact pmf of the median of three i.i.d. draws from a discrete law.

    Aggregates duplicate support values, then uses the order-statistics
    identity P[med <= v] = F(v)^2 (3 - 2 F(v)).  Returns (support, probs)
    with support sorted increasing and duplicates merged.
    """
    values = np.asarray(values, dtype=float)
    probs = np.asarray(probs, dtype=float)
    support, inverse = np.unique(values, return_inverse=True)
    agg = np.zeros(len(support))
    np.add.at(agg, inverse, probs)
    cdf = np.clip(np.cumsum(agg), 0.0, 1.0)
    med_cdf = cdf * cdf * (3.0 - 2.0 * cdf)
    med_probs = np.diff(np.concatenate(([0.0], med_cdf)))
    return support, med_probs


@dataclass(frozen=True)
class TargetFunction:
    """An evaluable continuous function on [0,1] (or all of R if periodic).

    ``evaluator`` must accept numpy arrays.  ``analytic_modulus``, when
    present, maps a scale delta in (0,1] to an exact modulus of
    continuity at that scale.
    """

    evaluator: Callable
    periodic: bool = False
    analytic_modulus: Optional[Callable[[float], float]] = None
    name: str = "anonymous"

    def __call__(self, x):
        return self.evaluator(np.asarray(x, dtype=float))


@dataclass(frozen=True)
class Grid:
    """Strictly increasing evaluation points in [0,1]."""

    points: np.ndarray
    kind: str = "explicit"

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.size == 0:
            raise PreconditionError("grid must be nonempty")
        if pts.min() < 0.0 or pts.max() > 1.0:
            raise PreconditionError("grid points must lie in [0,1]")
        if pts.size > 1 and not np.all(np.diff(pts) > 0):
            raise PreconditionError("grid points must be strictly increasing")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    @staticmethod
    def uniform(size):
        return Grid(np.linspace(0.0, 1.0, size), kind="uniform")

    @staticmethod
    def chebyshev(size):
        return Grid(cheb_nodes(size), kind="chebyshev")


@dataclass(frozen=True)
class ChebPoly:
    """Algebraic polynomial in the Chebyshev basis, mapped to [0,1]."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.size < 1:
            raise PreconditionError("need at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        t = 2.0 * np.asarray(x, dtype=float) - 1.0
        out = np.polynomial.chebyshev.chebval(t, self.coeffs)
        return _scalarize(out, x)

    def truncated(self, n):
        """Drop all coefficients above degree n."""
        return ChebPoly(self.coeffs[: n + 1].copy())


@dataclass(frozen=True)
class TrigPoly:
    """Trigonometric polynomial sum_k c_k e^{2 pi i k x}, k in [-m, m]."""

    coeffs: np.ndarray  # complex, ordered k = -m .. m

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.size < 1 or c.size % 2 == 0:
            raise PreconditionError("coefficient vector must have odd length")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self):
        return (len(self.coeffs) - 1) // 2

    def coeff(self, k):
        m = self.degree
        if abs(k) > m:
            return 0.0 + 0.0j
        return complex(self.coeffs[k + m])

    def evaluate_complex(self, x):
        m = self.degree
        ks = np.arange(-m, m + 1)
        x = np.asarray(x, dtype=float)
        phases = np.exp(2j * np.pi * np.multiply.outer(x, ks))
        return phases @ self.coeffs

    def __call__(self, x):
        out = np.real(self.evaluate_complex(x))
        return _scalarize(out, x)

    def imag_residue(self, x):
        """Max |imaginary part| of evaluation at x; small for real polys."""
        return float(np.max(np.abs(np.imag(self.evaluate_complex(x)))))

    def conjugate_symmetry_defect(self):
        """Max |c_{-k} - conj(c_k)| relative to the largest coefficient."""
        c = self.coeffs
        defect = np.max(np.abs(c[::-1] - np.conj(c)))
        scale = max(np.max(np.abs(c)), 1e-300)
        return float(defect / scale)

    def truncated(self, n):
        m = self.degree
        if n >= m:
            return self
        return TrigPoly(self.coeffs[m - n : m + n + 1].copy())


def sup_distance(f, h, grid):
    """Max over the grid of |f(x) - h(x)|; a lower bound on the sup norm."""
    pts = grid.points
    fv = np.asarray(f(pts), dtype=float)
    hv = np.asarray(h(pts), dtype=float)
    diff = fv - hv
    bad = ~np.isfinite(diff)
    if bad.any():
        raise EvaluationError(f"non-finite value at x={pts[bad][0]!r}")
    return float(np.max(np.abs(diff)))


def modulus_estimate(f, delta, grid):
    """Grid estimate of the modulus of continuity of f at scale delta.

    Maximizes |f(x)-f(y)| over grid pairs with |x-y| <= delta; a lower
    bound on the true modulus.  Requires grid spacing <= delta/8.
    """
    if not (delta > 0.0 and delta <= 1.0):
        raise PreconditionError("delta must lie in (0, 1]")
    pts = grid.points
    if len(pts) < 2:
        raise PreconditionError("grid too coarse for modulus estimation")
    spacing = np.max(np.diff(pts))
    if spacing > delta / 8.0 + 1e-15:
        raise PreconditionError(
            f"grid spacing {spacing:.3g} exceeds delta/8 = {delta / 8.0:.3g}"
        )
    vals = np.asarray(f(pts), dtype=float)
    best = 0.0
    tol = delta * (1.0 + 1e-12)
    for shift in range(1, len(pts)):
        dx = pts[shift:] - pts[:-shift]
        if dx.min() > tol:
            break
        mask = dx <= tol
        if mask.any():
            best = max(best, float(np.max(np.abs(vals[shift:] - vals[:-shift])[mask])))
    return best


def cheb_nodes(count):
    """count first-kind Chebyshev points mapped to [0,1], increasing."""
    if count < 1:
        raise PreconditionError("need at least one node")
    j = np.arange(count)
    return (1.0 - np.cos(np.pi * (2 * j + 1) / (2 * count))) / 2.0


def cheb_coeffs_from_samples(values):
    """Interpolating ChebPoly through samples at cheb_nodes(len(values)).

    Uses discrete Chebyshev orthogonality, so the round trip through
    evaluation at the nodes reproduces the inputs to rounding.
    """
    values = np.asarray(values, dtype=float)
    m1 = len(values)
    if m1 < 1:
        raise PreconditionError("need at least one sample")
    j = np.arange(m1)
    # angles of the nodes in the t = 2x-1 coordinate, matching cheb_nodes order
    psi = np.pi - np.pi * (2 * j + 1) / (2 * m1)
    k = np.arange(m1)
    basis = np.cos(np.outer(k, psi))
    coeffs = (2.0 / m1) * basis @ values
    coeffs[0] /= 2.0
    return ChebPoly(coeffs)


def trig_coeffs_from_samples(values):
    """Fourier coefficients of a signal sampled at m equispaced points.

    m must be odd; recovery is exact (to rounding) for trigonometric
    polynomials of degree <= (m-1)/2.
    """
    values = np.asarray(values)
    m = len(values)
    if m < 1:
        raise PreconditionError("need at least one sample")
    if m % 2 == 0:
        raise PreconditionError("sample count must be odd (ambiguous Nyquist bin)")
    coeffs = np.fft.fftshift(np.fft.fft(values)) / m
    return TrigPoly(coeffs)


class DegreeReport(NamedTuple):
    leak: float      # relative coefficient magnitude above the claimed degree
    residual: float  # max |h - truncation| on fresh random points


def _fresh_points(count, seed):
    return np.random.default_rng(seed).uniform(0.0, 1.0, size=count)


def effective_algebraic_degree(h, claimed_degree, probe_count, seed=0, fresh_count=512):
    """Certify that h is an algebraic polynomial of degree <= claimed_degree.

    Samples h at probe_count Chebyshev nodes, extracts coefficients, and
    reports the relative leakage above the claimed degree plus the max
    deviation between h and its truncation on fresh random points.  A
    small residual certifies the degree bound regardless of aliasing.
    """
    n = int(claimed_degree)
    if probe_count < 4 * n + 1:
        raise PreconditionError("probe_count must be at least 4*claimed_degree + 1")
    nodes = cheb_nodes(probe_count)
    vals = np.asarray(h(nodes), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise EvaluationError("non-finite sample during degree probe")
    poly = cheb_coeffs_from_samples(vals)
    c = np.abs(poly.coeffs)
    scale = max(float(np.max(c)), 1e-300)
    leak = float(np.max(c[n + 1 :])) / scale if len(c) > n + 1 else 0.0
    trunc = poly.truncated(n)
    pts = _fresh_points(fresh_count, seed)
    residual = float(np.max(np.abs(np.asarray(h(pts), dtype=float) - trunc(pts))))
    return DegreeReport(leak=leak, residual=residual)


def effective_trig_degree(h, claimed_degree, probe_count, seed=0, fresh_count=512):
    """Trigonometric analogue of effective_algebraic_degree.

    Uses uniform sampling on [0,1) with an odd sample count and Fourier
    analysis; residual is measured on fresh random points in [0,1).
    """
    n = int(claimed_degree)
    if probe_count < 4 * n + 1:
        raise PreconditionError("probe_count must be at least 4*claimed_degree + 1")
    m = int(probe_count)
    if m % 2 == 0:
        m += 1
    samples = np.asarray(h(np.arange(m) / m), dtype=float)
    if not np.all(np.isfinite(samples)):
        raise EvaluationError("non-finite sample during degree probe")
    poly = trig_coeffs_from_samples(samples)
    mags = np.abs(poly.coeffs)
    scale = max(float(np.max(mags)), 1e-300)
    half = poly.degree
    outside = np.concatenate((mags[: half - n], mags[half + n + 1 :]))
    leak = float(np.max(outside)) / scale if outside.size else 0.0
    trunc = poly.truncated(n)
    pts = _fresh_points(fresh_count, seed)
    residual = float(np.max(np.abs(np.asarray(h(pts), dtype=float) - trunc(pts))))
    return DegreeReport(leak=leak, residual=residual)
