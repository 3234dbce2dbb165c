"""Coupling functions, class checks, approximation ratios and Fourier smoothing."""
import logging
import math

import numpy as np
from scipy.integrate import quad
from scipy.optimize import minimize_scalar

from app import config
from app.models import ClassGReport, CouplingFunction

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi
ZERO_EXCLUSION = 1e-4  # radians kept away from x = 0 in ratio scans
LIMIT_STEP = 1e-3


class RatioDomainError(ValueError):
    """1 - g(x) vanishes (or turns negative) inside the scanned interval."""


class CouplingNameError(ValueError):
    """Unknown coupling name."""


def circular_distance(a, b):
    """Shortest distance on the circle, in [0, π]."""
    d = np.mod(np.asarray(a, dtype=float) - np.asarray(b, dtype=float), TWO_PI)
    return np.minimum(d, TWO_PI - d)


def cosine() -> CouplingFunction:
    return CouplingFunction(name="cos", value_fn=np.cos, deriv_fn=lambda x: -np.sin(x))


def _g2_value(x):
    r = circular_distance(x, 0.0)
    return 1.0 - 2.0 * r**2 / np.pi**2


def _g2_deriv(x):
    r = np.mod(x, TWO_PI)
    folded = np.where(r > np.pi, TWO_PI - r, r)
    slope = np.where(r > np.pi, -1.0, 1.0)
    return -4.0 * folded * slope / np.pi**2


def quadratic_g2() -> CouplingFunction:
    """g2(x) = 1 - 2 x̂²/π² with x̂ the circular distance to 0; corner at x ≡ π."""
    return CouplingFunction(
        name="g2",
        value_fn=_g2_value,
        deriv_fn=_g2_deriv,
        is_smooth_everywhere=False,
    )


def fourier_coefficients(f: CouplingFunction, k: int) -> np.ndarray:
    """Cosine-series coefficients a_0..a_k of an even coupling by quadrature."""
    if k < 1:
        raise ValueError(f"term count must be at least 1, got {k}")
    integrand = lambda x: float(f.eval(x))  # noqa: E731
    coeffs = np.empty(k + 1)
    coeffs[0] = quad(integrand, 0.0, np.pi, epsabs=1e-13, epsrel=1e-12, limit=200)[0] / np.pi
    for m in range(1, k + 1):
        # QAWO rule handles the cos(m x) weight
        value = quad(integrand, 0.0, np.pi, weight="cos", wvar=m, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
        coeffs[m] = 2.0 * value / np.pi
    return coeffs


def fourier_truncate(f: CouplingFunction, k: int) -> CouplingFunction:
    """Smooth surrogate a_0 + Σ_{m<=k} a_m cos(m x) of an even coupling."""
    coeffs = fourier_coefficients(f, k)
    modes = np.arange(1, k + 1)

    def value_fn(x):
        x = np.asarray(x, dtype=float)
        return coeffs[0] + np.cos(np.multiply.outer(x, modes)) @ coeffs[1:]

    def deriv_fn(x):
        x = np.asarray(x, dtype=float)
        return -np.sin(np.multiply.outer(x, modes)) @ (modes * coeffs[1:])

    grid = np.linspace(0.0, TWO_PI, config.RATIO_GRID_POINTS + 1)
    error = float(np.max(np.abs(value_fn(grid) - f.eval(grid))))
    logger.debug(f"{f.name} truncated to {k} terms, max deviation {error:.3e}")
    return CouplingFunction(
        name=f"{f.name}-fourier:{k}",
        value_fn=value_fn,
        deriv_fn=deriv_fn,
        is_smooth_everywhere=True,
        coefficients=tuple(float(c) for c in coeffs),
        approximation_error=error,
    )


def validate_class_g(
    f: CouplingFunction,
    tol: float = config.CLASS_G_TOL,
    points: int = config.RATIO_GRID_POINTS,
) -> ClassGReport:
    """Check evenness, periodicity, g(0)=1, g(π)=-1, range and derivative continuity.

    Boundary values and range are checked against max(tol, approximation_error),
    so a truncated series is judged within its own declared error.
    """
    grid = np.linspace(0.0, TWO_PI, points + 1)
    values = f.eval(grid)
    even = bool(np.max(np.abs(values - f.eval(-grid))) <= tol)
    periodic = bool(np.max(np.abs(values - f.eval(grid + TWO_PI))) <= tol)

    bound = max(tol, f.approximation_error)
    at_zero = float(f.eval(0.0))
    at_pi = float(f.eval(np.pi))
    max_at_zero = abs(at_zero - 1.0) <= bound and bool(np.max(values) <= 1.0 + bound)
    min_at_pi = abs(at_pi + 1.0) <= bound and bool(np.min(values) >= -1.0 - bound)
    in_range = bool(np.all(np.abs(values) <= 1.0 + bound))

    # one-sided derivatives around every grid point
    h = 1e-7
    jumps = np.abs(f.deriv(grid + h) - f.deriv(grid - h))
    max_jump = float(np.max(jumps))
    differentiable = max_jump <= 1e-3

    notes = []
    if not differentiable:
        where = float(grid[int(np.argmax(jumps))])
        notes.append(f"derivative jumps by {max_jump:.4g} near x={where:.6g}")
    if f.approximation_error > tol:
        notes.append(f"boundary values judged within approximation error {f.approximation_error:.3g}")

    passed = even and periodic and max_at_zero and min_at_pi and in_range and differentiable
    return ClassGReport(
        name=f.name,
        even=even,
        periodic=periodic,
        max_at_zero=max_at_zero,
        min_at_pi=min_at_pi,
        in_range=in_range,
        differentiable=differentiable,
        passed=passed,
        value_at_zero=at_zero,
        value_at_pi=at_pi,
        max_derivative_jump=max_jump,
        boundary_tolerance=bound,
        notes=notes,
    )


def _pointwise_ratio(f: CouplingFunction, x: np.ndarray) -> np.ndarray:
    return (2.0 / np.pi) * x / (1.0 - f.eval(x))


def _limit_at_zero(f: CouplingFunction) -> float:
    """Limit of the ratio as x -> 0 from the growth order of 1 - g near 0."""
    d1 = 1.0 - float(f.eval(LIMIT_STEP))
    d2 = 1.0 - float(f.eval(2 * LIMIT_STEP))
    if d1 <= 0.0 or d2 <= 0.0:
        raise RatioDomainError(f"1 - g(x) is not positive near x=0 (x={LIMIT_STEP})")
    order = math.log2(d2 / d1)
    if order > 1.5:
        return math.inf  # ~ c x^2: ratio blows up
    if order > 0.5:
        return (2.0 / np.pi) * LIMIT_STEP / d1  # ~ c x: finite limit 2/(π c)
    return 0.0  # 1 - g(0) > 0: ratio tends to 0


def ratio_over_interval(
    f: CouplingFunction,
    lo: float,
    hi: float,
    points: int = config.RATIO_GRID_POINTS,
) -> float:
    """min over x in [lo, hi] of (2/π) x / (1 - g(x)): grid scan plus bounded refinement."""
    if not (0.0 <= lo <= hi <= np.pi + 1e-12):
        raise ValueError(f"need 0 <= lo <= hi <= π, got [{lo}, {hi}]")
    hi = min(hi, np.pi)
    lo = min(lo, hi)

    if hi - lo <= 0.0:
        if lo < ZERO_EXCLUSION:
            return _limit_at_zero(f)
        denom = 1.0 - float(f.eval(lo))
        if denom <= 0.0:
            raise RatioDomainError(f"1 - g(x) vanishes at x={lo}")
        return float((2.0 / np.pi) * lo / denom)

    candidates = []
    start = lo
    if lo < ZERO_EXCLUSION:
        candidates.append(_limit_at_zero(f))
        start = ZERO_EXCLUSION
        if hi <= start:
            denom = 1.0 - float(f.eval(hi))
            if denom > 0.0:
                candidates.append(float((2.0 / np.pi) * hi / denom))
            return min(candidates)

    grid = np.linspace(start, hi, points + 1)
    denom = 1.0 - f.eval(grid)
    bad = np.nonzero(denom <= 0.0)[0]
    if bad.size:
        raise RatioDomainError(f"1 - g(x) vanishes at x={grid[bad[0]]:.6g}")
    values = (2.0 / np.pi) * grid / denom
    idx = int(np.argmin(values))
    candidates.append(float(values[idx]))

    a = grid[max(idx - 1, 0)]
    b = grid[min(idx + 1, grid.shape[0] - 1)]
    if b > a:
        res = minimize_scalar(
            lambda x: float(_pointwise_ratio(f, np.asarray(x))),
            bounds=(a, b),
            method="bounded",
            options={"xatol": 1e-10},
        )
        if res.success:
            candidates.append(float(res.fun))
    return min(candidates)


def approximation_ratio(f: CouplingFunction) -> float:
    """Lower-bound ratio over the whole of (0, π]."""
    if 1.0 - float(f.eval(np.pi)) <= 0.0:
        raise RatioDomainError("g(π) must lie below 1")
    return ratio_over_interval(f, 0.0, np.pi)


def resolve_coupling(name: str) -> tuple[CouplingFunction, CouplingFunction]:
    """Map "cos" / "g2" / "g2-fourier:K" to (dynamics coupling, exact coupling)."""
    name = name.strip()
    if name == "cos":
        g = cosine()
        return g, g
    if name == "g2":
        g = quadratic_g2()
        return g, g
    if name.startswith("g2-fourier:"):
        try:
            k = int(name.split(":", 1)[1])
        except ValueError:
            raise CouplingNameError(f"bad term count in {name!r}") from None
        if k < 1:
            raise CouplingNameError(f"term count must be at least 1 in {name!r}")
        exact = quadratic_g2()
        return fourier_truncate(exact, k), exact
    raise CouplingNameError(f"unknown coupling {name!r}; use cos, g2 or g2-fourier:K")
