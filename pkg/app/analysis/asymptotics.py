"""
Asymptotics of the cohort counts.

Cohort counts grow like c * gamma^n * n^(-3/2).  Two estimators are offered:

* ratio extrapolation over a window of exact counts, for gamma and then c;
* the radius of convergence as the root of the partial derivative of the
  functional equation in its series argument, evaluated on truncated series.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import mpmath
import numpy as np

from ..cohorts.counting import atomic_form_series, cohort_count_series
from ..series import evaluate, w_tail
from ..utils.logging import get_logger

logger = get_logger(__name__)

MIN_GROWTH_DEGREE = 100
DEFAULT_WINDOW = 60
DEFAULT_BRACKET = (0.3, 0.5)
# the atom series has long diverged here, so the derivative is positive
DIVERGED = 10


class EstimationError(ValueError):
    """Raised when an estimate cannot be formed from the data available."""


@dataclass(frozen=True)
class GrowthEstimate:
    gamma: float
    c: float
    degree: int
    window: Tuple[int, int]

    def to_json(self) -> dict:
        return {"gamma": self.gamma, "c": self.c, "degree": self.degree, "window": list(self.window)}


@dataclass(frozen=True)
class RadiusEstimate:
    rho: float
    inverse: float
    degree: int
    second_derivative: float

    def to_json(self) -> dict:
        return {
            "rho": self.rho,
            "inverse": self.inverse,
            "degree": self.degree,
            "second_derivative": self.second_derivative,
        }


def growth_rate_estimate(degree: int, window: int = DEFAULT_WINDOW) -> GrowthEstimate:
    """Estimate gamma and c from exact cohort counts of sizes up to ``degree``."""
    if degree < MIN_GROWTH_DEGREE:
        raise EstimationError(f"growth estimates need counts up to at least size {MIN_GROWTH_DEGREE}")
    series = cohort_count_series(degree + 1)
    counts = [series[n + 1] for n in range(degree + 1)]
    logs = [math.log(c) for c in counts]

    lo = max(10, degree - window)
    ns = np.arange(lo, degree, dtype=float)
    ratios = np.array([
        math.exp(logs[n + 1] - logs[n]) * ((n + 1) / n) ** 1.5 for n in range(lo, degree)
    ])
    # ratios behave like gamma (1 + b/n^2 + d/n^3)
    basis = np.column_stack([np.ones_like(ns), ns ** -2, ns ** -3])
    coefficients, *_ = np.linalg.lstsq(basis, ratios, rcond=None)
    gamma = float(coefficients[0])

    ms = np.arange(lo, degree + 1, dtype=float)
    scaled = np.array([logs[n] + 1.5 * math.log(n) - n * math.log(gamma) for n in range(lo, degree + 1)])
    basis = np.column_stack([np.ones_like(ms), ms ** -1, ms ** -2])
    coefficients, *_ = np.linalg.lstsq(basis, scaled, rcond=None)
    c = float(math.exp(coefficients[0]))

    logger.info(f"Growth estimate from sizes {lo}..{degree}: gamma={gamma:.6f}, c={c:.4f}")
    return GrowthEstimate(gamma=gamma, c=c, degree=degree, window=(lo, degree))


class _Equation:
    """The functional equation of the cohort series, truncated at one degree."""

    def __init__(self, degree: int):
        a, b = atomic_form_series(degree)
        u = b.shift()
        self.a = [mpmath.mpf(x) for x in a.coeffs]
        self.tail_a = w_tail(a)
        self.tail_u = w_tail(u)

    def _terms(self, t):
        y = evaluate(self.a, t)
        if y > DIVERGED:
            return None
        e1 = mpmath.exp(evaluate(self.tail_a, t))
        e2 = mpmath.exp(evaluate(self.tail_u, t))
        at_square = evaluate(self.a, t * t)
        grown = mpmath.exp(y) * e1
        m3 = grown - 1 - y - (y * y + at_square) / 2
        m3_prime = grown - 1 - y
        m3_second = grown - 1
        return y, e2, m3, m3_prime, m3_second

    def f_y(self, t):
        terms = self._terms(t)
        if terms is None:
            return mpmath.mpf(1)
        _, e2, m3, m3_prime, _ = terms
        return -1 + t + t * m3_prime * e2 * mpmath.exp(t * t * m3)

    def f_yy(self, t):
        terms = self._terms(t)
        if terms is None:
            return mpmath.inf
        _, e2, m3, m3_prime, m3_second = terms
        return t * e2 * mpmath.exp(t * t * m3) * (m3_second + m3_prime * t * t * m3_prime)


def radius_estimate(
    degree: int, bracket: Tuple[float, float] = DEFAULT_BRACKET, dps: int = 30
) -> RadiusEstimate:
    """Radius of convergence of the cohort series from its truncation at ``degree``."""
    if degree < 10:
        raise EstimationError("radius estimates need the series to degree 10 or more")
    with mpmath.workdps(dps):
        equation = _Equation(degree)
        lo, hi = (mpmath.mpf(x) for x in bracket)
        f_lo, f_hi = equation.f_y(lo), equation.f_y(hi)
        logger.debug(f"F_y on the bracket: {mpmath.nstr(f_lo, 8)} at {bracket[0]}, {mpmath.nstr(f_hi, 8)} at {bracket[1]}")
        if f_lo * f_hi >= 0:
            raise EstimationError(f"no sign change of the derivative on [{bracket[0]}, {bracket[1]}]")
        rho = mpmath.findroot(equation.f_y, (lo, hi), solver="bisect", verify=False, maxsteps=200)
        second = equation.f_yy(rho)
        sign = "positive" if second > 0 else "negative" if second < 0 else "zero"
        logger.debug(f"F_yy at rho is {sign} ({mpmath.nstr(second, 8)})")
    logger.info(f"Radius at degree {degree}: rho={float(rho):.6f}, 1/rho={float(1 / rho):.6f}")
    return RadiusEstimate(
        rho=float(rho),
        inverse=float(1 / rho),
        degree=degree,
        second_derivative=float(second),
    )


def estimate_table(degrees, bracket: Optional[Tuple[float, float]] = None):
    """Radius estimates at several truncation degrees."""
    return [radius_estimate(d, bracket or DEFAULT_BRACKET) for d in degrees]
