"""Closed-form analytic kernel: Li, smooth sum asymptotics, named bounds.

Everything here is a pure function of its arguments.  Li is evaluated
through the exponential integral of log x rather than by quadrature,
because the scans call it millions of times; the quadrature route
survives as an independent oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

EULER_GAMMA = 0.5772156649015328606065

# Branch switch for Ei(t).  The power series and the asymptotic series
# both deliver <= 1e-13 relative error in a band around this point; the
# seam agreement is pinned by a test.
_EI_SWITCH = 40.0
_SERIES_MAX_TERMS = 160


def _ei_series(t: np.ndarray) -> np.ndarray:
    """Ei(t) = gamma + log t + sum t^k / (k * k!)   (0 < t <= ~45)."""
    term = np.ones_like(t)
    total = np.zeros_like(t)
    for k in range(1, _SERIES_MAX_TERMS + 1):
        term = term * t / k
        total += term / k
        if k % 8 == 0 and float(np.max(term)) < 1e-17 * float(np.min(total)):
            break
    return EULER_GAMMA + np.log(t) + total


def _ei_asymptotic(t: np.ndarray) -> np.ndarray:
    """Ei(t) ~ (e^t / t) * sum k! / t^k, truncated before divergence."""
    term = np.ones_like(t)
    total = np.ones_like(t)
    # Terms shrink while k < t; with t > 40 stopping at k = 40 leaves a
    # tail below 1e-16 relative.
    for k in range(1, 41):
        term = term * k / t
        total += term
    return np.exp(t) / t * total


def _ei(t: np.ndarray) -> np.ndarray:
    out = np.empty_like(t)
    small = t <= _EI_SWITCH
    if np.any(small):
        out[small] = _ei_series(t[small])
    if np.any(~small):
        out[~small] = _ei_asymptotic(t[~small])
    return out


_LI_OFFSET = float(_ei_series(np.array([math.log(2.0)]))[0])


def li(x):
    """Logarithmic integral from 2 to x of dt/log t.

    Accepts a scalar or an ndarray; x must be >= 2 everywhere.
    Relative error <= 1e-12 over the sieveable range.
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr < 2.0):
        raise DomainError("li(x) requires x >= 2")
    result = _ei(np.log(arr)) - _LI_OFFSET
    if np.isscalar(x) or arr.ndim == 0:
        return float(result)
    return result


def smooth_s1(x: float) -> float:
    """Smooth asymptotic of the squared-log prime sum: x log x - x - 2 log 2 + 2."""
    return x * math.log(x) - x - 2.0 * math.log(2.0) + 2.0


def smooth_s2(x: float) -> float:
    """Smooth asymptotic of the pair sum: x log x - (2 + log 2) x + 4."""
    return x * math.log(x) - (2.0 + math.log(2.0)) * x + 4.0


DUSART_LOWER_COEFF = 1.8
DUSART_UPPER_COEFF = 2.51
DUSART_LOWER_MIN_X = 32299
DUSART_UPPER_MIN_X = 355991


def dusart_bounds(x):
    """Two-sided pi(x) bounds x/log x + x/log^2 x + C x/log^3 x, C in {1.8, 2.51}.

    The lower bound is valid for x >= 32299, the upper for x >= 355991.
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(arr <= 1.0):
        raise DomainError("dusart_bounds requires x > 1")
    lg = np.log(arr)
    base = arr / lg + arr / lg**2
    lower = base + DUSART_LOWER_COEFF * arr / lg**3
    upper = base + DUSART_UPPER_COEFF * arr / lg**3
    if np.isscalar(x) or arr.ndim == 0:
        return float(lower), float(upper)
    return lower, upper


def monotonicity_threshold(c: float, big_b: float) -> float:
    """Point beyond which the gap-deficit sum rises even at the worst b = -B.

    exp(1/(2c) + sqrt(1/(4c^2) + B)).
    """
    if c <= 0:
        raise DomainError("monotonicity_threshold requires c > 0")
    if big_b < 0:
        raise DomainError("monotonicity_threshold requires B >= 0")
    return math.exp(1.0 / (2.0 * c) + math.sqrt(1.0 / (4.0 * c * c) + big_b))


def bprime_threshold(p, c: float):
    """Lower bound the discrete derivative of b must exceed at a prime p:
    -(log^2 p / p) * (1 - 1/(c log p)).
    """
    if c <= 0:
        raise DomainError("bprime_threshold requires c > 0")
    arr = np.asarray(p, dtype=np.float64)
    if np.any(arr <= 1.0):
        raise DomainError("bprime_threshold requires p > 1")
    lg = np.log(arr)
    result = -(lg * lg / arr) * (1.0 - 1.0 / (c * lg))
    if np.isscalar(p) or arr.ndim == 0:
        return float(result)
    return result


def kprime_threshold(p, c: float):
    """Lower bound the discrete derivative of k must exceed at a prime p:
    -(1 / (sqrt(p) log^2 p)) * (1 - 1/(c log p)).
    """
    if c <= 0:
        raise DomainError("kprime_threshold requires c > 0")
    arr = np.asarray(p, dtype=np.float64)
    if np.any(arr <= 1.0):
        raise DomainError("kprime_threshold requires p > 1")
    lg = np.log(arr)
    result = -(1.0 / (np.sqrt(arr) * lg * lg)) * (1.0 - 1.0 / (c * lg))
    if np.isscalar(p) or arr.ndim == 0:
        return float(result)
    return result


# exp(t) overflows IEEE doubles just above t = 709.78.
_EXP_OVERFLOW = 709.0


def skewes_log10(alpha: float) -> float:
    """log10 of the triple-exponential crossover estimate e^(e^(e^alpha)).

    Returned as a base-10 logarithm (= e^(e^alpha) / log 10) since the
    estimate itself overflows any float for interesting alpha.
    """
    inner = math.exp(alpha)
    if inner > _EXP_OVERFLOW:
        raise OverflowError(
            f"alpha = {alpha} makes e^(e^alpha) overflow a double"
        )
    return math.exp(inner) / math.log(10.0)


def skewes_mean_kprime(sk1: float) -> float:
    """Average slope of k over (2, Sk1) implied by the sign change: 1/(8 pi Sk1)."""
    if sk1 <= 0:
        raise DomainError("skewes_mean_kprime requires sk1 > 0")
    return 1.0 / (8.0 * math.pi * sk1)


@dataclass(frozen=True)
class Constants:
    """Named constants used by the scans.

    c        gap-bound constant (conjectured >= 1)
    B        bound on the normalized expansion remainder b(x)
    K_rh     fluctuation-ratio bound under RH, 1/(8 pi), valid x > 2657
    K_all    enlarged ratio bound that holds from small x onward
    granville_c  2 e^(-gamma), the proposed sharp gap constant
    """

    c: float = 1.0
    B: float = 5.0
    K_rh: float = 1.0 / (8.0 * math.pi)
    K_all: float = 1.0 / 3.0
    granville_c: float = 1.122918

    def __post_init__(self):
        if self.B <= 0:
            raise DomainError("Constants.B must be positive")
        if not 0 < self.K_rh < self.K_all:
            raise DomainError("Constants require 0 < K_rh < K_all")
        if self.c <= 0:
            raise DomainError("Constants.c must be positive")


DEFAULT_CONSTANTS = Constants()
