"""Triple-logarithm model of the scaled fluctuation k(x).

Empirically k(x) drifts like -A * (alpha - log log log x); extrapolating
the fitted zero crossing gives a crossover estimate e^(e^(e^alpha)),
reported as a base-10 logarithm.  The model is linear in (A*alpha, A)
after substituting u = log log log x, so it is solved in closed form by
2x2 normal equations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import skewes_log10
from .errors import DomainError, InsufficientDataError, SingularFitError
from .fluct import DEFAULT_EXPANSION_C3, FluctuationSample, fluctuation_at
from .sieve import PrimeData

# Model abscissae must keep log log log x real and usefully spread.
MIN_FIT_X = math.exp(math.e)


def sample_fluctuations(
    data: PrimeData,
    x_min: int,
    x_max: int,
    *,
    stride: int = 1000,
    per_decade: int | None = None,
    c3: float = DEFAULT_EXPANSION_C3,
) -> list[FluctuationSample]:
    """Fluctuation samples at every stride-th prime in [x_min, x_max].

    ``per_decade`` applies a further deterministic thinning so that no
    decade of x contributes more than that many samples; without it the
    top decade dominates any fit input by sheer prime density.
    """
    if x_min < 2 or x_max <= x_min:
        raise DomainError("need 2 <= x_min < x_max")
    lo = int(np.searchsorted(data.primes, x_min, side="left"))
    hi = int(np.searchsorted(data.primes, x_max, side="right"))
    idx = np.arange(lo, hi, stride)
    if per_decade is not None:
        keep = []
        decades = np.floor(np.log10(data.primes[idx].astype(np.float64)))
        for d in np.unique(decades):
            sel = np.nonzero(decades == d)[0]
            step = max(1, int(math.ceil(len(sel) / per_decade)))
            keep.extend(sel[::step])
        idx = idx[np.sort(np.array(keep, dtype=np.int64))]
    return [fluctuation_at(data, int(data.primes[i]), c3=c3) for i in idx]


def bin_average_k(samples, bin_count: int) -> list[tuple[float, float]]:
    """Equal-width bins in log x; per-bin arithmetic mean of k.

    Returns (log-x bin midpoint, mean k) pairs with empty bins dropped.
    A single bin degenerates to the overall mean.
    """
    if bin_count < 1:
        raise DomainError(f"bin_count must be >= 1, got {bin_count}")
    samples = list(samples)
    if not samples:
        raise InsufficientDataError("no samples to bin")
    xs = np.array([s.x for s in samples], dtype=np.float64)
    if np.any(np.diff(xs) < 0):
        raise DomainError("samples must be ascending in x")
    if xs[0] < 16:
        raise DomainError("binning requires x >= 16 throughout")
    ks = np.array([s.k for s in samples], dtype=np.float64)
    w = np.log(xs)
    lo, hi = float(w[0]), float(w[-1])
    if hi == lo:
        return [(lo, float(np.mean(ks)))]
    edges = np.linspace(lo, hi, bin_count + 1)
    which = np.clip(np.digitize(w, edges) - 1, 0, bin_count - 1)
    out = []
    for i in range(bin_count):
        mask = which == i
        if np.any(mask):
            mid = 0.5 * (edges[i] + edges[i + 1])
            out.append((float(mid), float(np.mean(ks[mask]))))
    if not out:
        raise InsufficientDataError("all bins empty")
    return out


@dataclass(frozen=True)
class FitResult:
    """Fitted k = -A (alpha - log log log x) and the implied crossover."""

    A: float
    alpha: float
    log10_sk1: float
    rms_residual: float
    bin_count: int
    x_range: tuple
    alpha_drop_last_delta: float | None = None

    def to_json(self) -> dict:
        return {
            "A": self.A,
            "alpha": self.alpha,
            "log10_sk1": self.log10_sk1,
            "rms_residual": self.rms_residual,
            "bin_count": self.bin_count,
            "x_range": list(self.x_range),
            "alpha_drop_last_delta": self.alpha_drop_last_delta,
        }


def _solve(us: np.ndarray, ks: np.ndarray) -> tuple[float, float, float]:
    """Closed-form least squares for k = beta0 + beta1 * u."""
    n = float(len(us))
    su = float(np.sum(us))
    suu = float(np.sum(us * us))
    sk = float(np.sum(ks))
    suk = float(np.sum(us * ks))
    det = n * suu - su * su
    if abs(det) < 1e-14 * max(1.0, suu * n):
        raise SingularFitError("all abscissae equal; the 2x2 system is singular")
    beta1 = (n * suk - su * sk) / det
    beta0 = (sk - beta1 * su) / n
    rms = float(np.sqrt(np.mean((ks - (beta0 + beta1 * us)) ** 2)))
    return beta0, beta1, rms


def fit_skewes(binned) -> FitResult:
    """Fit the drift model to binned (log-x midpoint, mean k) points."""
    binned = list(binned)
    if len(binned) < 3:
        raise InsufficientDataError(
            f"fit needs >= 3 binned points, got {len(binned)}"
        )
    w = np.array([b[0] for b in binned], dtype=np.float64)
    ks = np.array([b[1] for b in binned], dtype=np.float64)
    if np.any(w <= 1.0):
        raise DomainError("binned abscissae must satisfy x > e^e")
    us = np.log(np.log(w))
    beta0, beta1, rms = _solve(us, ks)
    big_a = beta1
    if big_a == 0:
        raise SingularFitError("zero slope; alpha is undefined")
    alpha = -beta0 / beta1
    delta = None
    if len(binned) >= 4:
        b0d, b1d, _ = _solve(us[:-1], ks[:-1])
        if b1d != 0:
            delta = alpha - (-b0d / b1d)
    return FitResult(
        A=big_a,
        alpha=alpha,
        log10_sk1=skewes_log10(alpha),
        rms_residual=rms,
        bin_count=len(binned),
        x_range=(float(math.exp(w[0])), float(math.exp(w[-1]))),
        alpha_drop_last_delta=delta,
    )


def fit_from_data(
    data: PrimeData,
    x_min: int,
    x_max: int,
    *,
    stride: int = 1000,
    per_decade: int | None = 200,
    bin_count: int = 20,
) -> FitResult:
    """Sample, bin, and fit in one step."""
    if x_min < MIN_FIT_X:
        raise DomainError(f"fit range must start above {MIN_FIT_X:.2f}")
    samples = sample_fluctuations(
        data, x_min, x_max, stride=stride, per_decade=per_decade
    )
    if len(samples) < 3:
        raise InsufficientDataError(
            f"only {len(samples)} samples in [{x_min}, {x_max}]"
        )
    return fit_skewes(bin_average_k(samples, bin_count))
