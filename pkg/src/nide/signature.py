"""Sorted-coefficient noise signatures and their confidence bands.

The empirical signature of a sample vector at height ``z`` is the fraction of
entries with absolute value at most ``z``.  Averaged over N independent
Gaussian draws its mean is ``F(z)`` and its variance ``F(z)(1 - F(z)) / N``,
so the sorted-absolute-value curve of pure noise lives in a narrow band
around ``F``.  This module builds that band (white case), the widened band
for correlated Gaussian noise, and the analytic mean/variance curves for
signal-plus-noise coefficients.

Variance under correlated noise is handled with an upper bound obtained by
rotating each coefficient pair ``(V_i, V_j)`` into independent components
with variances ``sigma^2 (1 +/- rho_ij)``; see
:func:`colored_variance_bound`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gaussian_stats import abs_noise_cdf, erf_std, shifted_abs_cdf

__all__ = [
    "ConfidenceBand",
    "CorrelationProfile",
    "empirical_signature",
    "sorted_curve",
    "white_band",
    "colored_band",
    "colored_variance_bound",
    "colored_noisy_covariance_bound",
    "expected_noisy_curve",
    "lambda_to_confidence",
    "confidence_to_lambda",
]

_SQRT2 = np.sqrt(2.0)

# Correlations with magnitude below this contribute a pair covariance that is
# O(rho^2) and utterly negligible next to F(1-F)/N; skipping them keeps the
# lag sum O(N) and keeps the white case exact.
RHO_TRUNCATION = 1e-6


@dataclass(frozen=True)
class CorrelationProfile:
    """Normalized autocorrelation sequence ``rho[k] = R(k) / R(0)``.

    ``rho[0]`` must be 1 and every entry must lie in [-1, 1].
    """

    rho: np.ndarray

    def __post_init__(self):
        rho = np.atleast_1d(np.asarray(self.rho, dtype=float))
        if rho.ndim != 1 or rho.size == 0:
            raise ValueError("rho must be a nonempty 1-D sequence")
        if abs(rho[0] - 1.0) > 1e-12:
            raise ValueError(f"rho[0] must be 1, got {rho[0]}")
        if np.any(np.abs(rho) > 1.0 + 1e-12):
            raise ValueError("autocorrelation values must lie in [-1, 1]")
        object.__setattr__(self, "rho", np.clip(rho, -1.0, 1.0))

    @property
    def max_lag(self) -> int:
        return self.rho.size - 1

    def is_white(self) -> bool:
        return self.rho.size == 1 or bool(
            np.all(np.abs(self.rho[1:]) < RHO_TRUNCATION)
        )


@dataclass(frozen=True)
class ConfidenceBand:
    """Pointwise band ``[lower, upper]`` around the noise curve ``center = F``.

    ``lower``/``upper`` are clamped to [0, 1]; ``center`` is the unclamped
    ``F(z)``.  ``lam`` is the half-width multiplier and ``confidence`` the
    per-point normal coverage it corresponds to.
    """

    z_grid: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    center: np.ndarray
    lam: float
    n: int
    confidence: float = field(default=float("nan"))

    def __post_init__(self):
        for name in ("z_grid", "lower", "upper", "center"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        if not (self.z_grid.shape == self.lower.shape == self.upper.shape == self.center.shape):
            raise ValueError("z_grid, lower, center, upper must have equal shapes")

    def contains(self, values) -> np.ndarray:
        """Elementwise test of ``lower <= values <= upper``."""
        values = np.asarray(values, dtype=float)
        return (values >= self.lower) & (values <= self.upper)

    def to_csv(self, path) -> None:
        """Write the band trace as CSV with columns z, lower, center, upper."""
        with open(path, "w") as fh:
            fh.write("z,lower,center,upper\n")
            for z, lo, c, up in zip(self.z_grid, self.lower, self.center, self.upper):
                fh.write(f"{z:.6g},{lo:.6g},{c:.6g},{up:.6g}\n")


def empirical_signature(z, samples):
    """Fraction of ``samples`` with ``|sample| <= z``.

    ``z`` may be a scalar or an array of evaluation points.  Ties count as
    inside (the comparison is ``<=``).
    """
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise ValueError("samples must be nonempty")
    a = np.sort(np.abs(samples.ravel()))
    out = np.searchsorted(a, z, side="right") / a.size
    return float(out) if np.isscalar(z) else out


def sorted_curve(samples):
    """Step-function representation of the empirical signature.

    Returns ``(z_values, g_values)`` where ``z_values`` is the ascending
    sequence of absolute sample values and ``g_values[m-1] = m / N``.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.size == 0:
        raise ValueError("samples must be nonempty")
    z = np.sort(np.abs(samples.ravel()))
    g = np.arange(1, z.size + 1, dtype=float) / z.size
    return z, g


def lambda_to_confidence(lam: float) -> float:
    """Per-point coverage of a ``lam``-standard-deviation normal interval."""
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    return float(erf_std(lam / _SQRT2))


def confidence_to_lambda(p: float, hi: float = 12.0) -> float:
    """Inverse of :func:`lambda_to_confidence` by bisection on [0, hi].

    For p extremely close to 1 the answer is limited by the double-precision
    spacing of probabilities near 1 (about 5e-9 in lambda at lam = 6).
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly inside (0, 1), got {p}")
    lo_edge, hi_edge = 0.0, float(hi)
    for _ in range(200):
        mid = 0.5 * (lo_edge + hi_edge)
        if lambda_to_confidence(mid) < p:
            lo_edge = mid
        else:
            hi_edge = mid
    return 0.5 * (lo_edge + hi_edge)


def _validate_grid(z_grid) -> np.ndarray:
    z = np.atleast_1d(np.asarray(z_grid, dtype=float))
    if np.any(z < 0):
        raise ValueError("z_grid must be nonnegative")
    if np.any(np.diff(z) < 0):
        raise ValueError("z_grid must be ascending")
    return z


def white_band(z_grid, sigma: float, n: int, lam: float) -> ConfidenceBand:
    """Band around ``F(z)`` for N independent noise coefficients.

    Center ``F(z)``, half-width ``lam * sqrt(F (1 - F) / n)``, clamped to
    [0, 1].
    """
    z = _validate_grid(z_grid)
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    center = abs_noise_cdf(z, sigma)
    half = lam * np.sqrt(center * (1.0 - center) / n)
    return ConfidenceBand(
        z_grid=z,
        lower=np.maximum(center - half, 0.0),
        upper=np.minimum(center + half, 1.0),
        center=center,
        lam=float(lam),
        n=int(n),
        confidence=lambda_to_confidence(lam),
    )


def colored_variance_bound(z, sigma: float, profile: CorrelationProfile, n: int):
    """Upper bound on the variance of the sorted-curve value at height ``z``
    for correlated Gaussian noise.

    The bound is ``F(1-F)/n`` plus, for every ordered pair at lag k (lag k
    occurs ``2 (n - k)`` times),

        ``F(sqrt(2) z / sqrt(1 + rho_k)) F(sqrt(2) z / sqrt(1 - rho_k)) - F(z)^2``

    which dominates the pair covariance because the rotated components
    ``(V_i +/- V_j)/sqrt(2)`` are independent with variances
    ``sigma^2 (1 +/- rho_k)``.  Lags with ``|rho_k| < RHO_TRUNCATION`` are
    treated as independent, and ``rho_k = +/-1`` takes the continuity limit
    ``F(sqrt(2) z / 0+) = 1``.
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    scalar = np.isscalar(z)
    z = np.atleast_1d(np.asarray(z, dtype=float))
    F = abs_noise_cdf(z, sigma)
    var = F * (1.0 - F) / n
    rho = profile.rho
    for k in range(1, min(rho.size, n)):
        r = rho[k]
        if abs(r) < RHO_TRUNCATION:
            continue
        if 1.0 + r > 0:
            t_plus = abs_noise_cdf(_SQRT2 * z / np.sqrt(1.0 + r), sigma)
        else:
            t_plus = np.ones_like(z)
        if 1.0 - r > 0:
            t_minus = abs_noise_cdf(_SQRT2 * z / np.sqrt(1.0 - r), sigma)
        else:
            t_minus = np.ones_like(z)
        var = var + (2.0 * (n - k) / n**2) * (t_plus * t_minus - F * F)
    return float(var[0]) if scalar else var


def colored_band(
    z_grid, sigma: float, profile: CorrelationProfile, n: int, lam: float
) -> ConfidenceBand:
    """Band around ``F(z)`` using :func:`colored_variance_bound` for the width.

    Reduces exactly to :func:`white_band` for a white profile.
    """
    z = _validate_grid(z_grid)
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    center = abs_noise_cdf(z, sigma)
    var = colored_variance_bound(z, sigma, profile, n)
    half = lam * np.sqrt(np.maximum(var, 0.0))
    return ConfidenceBand(
        z_grid=z,
        lower=np.maximum(center - half, 0.0),
        upper=np.minimum(center + half, 1.0),
        center=center,
        lam=float(lam),
        n=int(n),
        confidence=lambda_to_confidence(lam),
    )


def colored_noisy_covariance_bound(
    z: float, theta_i: float, theta_j: float, rho_ij: float, sigma: float
) -> float:
    """Upper bound on ``cov(g(z, Theta_i), g(z, Theta_j))`` for a correlated
    coefficient pair with noise-free values ``theta_i``, ``theta_j``.

    Built from the same pair rotation as :func:`colored_variance_bound`, with
    the shifted CDF ``H`` in place of ``F``:

        ``H(sqrt(2) z / sqrt(1 + rho), (t_i + t_j) / sqrt(2 (1 + rho)))
          * H(sqrt(2) z / sqrt(1 - rho), (t_i - t_j) / sqrt(2 (1 - rho)))
          - H(z, t_i) H(z, t_j)``
    """
    if not abs(rho_ij) < 1.0:
        raise ValueError(f"|rho_ij| must be strictly below 1, got {rho_ij}")
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    joint = shifted_abs_cdf(
        _SQRT2 * z / np.sqrt(1.0 + rho_ij),
        (theta_i + theta_j) / np.sqrt(2.0 * (1.0 + rho_ij)),
        sigma,
    ) * shifted_abs_cdf(
        _SQRT2 * z / np.sqrt(1.0 - rho_ij),
        (theta_i - theta_j) / np.sqrt(2.0 * (1.0 - rho_ij)),
        sigma,
    )
    product = shifted_abs_cdf(z, theta_i, sigma) * shifted_abs_cdf(z, theta_j, sigma)
    return float(joint - product)


def expected_noisy_curve(z_grid, theta_bars, sigma: float):
    """Analytic mean and variance of the sorted curve of noisy coefficients.

    For coefficients ``Theta_i = theta_bar_i + V_i`` with independent noise,

        ``mean(z) = (1/N) sum_i H(z, theta_bar_i)``
        ``var(z)  = (1/N^2) sum_i H(z, theta_bar_i) (1 - H(z, theta_bar_i))``

    Returns ``(mean_curve, variance_curve)`` over ``z_grid``.
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    z = np.atleast_1d(np.asarray(z_grid, dtype=float))
    theta = np.atleast_1d(np.asarray(theta_bars, dtype=float))
    if theta.size == 0:
        raise ValueError("theta_bars must be nonempty")
    mean = np.zeros_like(z)
    var = np.zeros_like(z)
    # Chunk the (z x theta) evaluation to keep peak memory modest.
    for start in range(0, theta.size, 512):
        block = theta[start : start + 512]
        H = shifted_abs_cdf(z[:, None], block[None, :], sigma)
        mean += H.sum(axis=1)
        var += (H * (1.0 - H)).sum(axis=1)
    n = theta.size
    return mean / n, var / n**2
