"""Gaussian noise generation (white and colored), SNR calibration, and the
robust median-based noise-scale estimator.

Colored noise comes in two flavours: a first-order autoregressive process
(``ar1``) and a finite moving average (``ma``).  Generators always rescale so
the stationary marginal variance equals ``sigma**2``, which keeps the
signature band center comparable across noise kinds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.signal import lfilter

from .signature import CorrelationProfile

__all__ = [
    "NoiseSpec",
    "gen_noise",
    "theoretical_profile",
    "calibrate_noise_to_snr",
    "estimate_sigma_mad",
    "estimate_profile",
]

# Gaussian consistency constant: median(|N(0,1)|) = 0.6745 (to 4 digits).
MAD_SCALE = 0.6745


@dataclass(frozen=True)
class NoiseSpec:
    """Noise description: kind plus marginal standard deviation.

    ``kind`` is one of ``white``, ``ar1`` (with coefficient ``ar_coeff`` in
    (-1, 1)) or ``ma`` (with tap vector ``ma_taps``).
    """

    kind: str
    sigma: float = 1.0
    ar_coeff: float | None = None
    ma_taps: np.ndarray | None = field(default=None)

    def __post_init__(self):
        if self.kind not in ("white", "ar1", "ma"):
            raise ValueError(f"unknown noise kind {self.kind!r}")
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.kind == "ar1":
            if self.ar_coeff is None or not abs(self.ar_coeff) < 1:
                raise ValueError("ar1 coefficient must satisfy |a| < 1")
        if self.kind == "ma":
            taps = np.atleast_1d(np.asarray(self.ma_taps, dtype=float))
            if taps.size == 0 or not np.any(taps):
                raise ValueError("ma taps must be a nonempty, nonzero vector")
            object.__setattr__(self, "ma_taps", taps)

    @classmethod
    def white(cls, sigma: float = 1.0) -> "NoiseSpec":
        return cls(kind="white", sigma=sigma)

    @classmethod
    def ar1(cls, a: float, sigma: float = 1.0) -> "NoiseSpec":
        return cls(kind="ar1", sigma=sigma, ar_coeff=a)

    @classmethod
    def ma(cls, taps, sigma: float = 1.0) -> "NoiseSpec":
        return cls(kind="ma", sigma=sigma, ma_taps=taps)

    @classmethod
    def parse(cls, text: str, sigma: float = 1.0) -> "NoiseSpec":
        """Parse a CLI noise string: ``white``, ``ar1:<a>`` or ``ma:<t1,t2,...>``."""
        text = text.strip()
        if text == "white":
            return cls.white(sigma)
        if text.startswith("ar1:"):
            return cls.ar1(float(text[4:]), sigma)
        if text.startswith("ma:"):
            taps = [float(t) for t in text[3:].split(",") if t]
            return cls.ma(taps, sigma)
        raise ValueError(f"cannot parse noise spec {text!r}")

    def describe(self) -> str:
        """Inverse of :meth:`parse` (sigma not included)."""
        if self.kind == "white":
            return "white"
        if self.kind == "ar1":
            return f"ar1:{self.ar_coeff:g}"
        taps = ",".join(f"{t:g}" for t in self.ma_taps)
        return f"ma:{taps}"


def gen_noise(spec: NoiseSpec, n: int, seed: int) -> np.ndarray:
    """Zero-mean Gaussian sequence of length ``n`` with marginal std ``spec.sigma``.

    Deterministic for a fixed ``(spec, n, seed)``.  AR output is started from
    its stationary distribution, so the marginal variance is exact at every
    index.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    if spec.kind == "white":
        return rng.normal(0.0, spec.sigma, n)
    if spec.kind == "ar1":
        a = spec.ar_coeff
        innovation_std = spec.sigma * np.sqrt(1.0 - a * a)
        e = rng.normal(0.0, innovation_std, n)
        x_prev = rng.normal(0.0, spec.sigma)
        out, _ = lfilter([1.0], [1.0, -a], e, zi=[a * x_prev])
        return out
    # ma: y[t] = sum_k taps[k] e[t-k], innovations scaled for marginal sigma
    taps = spec.ma_taps
    innovation_std = spec.sigma / np.sqrt(np.sum(taps**2))
    e = rng.normal(0.0, innovation_std, n + taps.size - 1)
    return np.convolve(e, taps, mode="valid")


def theoretical_profile(spec: NoiseSpec, max_lag: int) -> CorrelationProfile:
    """Exact normalized autocorrelation of ``spec`` up to ``max_lag``."""
    if max_lag < 0:
        raise ValueError("max_lag must be nonnegative")
    lags = np.arange(max_lag + 1)
    if spec.kind == "white":
        rho = np.zeros(max_lag + 1)
        rho[0] = 1.0
    elif spec.kind == "ar1":
        rho = spec.ar_coeff ** lags.astype(float)
    else:
        taps = spec.ma_taps
        rho = np.zeros(max_lag + 1)
        r0 = np.sum(taps**2)
        for k in range(min(max_lag, taps.size - 1) + 1):
            rho[k] = np.sum(taps[: taps.size - k] * taps[k:]) / r0
    return CorrelationProfile(rho=rho)


def calibrate_noise_to_snr(signal, noise, snr_db: float) -> np.ndarray:
    """Scale ``noise`` so ``10 log10(|signal|^2 / |scaled|^2) = snr_db``."""
    signal = np.asarray(signal, dtype=float)
    noise = np.asarray(noise, dtype=float)
    signal_energy = np.sum(signal**2)
    noise_norm = np.linalg.norm(noise)
    if signal_energy == 0:
        raise ValueError("signal has zero energy, SNR undefined")
    if noise_norm == 0:
        raise ValueError("noise vector has zero energy")
    scale = np.sqrt(signal_energy) * 10.0 ** (-snr_db / 20.0) / noise_norm
    return noise * scale


def estimate_sigma_mad(finest_detail) -> float:
    """Robust noise-scale estimate: ``median(|coeffs|) / 0.6745``.

    ``finest_detail`` should be the finest-scale detail band, which is noise
    dominated for signals with sparse fine-scale structure.
    """
    band = np.asarray(finest_detail, dtype=float)
    if band.size == 0:
        raise ValueError("finest detail band must be nonempty")
    return float(np.median(np.abs(band)) / MAD_SCALE)


def estimate_profile(noise_like, max_lag: int) -> CorrelationProfile:
    """Biased sample autocorrelation normalized by lag 0, clamped to [-1, 1]."""
    x = np.asarray(noise_like, dtype=float)
    if x.size == 0:
        raise ValueError("input must be nonempty")
    max_lag = min(max_lag, x.size - 1)
    x = x - x.mean()
    denom = np.dot(x, x)
    if denom == 0:
        rho = np.zeros(max_lag + 1)
        rho[0] = 1.0
        return CorrelationProfile(rho=rho)
    rho = np.empty(max_lag + 1)
    rho[0] = 1.0
    for k in range(1, max_lag + 1):
        rho[k] = np.dot(x[:-k], x[k:]) / denom
    return CorrelationProfile(rho=np.clip(rho, -1.0, 1.0))
