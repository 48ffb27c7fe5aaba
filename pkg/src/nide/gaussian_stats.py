"""Scalar Gaussian primitives: error functions and the two absolute-value CDFs.

Two cumulative curves drive everything else in this package:

* ``abs_noise_cdf`` (``F``): the CDF of ``|V|`` for zero-mean Gaussian noise
  ``V`` with standard deviation ``sigma``.
* ``shifted_abs_cdf`` (``H``): the CDF of ``|theta_bar + V|``, i.e. the same
  curve for a noisy coefficient whose noise-free value is ``theta_bar``.

All functions accept scalars or ndarrays and evaluate elementwise.
"""

from __future__ import annotations

import numpy as np
from scipy import special

__all__ = [
    "erf",
    "erf_std",
    "std_normal_cdf",
    "abs_noise_cdf",
    "shifted_abs_cdf",
]

_SQRT2 = np.sqrt(2.0)


def erf(x):
    """Error function normalized to a half: ``(1/sqrt(pi)) * int_0^x exp(-t^2) dt``.

    This is *half* the textbook error function; its range is (-0.5, 0.5).
    The half-normalized form is what the band-confidence mapping in
    :mod:`nide.signature` uses.  For the conventional function use
    :func:`erf_std`.
    """
    return 0.5 * special.erf(x)


def erf_std(x):
    """Conventional error function, ``erf_std(x) = 2 * erf(x)``, range (-1, 1)."""
    return special.erf(x)


def std_normal_cdf(x):
    """Standard normal CDF ``phi(x) = 0.5 * (1 + erf_std(x / sqrt(2)))``."""
    return 0.5 * (1.0 + special.erf(np.asarray(x, dtype=float) / _SQRT2))


def abs_noise_cdf(z, sigma):
    """CDF of ``|V|`` for ``V ~ N(0, sigma^2)``: ``F(z) = 2 phi(z/sigma) - 1``.

    Parameters
    ----------
    z : float or ndarray
        Nonnegative evaluation points.
    sigma : float
        Noise standard deviation, must be positive.

    Returns
    -------
    float or ndarray
        ``F(z)`` in [0, 1], nondecreasing in ``z``.
    """
    z = np.asarray(z, dtype=float)
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if np.any(z < 0):
        raise ValueError("z must be nonnegative")
    out = 2.0 * std_normal_cdf(z / sigma) - 1.0
    return float(out) if out.ndim == 0 else out


def shifted_abs_cdf(z, theta_bar, sigma):
    """CDF of ``|theta_bar + V|`` for ``V ~ N(0, sigma^2)``.

    ``H(z, theta_bar) = phi((z - theta_bar)/sigma) + phi((z + theta_bar)/sigma) - 1``.
    Symmetric in the sign of ``theta_bar``; reduces to :func:`abs_noise_cdf`
    when ``theta_bar = 0``.
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    z = np.asarray(z, dtype=float)
    theta_bar = np.asarray(theta_bar, dtype=float)
    out = (
        std_normal_cdf((z - theta_bar) / sigma)
        + std_normal_cdf((z + theta_bar) / sigma)
        - 1.0
    )
    return float(out) if out.ndim == 0 else out
