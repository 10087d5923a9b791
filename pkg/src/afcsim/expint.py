"""Exponential integral E1 for complex arguments.

E1(z) = int_z^inf exp(-t)/t dt on the principal branch (cut along the
negative real axis).  Evaluated by the alternating power series for
|z| <= 4 and by a modified-Lentz continued fraction for |z| > 4, which
covers the moderate-magnitude complex arguments that appear in the comb
Fourier coefficients.  Accuracy degrades for |z| > 4 very close to the
branch cut; the comb coefficients always carry |Im z| = pi and are safe.
"""

from __future__ import annotations

import numpy as np

EULER_GAMMA = 0.5772156649015328606

_SERIES_RADIUS = 4.0
_MAX_TERMS = 120
_MAX_CF_ITER = 400
_EPS = 1e-16


def _e1_series(z: np.ndarray) -> np.ndarray:
    total = -EULER_GAMMA - np.log(z)
    term = np.ones_like(z)  # (-z)^k / k!
    for k in range(1, _MAX_TERMS + 1):
        term = term * (-z) / k
        contrib = term / k
        total = total - contrib
        if np.max(np.abs(contrib)) < _EPS * max(1.0, np.min(np.abs(total))):
            break
    return total


def _e1_continued_fraction(z: np.ndarray) -> np.ndarray:
    # E1(z) = e^{-z} / (z + 1 - 1^2/(z + 3 - 2^2/(z + 5 - ...))), Lentz form
    tiny = 1e-290
    b = z + 1.0
    c = np.full_like(z, 1.0 / tiny)
    d = 1.0 / b
    h = d.copy()
    for i in range(1, _MAX_CF_ITER + 1):
        a = -float(i * i)
        b = b + 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h = h * delta
        if np.max(np.abs(delta - 1.0)) < _EPS:
            break
    return h * np.exp(-z)


def exp_integral_e1(z):
    """Principal-branch exponential integral E1(z) for complex z.

    Accepts scalars or arrays; z = 0 (logarithmic singularity) raises a
    ValueError.  Satisfies E1(conj z) = conj(E1(z)) off the branch cut.
    """
    arr = np.asarray(z, dtype=complex)
    if np.any(arr == 0):
        raise ValueError("E1 is singular at z = 0")
    out = np.empty_like(arr)
    flat = arr.ravel()
    res = out.ravel()
    small = np.abs(flat) <= _SERIES_RADIUS
    if small.any():
        res[small] = _e1_series(flat[small])
    if (~small).any():
        res[~small] = _e1_continued_fraction(flat[~small])
    if np.isscalar(z) or arr.ndim == 0:
        return complex(out)
    return out
