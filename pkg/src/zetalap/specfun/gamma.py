"""Log-gamma and polygamma functions for complex arguments.

Both use upward recurrence until ``|z|`` clears the shift threshold (and
``Re z >= 0``), then the Stirling / asymptotic series with Bernoulli
coefficients.
"""

from __future__ import annotations

import cmath
import math
from math import factorial

from ..errors import PoleError, RangeError
from .bernoulli import BERNOULLI_FLOAT
from .config import DEFAULT, PrecisionConfig

_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def _check_pole(z: complex) -> None:
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise PoleError(f"gamma pole at z = {z.real:g}")


def _shift_count(z: complex, threshold: float) -> int:
    n = max(0, math.ceil(-z.real))
    while abs(z + n) < threshold:
        n += 1
    return n


def _finite(v: complex, what: str) -> complex:
    if not cmath.isfinite(v):
        raise RangeError(f"{what} overflowed")
    return v


def log_gamma(z: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """ln Gamma(z), continuous on Re z > 0 and real for real positive z."""
    z = complex(z)
    _check_pole(z)
    n = _shift_count(z, cfg.polygamma_shift_threshold)
    shift = 0j
    for k in range(n):
        shift += cmath.log(z + k)
    w = z + n
    inv = 1 / w
    inv2 = inv * inv
    series = 0j
    p = inv
    for k in range(1, cfg.polygamma_terms + 1):
        series += BERNOULLI_FLOAT[k] / (2 * k * (2 * k - 1)) * p
        p *= inv2
    out = (w - 0.5) * cmath.log(w) - w + _HALF_LOG_2PI + series - shift
    if z.imag == 0 and z.real > 0:
        out = complex(out.real, 0.0)
    return _finite(out, "log_gamma")


def polygamma(order: int, z: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """Polygamma function of the given order (0 = digamma, 1 = trigamma, ...)."""
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"polygamma order must be a non-negative integer, got {order!r}")
    z = complex(z)
    _check_pole(z)
    m = order
    n = _shift_count(z, cfg.polygamma_shift_threshold)
    # psi^(m)(z) = psi^(m)(z+n) - (-1)^m m! sum_k (z+k)^-(m+1)
    shift = 0j
    try:
        for k in range(n):
            shift += (z + k) ** (-(m + 1))
    except OverflowError:
        raise RangeError(f"polygamma({m}) overflows near the pole at {z}") from None
    shift *= (-1) ** m * factorial(m)
    w = z + n
    inv = 1 / w
    inv2 = inv * inv
    if m == 0:
        acc = cmath.log(w) - 0.5 * inv
        p = inv2
        for k in range(1, cfg.polygamma_terms + 1):
            acc -= BERNOULLI_FLOAT[k] / (2 * k) * p
            p *= inv2
    else:
        wm = inv**m
        acc = factorial(m - 1) * wm + factorial(m) * 0.5 * wm * inv
        p = wm * inv2
        for k in range(1, cfg.polygamma_terms + 1):
            acc += BERNOULLI_FLOAT[k] * factorial(2 * k + m - 1) / factorial(2 * k) * p
            p *= inv2
        acc *= (-1) ** (m + 1)
    return _finite(acc - shift, "polygamma")


def digamma(z: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    return polygamma(0, z, cfg)
