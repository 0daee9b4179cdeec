"""Riemann zeta function and its s-derivatives.

:func:`zeta_jet` runs Euler-Maclaurin summation once in jet arithmetic, so
every derivative shares the same truncation behaviour.  :func:`zeta_eta` is an
unrelated route (accelerated alternating series) kept as a cross-check.
"""

from __future__ import annotations

import cmath
import math
from math import factorial

from ..errors import DomainError, PoleError, RangeError
from .bernoulli import BERNOULLI_FLOAT
from .config import DEFAULT, MAX_IMAG, PrecisionConfig
from .jet import Jet


def _power_jet(base: int, s: complex, order: int, offset: float = 0.0) -> Jet:
    """Jet of base**(offset - s) in s."""
    log_b = math.log(base)
    v = cmath.exp((offset - s) * log_b)
    coeffs = []
    p = v
    for k in range(order + 1):
        coeffs.append(p / factorial(k))
        p *= -log_b
    return Jet(coeffs)


def zeta_jet(s: complex, cfg: PrecisionConfig = DEFAULT, order: int = 3) -> Jet:
    """zeta(s) with its first ``order`` derivatives in s.

    Valid for |Im s| <= 200 with the default term policy.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if abs(s.imag) > MAX_IMAG:
        raise DomainError(f"|Im s| = {abs(s.imag):g} exceeds the validity ceiling {MAX_IMAG:g}")
    n_terms = cfg.terms_for(s)
    m_terms = cfg.tail_terms

    acc = [0j] * (order + 1)
    for n in range(1, n_terms):
        log_n = math.log(n)
        p = cmath.exp(-s * log_n)
        for k in range(order + 1):
            acc[k] += p
            p *= -log_n
    head = Jet(a / factorial(k) for k, a in enumerate(acc))

    sv = Jet.variable(s, order)
    n_pow = _power_jet(n_terms, s, order)  # N^-s
    pole = n_pow * n_terms / (sv - 1.0)  # N^(1-s)/(s-1)

    rising = sv
    poly = Jet.constant(0.0, order)
    for k in range(1, m_terms + 1):
        if k > 1:
            rising = rising * (sv + (2 * k - 3)) * (sv + (2 * k - 2))
        w = BERNOULLI_FLOAT[k] / factorial(2 * k) * float(n_terms) ** (1 - 2 * k)
        poly = poly + rising * w
    tail = n_pow * (poly + 0.5)

    out = head + pole + tail
    if not out.is_finite():
        raise RangeError(f"zeta jet overflowed at s = {s}")
    return out


def zeta(s: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    return zeta_jet(s, cfg, order=0).d0


def default_eta_terms(s: complex) -> int:
    return min(340, 40 + math.ceil(1.2 * abs(s.imag)))


def zeta_eta(s: complex, terms: int | None = None) -> complex:
    """zeta(s) from the alternating eta series with Borwein acceleration.

    Independent of the Euler-Maclaurin path; intended as an oracle.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("eta-series route needs Re s > 0")
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    factor = 1 - cmath.exp((1 - s) * math.log(2))
    if abs(factor) < 1e-14:
        raise DomainError(f"1 - 2^(1-s) vanishes at s = {s}")
    n = terms if terms is not None else default_eta_terms(s)
    if not 1 <= n <= 340:
        raise DomainError("terms must lie in [1, 340]")
    d = []
    term = 1.0
    total = 0.0
    for i in range(n + 1):
        if i:
            term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2 * i) * (2 * i - 1))
        total += term
        d.append(total)
    dn = d[n]
    acc = 0j
    for k in range(n):
        sign = -1.0 if k % 2 else 1.0
        acc += sign * (d[k] - dn) * cmath.exp(-s * math.log(k + 1))
    eta = -acc / dn
    return eta / factor
