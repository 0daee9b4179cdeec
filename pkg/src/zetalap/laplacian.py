"""G, H and their Moebius images nu, chi.

Canonical definitions (everything else is checked against these):

    G(t)  = -1 / R''(t) = -pi / Q'(t)
    H(t)  = G'(t)       =  pi Q''(t) / Q'(t)^2
    nu(u) = -G(i/2 - i u)
    chi(u) = -i H(i/2 - i u) = -d nu / du

With w = i/2 - i u the critical-line argument 1/2 + i w becomes u and the
gamma arguments 1/4 + i w/2, 1/4 - i w/2 become u/2 and (1 - u)/2, so
``nu = pi / D`` where

    D(u) = Q'(w) = -(ln zeta)''(u) - (psi1(u/2) - psi1((1-u)/2)) / 8.

``nu`` and ``chi`` are evaluated from that real-axis form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

from .errors import DomainError, PoleError, SingularityError
from .hardy import log_zeta_derivatives, q_jet
from .specfun import DEFAULT, PrecisionConfig, polygamma, zeta_jet

#: evaluations closer than this (Newton estimate) to a root of D are refused
SINGULARITY_GUARD = 1e-4
#: offset used to evaluate chi' at the removable ladder points
LADDER_STEP = 1e-6


class Kind(str, Enum):
    ZETA_ZERO_MINIMUM = "ZetaZeroMinimum"
    MIDPOINT_MAXIMUM = "MidpointMaximum"


@dataclass(frozen=True)
class ClassifiedPoint:
    t: float
    kind: Kind
    h_residual: float
    hdot: float

    def __post_init__(self):
        expected = Kind.ZETA_ZERO_MINIMUM if self.hdot > 0 else Kind.MIDPOINT_MAXIMUM
        if self.hdot == 0 or self.kind is not expected:
            raise ValueError("kind must agree with the sign of hdot")


@dataclass(frozen=True)
class GridFunction:
    t_start: float
    t_step: float
    values: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.t_step > 0:
            raise ValueError("t_step must be positive")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("grid values must be finite")

    @property
    def ts(self) -> list[float]:
        return [self.t_start + i * self.t_step for i in range(len(self.values))]

    @classmethod
    def sample(cls, f: Callable[[float], float], a: float, b: float, points: int) -> "GridFunction":
        if points < 2:
            raise ValueError("need at least two grid points")
        step = (b - a) / (points - 1)
        return cls(a, step, tuple(float(f(a + i * step)) for i in range(points)))

    def sup_norm(self) -> float:
        return max(abs(v) for v in self.values)


# --- critical line -----------------------------------------------------------


def _check_qdot(qd: complex, t: complex) -> None:
    if qd == 0:
        raise SingularityError(f"Q'(t) vanishes at t = {t}")


def _finite_or_raise(v: complex, t) -> complex:
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise SingularityError(f"non-finite value at {t}")
    return v


def g_function(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """G(t) = -pi / Q'(t)."""
    qd = q_jet(t, cfg).q_dot
    _check_qdot(qd, t)
    return _finite_or_raise(-math.pi / qd, t)


def delta_r(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """Second derivative of R, i.e. Q'(t)/pi."""
    return q_jet(t, cfg).q_dot / math.pi


def ghh(t: complex, cfg: PrecisionConfig = DEFAULT) -> tuple[complex, complex, complex]:
    """(G, H, H') from one Q jet."""
    q = q_jet(t, cfg)
    _check_qdot(q.q_dot, t)
    qd, qdd, qddd = q.q_dot, q.q_ddot, q.q_dddot
    g = -math.pi / qd
    h = math.pi * qdd / qd**2
    hdot = math.pi * (qddd * qd - 2 * qdd**2) / qd**3
    return _finite_or_raise(g, t), _finite_or_raise(h, t), _finite_or_raise(hdot, t)


def h_function(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """H(t) = G'(t) = pi Q''/Q'^2."""
    return ghh(t, cfg)[1]


def h_dot(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """H'(t) = G''(t)."""
    return ghh(t, cfg)[2]


def g_closed_form(t: complex, printed: bool = False, cfg: PrecisionConfig = DEFAULT) -> complex:
    """G from zeta(1/2+it) and its t-derivatives z, z', z''.

    ``printed=True`` transcribes the published expression literally:
    ``8 z^2 pi / (z^2 (g1m - g1p) - 8 (z z'' + z'^2))`` with g1p, g1m the
    trigamma values at 1/4 +- it/2.  The default flips the trigamma
    difference and the sign of z'^2, which is what -pi/Q' expands to.
    """
    t = complex(t)
    jet = zeta_jet(0.5 + 1j * t, cfg, order=2)
    z, zd, zdd = jet.d0, 1j * jet.d1, -jet.d2
    g1p = polygamma(1, 0.25 + 0.5j * t, cfg)
    g1m = polygamma(1, 0.25 - 0.5j * t, cfg)
    if printed:
        den = z * z * (g1m - g1p) - 8 * (z * zdd + zd * zd)
    else:
        den = z * z * (g1p - g1m) - 8 * (z * zdd - zd * zd)
    if den == 0:
        raise SingularityError(f"closed-form denominator vanishes at t = {t}")
    return 8 * z * z * math.pi / den


# --- real axis -----------------------------------------------------------------


def _is_ladder_point(u: complex) -> bool:
    """0, positive odd integers and negative even integers."""
    if u.imag != 0 or u.real != math.floor(u.real):
        return False
    k = int(u.real)
    return (k >= 1 and k % 2 == 1) or (k <= 0 and k % 2 == 0)


def nu_denominator(u: complex, cfg: PrecisionConfig = DEFAULT, order: int = 1) -> tuple:
    """D(u) and its first ``order`` u-derivatives (order <= 2)."""
    u = complex(u)
    lam = log_zeta_derivatives(u, cfg, order=order + 2)
    a, b = u / 2, (1 - u) / 2
    out = [-lam[1] - (polygamma(1, a, cfg) - polygamma(1, b, cfg)) / 8]
    if order >= 1:
        out.append(-lam[2] - (polygamma(2, a, cfg) + polygamma(2, b, cfg)) / 16)
    if order >= 2:
        out.append(-lam[3] - (polygamma(3, a, cfg) - polygamma(3, b, cfg)) / 32)
    return tuple(out)


def _nu_parts(u: complex, cfg: PrecisionConfig, order: int, guard: bool) -> tuple:
    try:
        d = nu_denominator(u, cfg, order=2 if guard else max(order, 1))
    except PoleError:
        # the only poles of D's ingredients on the line are the ladder points
        raise DomainError(f"nu is not defined by the direct formula at u = {u}") from None
    if d[0] == 0:
        raise SingularityError(f"D(u) vanishes at u = {u}")
    # root-like (not pole-like): small Newton step and small D D''/D'^2
    if (
        guard
        and abs(d[0]) < SINGULARITY_GUARD * abs(d[1])
        and abs(d[0] * d[2]) < 0.5 * abs(d[1]) ** 2
    ):
        raise SingularityError(
            f"u = {u} is within ~{abs(d[0] / d[1]):.2e} of a root of D (pole of nu)"
        )
    return d


def _real_if_real(u: complex, v: complex) -> complex:
    return complex(v.real, 0.0) if u.imag == 0 else v


def _ladder_offset(u: complex):
    """(u0, h) when u lies strictly within LADDER_STEP of a ladder point u0."""
    if u.imag != 0 or _is_ladder_point(u):
        return None
    u0 = complex(round(u.real), 0.0)
    h = u.real - u0.real
    if abs(h) < LADDER_STEP and _is_ladder_point(u0):
        return u0, h
    return None


def _ladder_taylor(u0: complex, cfg: PrecisionConfig, guard: bool) -> tuple[float, float]:
    """chi'(u0) and chi''(u0) from one-sided evaluations at u0 +- LADDER_STEP."""
    lo = _chi_dot_direct(u0 - LADDER_STEP, cfg, guard).real
    hi = _chi_dot_direct(u0 + LADDER_STEP, cfg, guard).real
    return 0.5 * (lo + hi), (hi - lo) / (2 * LADDER_STEP)


# Each ladder point is a double zero of nu: nu = -(c1 h^2/2 + c2 h^3/6) + O(h^4)
# with c1 = chi'(u0), c2 = chi''(u0).  Within LADDER_STEP the direct formula
# would divide poles by poles, so the local expansion is used instead.


def nu(u: complex, cfg: PrecisionConfig = DEFAULT, guard: bool = True) -> complex:
    """nu(u) = pi / D(u); exact zeros at the ladder points."""
    u = complex(u)
    if _is_ladder_point(u):
        return 0j
    near = _ladder_offset(u)
    if near:
        c1, c2 = _ladder_taylor(near[0], cfg, guard)
        h = near[1]
        return complex(-(c1 * h * h / 2 + c2 * h**3 / 6), 0.0)
    d = _nu_parts(u, cfg, 0, guard)
    return _real_if_real(u, _finite_or_raise(math.pi / d[0], u))


def chi(u: complex, cfg: PrecisionConfig = DEFAULT, guard: bool = True) -> complex:
    """chi(u) = -nu'(u) = pi D'(u) / D(u)^2."""
    u = complex(u)
    if _is_ladder_point(u):
        return 0j
    near = _ladder_offset(u)
    if near:
        c1, c2 = _ladder_taylor(near[0], cfg, guard)
        h = near[1]
        return complex(c1 * h + c2 * h * h / 2, 0.0)
    d = _nu_parts(u, cfg, 1, guard)
    return _real_if_real(u, _finite_or_raise(math.pi * d[1] / d[0] ** 2, u))


def chi_dot(u: complex, cfg: PrecisionConfig = DEFAULT, guard: bool = True) -> complex:
    """chi'(u) = -nu''(u).

    At and next to a ladder point the formula is 0/0; there the value comes
    from the one-sided evaluations at distance LADDER_STEP (error O(LADDER_STEP^2)).
    """
    u = complex(u)
    if _is_ladder_point(u):
        return complex(_ladder_taylor(u, cfg, guard)[0], 0.0)
    near = _ladder_offset(u)
    if near:
        c1, c2 = _ladder_taylor(near[0], cfg, guard)
        return complex(c1 + c2 * near[1], 0.0)
    return _chi_dot_direct(u, cfg, guard)


def _chi_dot_direct(u: complex, cfg: PrecisionConfig, guard: bool) -> complex:
    d = _nu_parts(u, cfg, 2, guard)
    v = math.pi * (d[2] * d[0] - 2 * d[1] ** 2) / d[0] ** 3
    return _real_if_real(u, _finite_or_raise(v, u))


def nu_via_g(u: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """-G(i/2 - i u) through the complex critical-line machinery."""
    return -g_function(0.5j - 1j * complex(u), cfg)


def chi_via_h(u: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """-i H(i/2 - i u) through the complex critical-line machinery."""
    return -1j * h_function(0.5j - 1j * complex(u), cfg)


def _chi_closed_parts(u: complex, cfg: PrecisionConfig):
    jet = zeta_jet(u, cfg, order=3)
    z, z1, z2, z3 = jet.d0, jet.d1, jet.d2, jet.d3
    a, b = u / 2, 0.5 - u / 2
    return z, z1, z2, z3, polygamma(1, a, cfg), polygamma(1, b, cfg), polygamma(2, a, cfg), polygamma(2, b, cfg)


def chi_closed_form(u: complex, printed: bool = False, cfg: PrecisionConfig = DEFAULT) -> complex:
    """chi from zeta(u), its derivatives and polygammas at u/2, 1/2 - u/2.

    ``printed=True`` evaluates the published expression as typeset:

        -4 i pi z [z^3 (p2a - p2b) - 8 (6 z z' z'' + 2 z^2 z''' + 4 z'^3)]
        / (z^2 ((p1a - p1b) + 8 (z z'' - z'^2)))^2

    The default is the expansion of pi D'/D^2:

        -4 pi z [z^3 (p2a + p2b) + 16 (z^2 z''' - 3 z z' z'' + 2 z'^3)]
        / (z^2 (p1a - p1b) + 8 (z z'' - z'^2))^2
    """
    u = complex(u)
    z, z1, z2, z3, p1a, p1b, p2a, p2b = _chi_closed_parts(u, cfg)
    if printed:
        num = z**3 * (p2a - p2b) - 8 * (6 * z * z1 * z2 + 2 * z**2 * z3 + 4 * z1**3)
        den = (z**2 * ((p1a - p1b) + 8 * (z * z2 - z1**2))) ** 2
        pre = -4j * math.pi * z
    else:
        num = z**3 * (p2a + p2b) + 16 * (z**2 * z3 - 3 * z * z1 * z2 + 2 * z1**3)
        den = (z**2 * (p1a - p1b) + 8 * (z * z2 - z1**2)) ** 2
        pre = -4 * math.pi * z
    if den == 0:
        raise SingularityError(f"closed-form denominator vanishes at u = {u}")
    return pre * num / den


def mu(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """mu(t) = nu(t + 1/2), even in t."""
    return nu(complex(t) + 0.5, cfg)


def psi_fn(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """psi(t) = chi(t + 1/2), odd in t."""
    return chi(complex(t) + 0.5, cfg)


def nu_n(n: float, t: float, cfg: PrecisionConfig = DEFAULT) -> float:
    """nu(1 + 2n + 2t)."""
    return nu(1 + 2 * n + 2 * t, cfg).real


def chi_n(n: float, t: float, cfg: PrecisionConfig = DEFAULT) -> float:
    """chi(1 + 2n + 2t)."""
    return chi(1 + 2 * n + 2 * t, cfg).real


def nu_limit(t: float) -> float:
    return math.sin(math.pi * t) ** 2


def chi_limit(t: float) -> float:
    return -8.0 * math.sin(math.pi * t) * math.cos(math.pi * t)


def sample(f: Callable[[float], float], ts: Sequence[float]) -> list[float]:
    return [float(f(t)) for t in ts]
