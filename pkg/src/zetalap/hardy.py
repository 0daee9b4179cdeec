"""Riemann-Siegel theta, Hardy's Z and the logarithmic-derivative chain.

Conventions for real ``t``:

* ``s = 1/2 + i t`` on the critical line; s-derivatives of zeta become
  t-derivatives via ``d/dt = i d/ds``.
* The continuous argument of ``zeta(1/2 + i t)`` is anchored at ``-pi`` for
  ``t = 0`` (the limit from above of the standard definition, so that
  ``S(0+) = -1`` and ``N(t)`` counts zeros).  Crossing a zero on the line adds
  ``+pi``, which is the convention obtained by passing the zero on its right.
"""

from __future__ import annotations

import bisect
import cmath
import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import ConfigurationError, DomainError, PoleError, ZeroAdjacentError
from .specfun import DEFAULT, PrecisionConfig, log_gamma, polygamma, zeta_jet

LOG_PI = math.log(math.pi)


def _s_of(t: complex) -> complex:
    return 0.5 + 1j * complex(t)


def theta(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """Riemann-Siegel theta from log-gamma; real for real ``t``."""
    t = complex(t)
    a = 0.25 + 0.5j * t
    b = 0.25 - 0.5j * t
    out = -0.5j * (log_gamma(a, cfg) - log_gamma(b, cfg)) - 0.5 * LOG_PI * t
    if t.imag == 0:
        out = complex(out.real, 0.0)
    return out


def theta_derivative(t: complex, k: int, cfg: PrecisionConfig = DEFAULT) -> complex:
    """k-th t-derivative of theta, k >= 1."""
    if k < 1:
        raise ValueError("use theta() for k = 0")
    t = complex(t)
    a = 0.25 + 0.5j * t
    b = 0.25 - 0.5j * t
    if k == 1:
        return (polygamma(0, a, cfg) + polygamma(0, b, cfg) - 2 * LOG_PI) / 4
    m = k - 1
    return 0.25 * (0.5j) ** m * (polygamma(m, a, cfg) + (-1) ** m * polygamma(m, b, cfg))


def hardy_z(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """Z(t) = exp(i theta(t)) zeta(1/2 + i t)."""
    t = complex(t)
    return cmath.exp(1j * theta(t, cfg)) * zeta_jet(_s_of(t), cfg, order=0).d0


def hardy_z_real(t: float, cfg: PrecisionConfig = DEFAULT) -> float:
    return hardy_z(t, cfg).real


def mobius_roundtrip(s: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    """exp(-i theta(w)) Z(w) with w = i/2 - i s; equals zeta(s)."""
    w = 0.5j - 1j * complex(s)
    return cmath.exp(-1j * theta(w, cfg)) * hardy_z(w, cfg)


# --- continuous argument ---------------------------------------------------


def _wrap(x: float) -> float:
    return math.remainder(x, 2 * math.pi)


@dataclass
class UnwindState:
    """Checkpointed argument tracker for zeta on the critical line.

    Not safe for concurrent mutation; use :meth:`clone` per thread.
    """

    anchor_t: float = 0.0
    anchor_arg: float = -math.pi
    max_step: float = 0.1
    checkpoint_spacing: float = 0.5
    crossing_width: float = 1e-6
    min_step: float = 1e-12
    cfg: PrecisionConfig = DEFAULT
    _ts: list = field(default_factory=list, repr=False)
    _args: list = field(default_factory=list, repr=False)
    _phases: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.max_step <= 0 or self.crossing_width <= self.min_step:
            raise ConfigurationError("invalid step parameters")
        if not self._ts:
            v = self._zeta(self.anchor_t)
            if v == 0:
                raise ZeroAdjacentError("anchor sits on a zero")
            phase = cmath.phase(v)
            if abs(_wrap(phase - self.anchor_arg)) > 1e-9:
                # anchor_arg must be a valid argument of zeta at the anchor
                raise ConfigurationError(
                    f"anchor_arg={self.anchor_arg} is not an argument of zeta at t={self.anchor_t}"
                )
            self._ts.append(self.anchor_t)
            self._args.append(self.anchor_arg)
            self._phases.append(phase)

    def clone(self) -> "UnwindState":
        return UnwindState(
            self.anchor_t, self.anchor_arg, self.max_step, self.checkpoint_spacing,
            self.crossing_width, self.min_step, self.cfg,
            list(self._ts), list(self._args), list(self._phases),
        )

    @property
    def checkpoints(self) -> list[tuple[float, float]]:
        return list(zip(self._ts, self._args))

    def _zeta(self, t: float) -> complex:
        return zeta_jet(_s_of(t), self.cfg, order=0).d0

    def _z_sign(self, t: float) -> float:
        return math.copysign(1.0, hardy_z_real(t, self.cfg))

    def _store(self, t: float, arg: float, phase: float) -> None:
        i = bisect.bisect_left(self._ts, t)
        if i < len(self._ts) and self._ts[i] == t:
            return
        self._ts.insert(i, t)
        self._args.insert(i, arg)
        self._phases.insert(i, phase)

    def arg(self, t: float) -> tuple[float, complex]:
        """Continuous argument at ``t`` and the zeta value there."""
        t = float(t)
        if t < self.anchor_t:
            raise DomainError(f"t={t} lies below the anchor {self.anchor_t}")
        i = bisect.bisect_right(self._ts, t) - 1
        cur_t, cur_arg, cur_phase = self._ts[i], self._args[i], self._phases[i]
        if cur_t == t:
            return cur_arg, self._zeta(t)
        next_mark = (math.floor(cur_t / self.checkpoint_spacing) + 1) * self.checkpoint_spacing
        h = self.max_step
        v = None
        while cur_t < t:
            nxt = min(cur_t + h, t)
            v = self._zeta(nxt)
            if v == 0:
                raise ZeroAdjacentError(f"zeta vanishes at t={nxt}")
            phase = cmath.phase(v)
            d = _wrap(phase - cur_phase)
            if abs(d) >= math.pi / 2:
                step = nxt - cur_t
                if step <= self.crossing_width and self._z_sign(cur_t) != self._z_sign(nxt):
                    d = d if d > 0 else d + 2 * math.pi
                elif step < self.min_step:
                    raise ZeroAdjacentError(f"argument tracking collapsed near t={cur_t}")
                else:
                    h = step / 2
                    continue
            cur_t, cur_arg, cur_phase = nxt, cur_arg + d, phase
            while cur_t >= next_mark:
                self._store(cur_t, cur_arg, cur_phase)
                next_mark += self.checkpoint_spacing
            h = min(self.max_step, 2 * h)
        if v is None:
            v = self._zeta(t)
        return cur_arg, v


def log_zeta_continuous(t: float, state: Optional[UnwindState] = None) -> complex:
    """ln|zeta(1/2+it)| + i * continuous argument.  ``state`` is updated in place."""
    state = state if state is not None else UnwindState()
    arg, v = state.arg(t)
    return complex(math.log(abs(v)), arg)


def s_function(t: float, state: Optional[UnwindState] = None) -> float:
    """S(t): continuous argument of zeta on the critical line over pi."""
    state = state if state is not None else UnwindState()
    return state.arg(t)[0] / math.pi


def backlund_n(t: float, state: Optional[UnwindState] = None) -> float:
    """theta(t)/pi + 1 + S(t)."""
    if t <= 0:
        raise DomainError("backlund_n needs t > 0")
    state = state if state is not None else UnwindState()
    return theta(t, state.cfg).real / math.pi + 1.0 + s_function(t, state)


def r_function(t: float, state: Optional[UnwindState] = None) -> complex:
    """R(t) = (ln zeta(1/2+it) + i theta(t)) / pi on the continuous branch."""
    state = state if state is not None else UnwindState()
    lz = log_zeta_continuous(t, state)
    return (lz + 1j * theta(t, state.cfg).real) / math.pi


# --- logarithmic derivative of Z -------------------------------------------


@dataclass(frozen=True)
class QJet:
    """Q(t) = Z'(t)/Z(t) and its first three t-derivatives."""

    q: complex
    q_dot: complex
    q_ddot: complex
    q_dddot: complex


def log_zeta_derivatives(s: complex, cfg: PrecisionConfig = DEFAULT, order: int = 4) -> tuple:
    """(ln zeta)^(k)(s) for k = 1..order (s-derivatives)."""
    jet = zeta_jet(s, cfg, order=order)
    if jet.d0 == 0:
        raise PoleError(f"zeta vanishes at s = {s}")
    return jet.log().derivatives()[1:]


def q_jet(t: complex, cfg: PrecisionConfig = DEFAULT) -> QJet:
    """Q(t) = i(zeta'/zeta(1/2+it) + theta'(t)) with exact derivatives."""
    t = complex(t)
    lam = log_zeta_derivatives(_s_of(t), cfg, order=4)
    vals = []
    for m in range(4):
        # d^m/dt^m of (ln zeta)'(1/2+it) is i^m (ln zeta)^(m+1)
        vals.append(1j * ((1j) ** m * lam[m] + theta_derivative(t, m + 1, cfg)))
    return QJet(*vals)


def q_function(t: complex, cfg: PrecisionConfig = DEFAULT) -> complex:
    return q_jet(t, cfg).q


def _singular_points(limit: int) -> list[complex]:
    pts = []
    for k in range(1, limit + 1):
        pts.append(0.5j * (4 * k - 3))
        pts.append(-0.5j * (4 * k - 3))
    return pts


def q_residue(
    n: int,
    sign: int,
    radius: float = 0.3,
    nodes: int = 256,
    cfg: PrecisionConfig = DEFAULT,
) -> complex:
    """Contour residue of Q at sign * (i/2)(4n - 3) by the trapezoid rule."""
    if sign not in (1, -1):
        raise ConfigurationError("sign must be +1 or -1")
    if not 1 <= n <= 3:
        raise ConfigurationError("q_residue supports 1 <= n <= 3")
    if nodes < 8 or radius <= 0:
        raise ConfigurationError("need radius > 0 and at least 8 nodes")
    centre = sign * 0.5j * (4 * n - 3)
    others = [p for p in _singular_points(n + 2) if p != centre]
    nearest = min(abs(p - centre) for p in others)
    # nontrivial zeros have |Re t| > 14, far from the imaginary axis
    if radius >= nearest:
        raise ConfigurationError(
            f"contour radius {radius} reaches another singularity at distance {nearest}"
        )
    acc = 0j
    for k in range(nodes):
        w = radius * cmath.exp(2j * math.pi * k / nodes)
        acc += q_function(centre + w, cfg) * w
    return acc / nodes
