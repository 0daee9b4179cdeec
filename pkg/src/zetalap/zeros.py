"""Locate and classify the critical points of G on the critical line.

Roots of H = G' are bracketed on a fixed coarse grid, refined with Brent's
method and classified by the sign of H' = G'': positive marks a minimum of
G (a zeta zero), negative a maximum between zeros.  Poles of G (sign changes
of Q') are reported as excluded bands.

The grid is global, so splitting it across worker processes cannot change
the output: each cell is owned by exactly one chunk.
"""

from __future__ import annotations

import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Optional, Sequence

from scipy.optimize import brentq

from .errors import ConfigurationError, DomainError, UnclassifiableError, ZetalapError
from .hardy import hardy_z_real, q_jet
from .laplacian import ClassifiedPoint, Kind, ghh
from .specfun import MAX_IMAG

log = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-6
_RTOL = 4 * sys.float_info.epsilon
HDOT_FLOOR = 1e-12


class BracketError(ZetalapError, ValueError):
    """Bracket does not straddle a sign change."""


@dataclass(frozen=True)
class SweepConfig:
    t_min: float
    t_max: float
    coarse_step: float = 0.05
    refine_tol: float = 1e-10
    workers: int = 1
    guard_band: float = 1e-3

    def __post_init__(self):
        if not self.t_min < self.t_max:
            raise ConfigurationError(f"need t_min < t_max, got [{self.t_min}, {self.t_max}]")
        if not 0 < self.coarse_step < 0.5:
            raise ConfigurationError("coarse_step must lie in (0, 0.5)")
        if self.t_min < 0 or self.t_max > MAX_IMAG:
            raise ConfigurationError(f"sweep interval must lie within [0, {MAX_IMAG:g}]")
        if self.workers < 1:
            raise ConfigurationError("workers must be positive")
        if self.refine_tol <= 0 or self.guard_band < 0:
            raise ConfigurationError("refine_tol must be positive and guard_band non-negative")

    @property
    def n_cells(self) -> int:
        return max(1, math.ceil((self.t_max - self.t_min) / self.coarse_step - 1e-9))

    def grid_point(self, i: int) -> float:
        n = self.n_cells
        if i == n:
            return self.t_max
        return self.t_min + i * (self.t_max - self.t_min) / n


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    t: float
    kind: Optional[Kind]
    h_residual: float
    hdot: float
    bracket: tuple[float, float]
    z_signchange_match: Optional[float] = None
    flagged: Optional[str] = None


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    records: tuple[ZeroRecord, ...]
    excluded: tuple[tuple[float, float], ...] = ()
    failed_points: tuple[float, ...] = ()

    @property
    def minima(self) -> list[ZeroRecord]:
        return [r for r in self.records if r.kind is Kind.ZETA_ZERO_MINIMUM]

    @property
    def maxima(self) -> list[ZeroRecord]:
        return [r for r in self.records if r.kind is Kind.MIDPOINT_MAXIMUM]

    def alternates(self) -> bool:
        kinds = [r.kind for r in self.records]
        return all(a is not b for a, b in zip(kinds, kinds[1:]))


def h_real(t: float) -> float:
    return ghh(t)[1].real


def refine_root(lo: float, hi: float, tol: float = 1e-10) -> float:
    """Root of H in [lo, hi] by Brent's method (bisection-safeguarded)."""
    if not lo < hi:
        raise BracketError(f"degenerate bracket [{lo}, {hi}]")
    h_lo, h_hi = h_real(lo), h_real(hi)
    if h_lo == 0:
        return lo
    if h_hi == 0:
        return hi
    if h_lo * h_hi > 0:
        raise BracketError(f"H does not change sign on [{lo}, {hi}]")
    return brentq(h_real, lo, hi, xtol=tol, rtol=_RTOL, maxiter=200)


def classify(t: float, residual_tol: float = RESIDUAL_TOL, scale: float = 1.0) -> ClassifiedPoint:
    """Classify a root of H by the sign of H'.

    ``scale`` multiplies |H'| in the residual test |H| <= tol (1 + |H'| scale).
    """
    _, h, hd = ghh(t)
    h, hd = h.real, hd.real
    if abs(h) > residual_tol * (1 + abs(hd) * scale):
        raise DomainError(f"t = {t} is not a root of H (|H| = {abs(h):.3e})")
    if abs(hd) <= HDOT_FLOOR:
        raise UnclassifiableError(f"H' vanishes at t = {t}; degenerate critical point")
    kind = Kind.ZETA_ZERO_MINIMUM if hd > 0 else Kind.MIDPOINT_MAXIMUM
    return ClassifiedPoint(t=t, kind=kind, h_residual=abs(h), hdot=hd)


def z_signchange_distance(t: float, window: float = 1e-3) -> Optional[float]:
    """Distance from ``t`` to the nearest sign change of Z within ``window``."""
    w = window
    for _ in range(6):
        a, b = t - w, t + w
        za, zb = hardy_z_real(a), hardy_z_real(b)
        if za * zb < 0:
            root = brentq(hardy_z_real, a, b, xtol=1e-14, rtol=_RTOL)
            return abs(root - t)
        w *= 4
    return None


# --- sweep ---------------------------------------------------------------------


def _eval_point(cfg: SweepConfig, i: int) -> tuple[Optional[float], Optional[float], float]:
    """(H, G) at grid point i, nudging inward up to three times on failure."""
    t = cfg.grid_point(i)
    candidates = [t]
    for k in range(1, 4):
        d = cfg.coarse_step / 4**k
        candidates += [t + d, t - d]
    for c in candidates:
        if not cfg.t_min <= c <= cfg.t_max:
            continue
        try:
            g, h, _ = ghh(c)
            return h.real, g.real, c
        except ZetalapError as exc:
            log.debug("evaluation failed at t=%r: %s", c, exc)
    return None, None, t


def _sweep_chunk(args: tuple[SweepConfig, int, int]) -> tuple[list, list, list]:
    cfg, c0, c1 = args
    samples = [_eval_point(cfg, i) for i in range(c0, c1 + 1)]
    found, poles, failed = [], [], []
    for j in range(c1 - c0):
        (h_a, g_a, ta), (h_b, g_b, tb) = samples[j], samples[j + 1]
        if h_a is None or h_b is None:
            failed.append(ta if h_a is None else tb)
            continue
        if g_a * g_b < 0:
            poles.append(_locate_pole(ta, tb))
        if h_a == 0:
            found.append(_finish(cfg, ta, (ta, tb)))
        elif h_a * h_b < 0:
            try:
                root = refine_root(ta, tb, cfg.refine_tol)
                found.append(_finish(cfg, root, (ta, tb)))
            except (ZetalapError, RuntimeError, ValueError) as exc:
                found.append(
                    ZeroRecord(-1, 0.5 * (ta + tb), None, math.nan, math.nan, (ta, tb),
                               flagged=f"refinement failed: {exc}")
                )
    return found, poles, failed


def _locate_pole(a: float, b: float) -> float:
    def qdot(t):
        return q_jet(t).q_dot.real

    try:
        if qdot(a) * qdot(b) < 0:
            return brentq(qdot, a, b, xtol=1e-12)
    except ZetalapError:
        pass
    return 0.5 * (a + b)


def _finish(cfg: SweepConfig, root: float, bracket: tuple[float, float]) -> ZeroRecord:
    width = max(cfg.refine_tol, 1e-12)
    try:
        point = classify(root, scale=width)
    except ZetalapError as exc:
        return ZeroRecord(-1, root, None, math.nan, math.nan, bracket, flagged=str(exc))
    match = None
    if point.kind is Kind.ZETA_ZERO_MINIMUM:
        match = z_signchange_distance(root)
    return ZeroRecord(-1, root, point.kind, point.h_residual, point.hdot, bracket, match)


def _chunks(n_cells: int, workers: int) -> list[tuple[int, int]]:
    k = min(workers, n_cells)
    edges = [round(i * n_cells / k) for i in range(k + 1)]
    return [(edges[i], edges[i + 1]) for i in range(k) if edges[i] < edges[i + 1]]


def sweep(cfg: SweepConfig) -> SweepResult:
    """Find and classify every root of H in the open interval (t_min, t_max)."""
    jobs = [(cfg, a, b) for a, b in _chunks(cfg.n_cells, cfg.workers)]
    if cfg.workers == 1 or len(jobs) == 1:
        parts = [_sweep_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(_sweep_chunk, jobs))
    found = [r for p in parts for r in p[0]]
    poles = sorted(p for part in parts for p in part[1])
    failed = tuple(sorted(f for part in parts for f in part[2]))

    edge = max(10 * cfg.refine_tol, 1e-9)
    bands = tuple((p - cfg.guard_band, p + cfg.guard_band) for p in poles)
    kept: list[ZeroRecord] = []
    for r in sorted(found, key=lambda r: r.t):
        if r.t - cfg.t_min < edge or cfg.t_max - r.t < edge:
            continue
        if any(lo <= r.t <= hi for lo, hi in bands):
            continue
        if kept and r.t - kept[-1].t < cfg.refine_tol:
            continue
        kept.append(r)
    records = tuple(replace(r, index=i) for i, r in enumerate(kept))
    for r in records:
        if r.flagged:
            log.warning("flagged root near t=%.6f: %s", r.t, r.flagged)
    return SweepResult(cfg, records, bands, failed)


# --- published zero tables -----------------------------------------------------


def read_zeros_file(path: str | Path) -> list[float]:
    """One decimal ordinate per line; '#' starts a comment."""
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(float(line))
    return sorted(out)


@dataclass(frozen=True)
class ZeroMatch:
    t: float
    published: Optional[float]
    diff: float
    ok: bool


def cross_check(
    minima: Sequence[ZeroRecord], published: Iterable[float], tol: float = 1e-5
) -> list[ZeroMatch]:
    """Nearest published ordinate for each minimum; mismatches are reported, not raised."""
    table = sorted(published)
    out = []
    for r in minima:
        if not table:
            out.append(ZeroMatch(r.t, None, math.inf, False))
            continue
        best = min(table, key=lambda z: abs(z - r.t))
        d = abs(best - r.t)
        if d > tol:
            log.warning("minimum at %.10f has no published zero within %g", r.t, tol)
        out.append(ZeroMatch(r.t, best, d, d <= tol))
    return out
