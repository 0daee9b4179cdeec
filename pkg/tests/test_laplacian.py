import math

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from zetalap.errors import DomainError, SingularityError
from zetalap.laplacian import (
    ClassifiedPoint, GridFunction, Kind, chi, chi_closed_form, chi_dot, chi_limit, chi_n, chi_via_h,
    delta_r, g_closed_form, g_function, ghh, h_dot, h_function, mu, nu, nu_denominator, nu_limit,
    nu_n, nu_via_g, psi_fn,
)

from zetalap.verify import POLE_EXCLUSION

mpmath.mp.dps = 30

S0 = 1.98757823394093450820909737455


def mp_nu(u):
    """pi / D(u) from mpmath's zeta and polygamma (numerical differentiation)."""
    u = mpmath.mpf(u)
    z0, z1, z2 = (mpmath.zeta(u, 1, k) for k in range(3))
    lz2 = z2 / z0 - (z1 / z0) ** 2
    d = -lz2 - (mpmath.psi(1, u / 2) - mpmath.psi(1, (1 - u) / 2)) / 8
    return mpmath.pi / d


def mp_chi(u):
    return -mpmath.diff(mp_nu, mpmath.mpf(u))


def fd4(f, x, h=1e-3):
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


# --- real axis ------------------------------------------------------------------------


@pytest.mark.parametrize("u", [2, 4, 6, 10, 14, 0.5, -0.7, 2.6])
def test_nu_against_mpmath(u):
    # Euler-Maclaurin loses a few digits to cancellation for u < 0
    assert nu(u).real == pytest.approx(float(mp_nu(u)), rel=1e-11 if u > 0 else 1e-10)


@pytest.mark.parametrize("u", [2, 4, 8, 0.3, -1.3])
def test_chi_against_mpmath(u):
    ref = float(mp_chi(u))
    assert chi(u).real == pytest.approx(ref, rel=1e-9, abs=1e-12)


def test_chi_is_minus_nu_prime():
    for u in (0.2, 0.9, 2.5, 3.7, 9.0, -1.3):
        assert chi(u).real == pytest.approx(-fd4(lambda x: nu(x).real, u), rel=1e-7)


def test_chi_dot_against_finite_differences():
    for u in (0.2, 0.9, 2.5, 3.7, 9.0, 0.0, 1.0, -2.0):
        assert chi_dot(u).real == pytest.approx(fd4(lambda x: chi(x).real, u), rel=1e-6)


def test_chi_dot_limits_at_zero_and_one():
    assert chi_dot(0.0).real == pytest.approx(4 * math.pi, abs=1e-9)
    assert chi_dot(1.0).real == pytest.approx(4 * math.pi, abs=1e-9)


def test_denominator_jet_against_finite_differences():
    for u in (0.4, 2.5, 6.0):
        d0, d1, d2 = nu_denominator(u, order=2)
        assert d1 == pytest.approx(fd4(lambda x: nu_denominator(x, order=0)[0], u), rel=1e-7)
        assert d2 == pytest.approx(fd4(lambda x: nu_denominator(x, order=1)[1], u), rel=1e-7)


def test_two_routes_agree():
    # G and H evaluated off the critical line versus the real-axis reduction
    for u in (0.3, 2.0, 4.0, 6.5, -0.6):
        assert nu_via_g(u) == pytest.approx(nu(u), rel=1e-10)
        assert chi_via_h(u) == pytest.approx(chi(u), rel=1e-9, abs=1e-12)


def test_chi_closed_form_corrected_matches():
    for u in (2.0, 4.0, 0.3, 5.5):
        assert chi_closed_form(u).real == pytest.approx(chi(u).real, rel=1e-9)


def test_chi_closed_form_as_printed_disagrees():
    # kept for reference only: the printed grouping does not reproduce chi
    assert chi_closed_form(4.0, printed=True).real != pytest.approx(chi(4.0).real, rel=1e-3)


@pytest.mark.parametrize("u", [0, 1, 3, 5, 7, -2, -4])
def test_zero_ladder(u):
    assert nu(u) == 0
    assert chi(u) == 0
    for h in (1e-8, -1e-8):
        assert abs(nu(u + h)) < 1e-6
        assert abs(chi(u + h)) < 1e-6


def test_singularity_is_guarded():
    with pytest.raises(SingularityError):
        nu(S0)
    with pytest.raises(SingularityError):
        chi(1 - S0 + 1e-7)
    assert abs(chi(S0 + 1e-3)) > 1e3
    assert abs(chi(S0 - 1e-3)) > 1e3
    d_lo, d_hi = nu_denominator(1.9, order=0)[0], nu_denominator(2.0, order=0)[0]
    assert d_lo.real * d_hi.real < 0


def test_negative_nu_on_unit_interval():
    assert nu(0.5).real == pytest.approx(-0.83845615126394, rel=1e-12)
    for t in (0.1, 0.3, 0.5, 0.8):
        assert nu(t).real < 0


@given(st.floats(-1.0, 2.0))
def test_reflection(u):
    assume(min(abs(u - a) for a in (S0, 1 - S0)) > POLE_EXCLUSION)
    scale = max(1.0, abs(nu(u)))
    assert abs(nu(u) - nu(1 - u)) <= 1e-9 * scale
    assert abs(chi(u) + chi(1 - u)) <= 1e-9 * max(1.0, abs(chi(u)))


@given(st.floats(-1.4, 1.4))
def test_mu_even_psi_odd(t):
    assume(min(abs(t - a) for a in (S0 - 0.5, 0.5 - S0)) > POLE_EXCLUSION)
    assert mu(t) == pytest.approx(mu(-t), rel=1e-9, abs=1e-12)
    assert psi_fn(t) == pytest.approx(-psi_fn(-t), rel=1e-9, abs=1e-12)


def test_sequence_functions():
    for n in range(1, 8):
        assert nu_n(n, -0.5) == nu(2 * n).real
        assert chi_n(n, -0.5) == chi(2 * n).real
    assert nu_limit(0.5) == 1.0
    assert chi_limit(0.25) == pytest.approx(-4.0)


def test_large_index_shape():
    # (pi/8) nu_n approaches sin^2 on the unit interval
    gaps = []
    for n in (2, 5, 10, 20):
        gaps.append(max(abs(math.pi / 8 * nu_n(n, t) - nu_limit(t)) for t in [i / 40 for i in range(41)]))
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert nu(240).real == pytest.approx(8 / math.pi, rel=1e-2)


# --- critical line ----------------------------------------------------------------------


def mp_q(t):
    return mpmath.siegelz(t, derivative=1) / mpmath.siegelz(t)


@pytest.mark.parametrize("t", [3.0, 10.0, 17.0, 23.3])
def test_g_against_mpmath(t):
    qdot = mpmath.diff(mp_q, t)
    assert g_function(t).real == pytest.approx(float(-mpmath.pi / qdot), rel=1e-9)
    assert delta_r(t) == pytest.approx(complex(qdot / mpmath.pi), rel=1e-9)


def test_h_is_g_prime_and_hdot_is_h_prime():
    for t in (3.0, 10.0, 17.0, 23.3):
        g, h, hd = ghh(t)
        assert h.real == pytest.approx(fd4(lambda x: g_function(x).real, t), rel=1e-6)
        assert hd.real == pytest.approx(fd4(lambda x: h_function(x).real, t), rel=1e-6)
        assert h_dot(t) == hd


@pytest.mark.parametrize("t", [6.0, 12.0, 33.0])
def test_h_against_differences_of_g(t):
    h = h_function(t).real
    assert h == pytest.approx(fd4(lambda x: g_function(x).real, t), rel=1e-7)


def test_g_closed_form():
    for t in (5.0, 12.0, 19.5):
        assert g_closed_form(t) == pytest.approx(g_function(t), rel=1e-9)


def test_g_small_near_zero_and_positive_between():
    t1 = float(mpmath.zetazero(1).imag)
    assert abs(g_function(t1)) < 1e-12
    assert g_function(17.49).real > 0


def test_chi_on_the_zeta_zero():
    assert abs(chi(0.5 + 14.134725141j)) <= 1e-5


# --- small types ------------------------------------------------------------------------


def test_classified_point_checks_kind():
    ClassifiedPoint(1.0, Kind.ZETA_ZERO_MINIMUM, 0.0, 2.0)
    with pytest.raises(ValueError):
        ClassifiedPoint(1.0, Kind.MIDPOINT_MAXIMUM, 0.0, 2.0)


def test_grid_function():
    g = GridFunction.sample(lambda t: t * t, 0.0, 1.0, 5)
    assert g.ts == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert g.sup_norm() == 1.0
    with pytest.raises(ValueError):
        GridFunction(0.0, 0.1, (math.nan,))
    with pytest.raises(ValueError):
        GridFunction(0.0, 0.0, ())


def test_denominator_at_the_zeta_pole():
    # D itself is singular at u = 1; nu(1) is the removable limit 0
    with pytest.raises(DomainError):
        nu_denominator(1.0, order=0)
