import cmath
import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from zetalap.errors import ConfigurationError, DomainError, PoleError
from zetalap.specfun import (
    DEFAULT, MAX_IMAG, Jet, Jet3, PrecisionConfig, bernoulli, bernoulli_exact, digamma, log_gamma,
    polygamma, zeta, zeta_eta, zeta_jet,
)

mpmath.mp.dps = 30


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def akiyama_tanigawa(n):
    """B_0..B_n with the B_1 = +1/2 convention (independent of the package table)."""
    out, a = [], []
    for m in range(n + 1):
        a.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


# --- Bernoulli -------------------------------------------------------------------


def test_bernoulli_matches_recurrence_oracle():
    oracle = akiyama_tanigawa(60)
    for k in range(0, 61, 2):
        assert bernoulli_exact(k) == oracle[k]
        assert bernoulli(k) == float(oracle[k])


def test_bernoulli_frozen_values():
    assert bernoulli_exact(2) == Fraction(1, 6)
    assert bernoulli_exact(4) == Fraction(-1, 30)
    assert bernoulli_exact(12) == Fraction(-691, 2730)
    assert bernoulli(60) == pytest.approx(float(mpmath.bernoulli(60)), rel=1e-15)


@pytest.mark.parametrize("k", [-2, 1, 3, 62])
def test_bernoulli_rejects_bad_index(k):
    with pytest.raises(DomainError):
        bernoulli(k)


# --- jets --------------------------------------------------------------------------

coef = st.complex_numbers(min_magnitude=0.1, max_magnitude=10, allow_nan=False, allow_infinity=False)


@given(st.lists(coef, min_size=4, max_size=4), st.lists(coef, min_size=4, max_size=4))
def test_jet_product_quotient_roundtrip(a, b):
    ja, jb = Jet(a), Jet(b)
    back = (ja * jb) / jb
    for x, y in zip(back.c, ja.c):
        assert abs(x - y) <= 1e-9 * (1 + abs(y)) * max(1.0, max(abs(c) for c in b) / abs(b[0])) ** 4


@given(st.lists(coef, min_size=5, max_size=5))
def test_jet_log_exp_inverse(a):
    j = Jet(a)
    back = j.log().exp()
    scale = max(1.0, max(abs(c) for c in a) / abs(a[0])) ** 5
    for x, y in zip(back.c, j.c):
        assert abs(x - y) <= 1e-9 * scale * (1 + abs(y))


def test_jet_derivative_convention():
    j = Jet3(1.0, 2.0, 6.0, 24.0)
    assert j.derivatives() == (1.0, 2.0, 6.0, 24.0)
    assert j.c == (1.0, 2.0, 3.0, 4.0)
    x = Jet.variable(0.5, order=3)
    cube = x * x * x
    assert cube.derivatives() == pytest.approx((0.125, 0.75, 3.0, 6.0))


def test_jet_division_by_zero_raises():
    with pytest.raises(PoleError):
        Jet3(1, 1, 1, 1) / Jet3(0, 1, 0, 0)
    with pytest.raises(PoleError):
        Jet3(0, 1, 0, 0).log()


def test_jet_order_mismatch():
    with pytest.raises(ValueError):
        Jet([1, 2]) + Jet([1, 2, 3])


# --- zeta ----------------------------------------------------------------------------


@pytest.mark.parametrize(
    "s, expected",
    [
        (2, math.pi**2 / 6),
        (4, math.pi**4 / 90),
        (0, -0.5),
        (-1, -1 / 12),
        (0.5, -1.4603545088095868129),
    ],
)
def test_zeta_known_values(s, expected):
    assert zeta(s).real == pytest.approx(expected, rel=1e-12)


def test_zeta_zero_on_critical_line():
    t1 = float(mpmath.zetazero(1).imag)
    assert abs(zeta(complex(0.5, t1))) < 1e-12


def _mp(x):
    return complex(x)


@pytest.mark.parametrize(
    "s", [0.5 + 14.1j, 2 - 3j, 0.3 + 77.7j, -0.8 + 0.2j, 1.5 + 150j, 0.75 - 199j, 3.0 + 0j]
)
def test_zeta_jet_against_mpmath(s):
    jet = zeta_jet(s, order=4)
    for k in range(5):
        ref = _mp(mpmath.zeta(s, 1, k))
        assert abs(jet.derivative(k) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_zeta_jet_consistent_with_finite_differences():
    # each derivative against a 4th-order central difference of the one below
    rng = random.Random(1)
    h = 1e-3
    for _ in range(20):
        s = complex(rng.uniform(-0.5, 3), rng.uniform(-80, 80))
        if abs(s - 1) < 0.2:
            continue
        for k in range(1, 4):
            f = lambda x: zeta_jet(x, order=k).derivative(k - 1)  # noqa: E731
            fd = (-f(s + 2 * h) + 8 * f(s + h) - 8 * f(s - h) + f(s - 2 * h)) / (12 * h)
            exact = zeta_jet(s, order=k).derivative(k)
            assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))


def test_euler_maclaurin_against_eta_route():
    rng = random.Random(20240101)
    for _ in range(50):
        s = complex(rng.uniform(0.05, 4.0), rng.uniform(-100, 100))
        if abs(s - 1) < 0.1 or abs(1 - 2 ** (1 - s)) < 1e-3:
            continue
        a, b = zeta(s), zeta_eta(s)
        assert abs(a - b) <= 1e-10 * max(1.0, abs(b))


def test_eta_route_against_mpmath():
    for s in (0.5 + 21.02j, 2.5 - 40j, 0.1 + 3j):
        assert rel(zeta_eta(s), _mp(mpmath.zeta(s))) < 1e-12


@given(st.floats(-1.0, 3.0), st.floats(-150, 150))
def test_zeta_conjugate_symmetry(x, y):
    s = complex(x, y)
    assume(abs(s - 1) > 1e-3)
    a, b = zeta(s), zeta(s.conjugate()).conjugate()
    assert abs(a - b) <= 1e-13 * max(1.0, abs(a))


def test_zeta_errors():
    with pytest.raises(PoleError):
        zeta(1)
    with pytest.raises(DomainError):
        zeta(0.5 + 1j * (MAX_IMAG + 1))
    with pytest.raises(DomainError):
        zeta_eta(-1 + 2j)


# --- gamma family ------------------------------------------------------------------------


@pytest.mark.parametrize("z", [0.25 + 7j, 0.25 - 50j, 3.3, 0.01 + 0.01j, -2.5 + 0.3j, 0.6 + 120j])
def test_log_gamma_against_mpmath(z):
    assert abs(log_gamma(z) - _mp(mpmath.loggamma(z))) < 1e-12 * max(1.0, abs(log_gamma(z)))


def test_log_gamma_real_for_positive_reals():
    v = log_gamma(4.5)
    assert v.imag == 0
    assert v.real == pytest.approx(math.lgamma(4.5), rel=1e-14)


@pytest.mark.parametrize("m", [0, 1, 2, 3, 5])
@pytest.mark.parametrize("z", [0.25 + 7j, 0.1 - 2j, 5.0, -1.5 + 0j, 0.75 + 60j])
def test_polygamma_against_mpmath(m, z):
    ref = _mp(mpmath.psi(m, z))
    assert abs(polygamma(m, z) - ref) <= 1e-12 * max(1.0, abs(ref))


zs = st.complex_numbers(max_magnitude=30, allow_nan=False, allow_infinity=False)


@given(st.integers(0, 4), zs)
def test_polygamma_recurrence(m, z):
    # psi^(m)(z + 1) = psi^(m)(z) + (-1)^m m! / z^(m+1)
    assume(abs(z) > 0.3 and min(abs(z + k) for k in range(40)) > 0.05)
    lhs = polygamma(m, z + 1)
    rhs = polygamma(m, z) + (-1) ** m * math.factorial(m) / z ** (m + 1)
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs), abs(rhs))


@given(zs)
def test_log_gamma_functional_equation(z):
    assume(abs(z) > 0.1 and min(abs(z + k) for k in range(40)) > 0.05)
    d = log_gamma(z + 1) - log_gamma(z) - cmath.log(z)
    # equality modulo 2 pi i
    k = round(d.imag / (2 * math.pi))
    assert abs(d - 2j * math.pi * k) <= 1e-10 * max(1.0, abs(log_gamma(z)))


def test_digamma_special_values():
    euler_gamma = 0.57721566490153286061
    assert digamma(1).real == pytest.approx(-euler_gamma, rel=1e-14)
    assert polygamma(1, 1).real == pytest.approx(math.pi**2 / 6, rel=1e-14)


@pytest.mark.parametrize("z", [0, -1, -7])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        polygamma(1, z)
    with pytest.raises(PoleError):
        log_gamma(z)


# --- precision config ------------------------------------------------------------------------


def test_precision_policy():
    assert DEFAULT.terms_for(0.5 + 0j) == 24
    assert DEFAULT.terms_for(0.5 + 100j) == 138
    assert PrecisionConfig(euler_maclaurin_terms=40).terms_for(0.5 + 100j) == 40


@pytest.mark.parametrize(
    "kwargs",
    [dict(tail_terms=0), dict(tail_terms=31), dict(euler_maclaurin_terms=10), dict(target_rel_error=1e-15)],
)
def test_precision_validation(kwargs):
    with pytest.raises(ConfigurationError):
        PrecisionConfig(**kwargs)


def test_refined_settings_agree():
    fine = PrecisionConfig(euler_maclaurin_terms=80, tail_terms=20)
    for s in (0.5 + 30j, 2 + 1j, -0.5 + 5j):
        assert abs(zeta(s, fine) - zeta(s)) <= 1e-12 * max(1.0, abs(zeta(s)))
