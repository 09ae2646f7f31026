"""Susceptibility, specific heat, jacobian shrink rate, exponent fits."""
import math

import pytest

from isingcusp import (DomainError, ModelParams, beta_of_m, fit_exponents,
                       jacobian_norm, reduced_temperature, specific_heat,
                       susceptibility)

P = ModelParams()

CHI_HALF = 6.3017333343367247        # chi at m = 0.5, 50-digit reference
C_HALF = 0.90644785283023031        # specific heat at m = 0.5


def chi_implicit(m, p):
    """Susceptibility via implicit differentiation of m = tanh(b*jz*m - xi).

    dm/dxi at fixed beta: m' = sech^2(theta) (b jz m' - 1), so
    m' = -sech^2 / (1 - b jz sech^2); chi = b m'. On the curve
    sech^2(theta) = 1 - m^2. This route carries the opposite sign
    (response to +xi rather than to the field h = -xi/beta).
    """
    b = beta_of_m(m, p)
    sech2 = 1.0 - m * m
    return -b * sech2 / (1.0 - b * p.jz * sech2)


def test_chi_reference_value():
    assert susceptibility(0.5, P) == pytest.approx(CHI_HALF, rel=1e-12)


def test_chi_even_in_m():
    for m in (0.1, 0.35, 0.7):
        assert susceptibility(-m, P) == susceptibility(m, P)


def test_chi_agrees_with_implicit_differentiation():
    assert susceptibility(0.5, P) == pytest.approx(-chi_implicit(0.5, P),
                                                   rel=1e-13)
    assert susceptibility(0.005, P) == pytest.approx(-chi_implicit(0.005, P),
                                                     rel=1e-9)


def test_chi_curie_weiss_normalization():
    # chi * (T - Tc) -> -1/(k) as m -> 0 with Jz = k = 1
    m = 0.05
    t_minus_tc = 1.0 / (P.k * beta_of_m(m, P)) - 1.0 / P.k
    prod = susceptibility(m, P) * t_minus_tc
    assert abs(prod) == pytest.approx(1.0, abs=1e-2)


def test_chi_rejects_origin():
    with pytest.raises(DomainError):
        susceptibility(0.0, P)


def test_specific_heat_limit():
    assert specific_heat(1e-3, P) == pytest.approx(P.k, abs=1e-4)


def test_specific_heat_reference_value():
    assert specific_heat(0.5, P) == pytest.approx(C_HALF, rel=1e-8)


def c_closed(m, p):
    # C = k (b jz)^2 m^4 / (2 [m^2/(1-m^2) + log(1-m^2)])
    bjz = beta_of_m(m, p) * p.jz
    y = m * m
    denom = y / (1.0 - y) + math.log1p(-y)
    return p.k * bjz * bjz * y * y / (2.0 * denom)


def test_specific_heat_closed_form_cross_check():
    for m in (0.3, 0.5, 0.8):
        assert specific_heat(m, P) == pytest.approx(c_closed(m, P), rel=1e-7)


def test_specific_heat_even():
    assert specific_heat(-0.5, P) == specific_heat(0.5, P)


def test_reduced_temperature_sign_and_range():
    # ordered side sits below Tc, so t < 0 and t -> 0 as m -> 0
    ts = [reduced_temperature(m, P) for m in (0.01, 0.1, 0.5, 0.9)]
    assert all(t < 0 for t in ts)
    assert all(abs(a) < abs(b) for a, b in zip(ts, ts[1:]))
    assert reduced_temperature(0.01, P) == pytest.approx(-1e-4 / 2, rel=1e-2)


def test_jacobian_norm_values():
    # |(dbeta/dm, dxi/dm)| ~ m * sqrt(1 + 1/(jz^2)) for small m
    n3 = jacobian_norm(1e-3, P)
    assert n3 == pytest.approx(1e-3, rel=0.05)
    n2 = jacobian_norm(1e-2, P)
    assert n2 / n3 == pytest.approx(10.0, rel=0.05)


def test_jacobian_norm_shrinks_monotonically():
    import numpy as np
    ms = np.geomspace(1e-4, 1e-1, 25)
    norms = [jacobian_norm(float(m), P) for m in ms]
    assert all(b > a for a, b in zip(norms, norms[1:]))


def test_fit_exponents_window():
    rep = fit_exponents(P, 1e-3, 1e-2, 20)
    assert rep.delta.value == pytest.approx(3.0, abs=0.01)
    assert rep.beta_exp.value == pytest.approx(0.5, abs=0.005)
    assert rep.gamma.value == pytest.approx(1.0, abs=0.02)
    assert rep.alpha.flag
    assert rep.alpha.max_deviation < 1e-3
    for entry in (rep.delta, rep.beta_exp, rep.gamma):
        assert entry.residual < 1e-2
        assert entry.window == (1e-3, 1e-2)


def test_fit_rejects_bad_windows():
    with pytest.raises(DomainError):
        fit_exponents(P, 1e-2, 1e-3, 20)     # reversed
    with pytest.raises(DomainError):
        fit_exponents(P, 0.0, 1e-2, 20)      # zero lower edge
    with pytest.raises(DomainError):
        fit_exponents(P, 1e-3, 1e-2, 3)      # too few points
    with pytest.raises(DomainError):
        fit_exponents(P, 0.01, 0.05, 20)     # straddles the series seam


def test_series_fidelity_small_m():
    # the truncated expansions must track the closed forms tightly
    from isingcusp import xi_of_m
    m = 1e-2
    bjz = beta_of_m(m, P) * P.jz
    assert abs(bjz - (1 + m**2 / 2 + m**4 / 3)) < 1e-11
    assert abs(xi_of_m(m, P) - (m**3 / 6 + 2 * m**5 / 15)) < 1e-13
