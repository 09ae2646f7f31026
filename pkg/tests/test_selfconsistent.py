"""Root finding, stability classification, and the zero-field branch."""
import math

import pytest

from isingcusp import (ConjugateCoords, DomainError, ModelParams, beta_of_m,
                       s_of_m, solve, xi_of_m, zero_field_branch)

P = ModelParams()

M_STAR_1P2 = 0.65856966040575405      # positive root of m = tanh(1.2 m)
M_STAR_NEAR = 0.017318949386944285    # positive root at beta*Jz = 1.0001


def bisect_root(beta, jz, lo=1e-6, hi=0.999999, tol=1e-12):
    """Independent bisection for m = tanh(beta*jz*m), m > 0."""
    f = lambda m: m - math.tanh(beta * jz * m)
    assert f(lo) < 0 < f(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < tol:
            return mid
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_high_temperature_single_root():
    rs = solve(ConjugateCoords(0.5, 0.0), P)
    assert len(rs.roots) == 1
    r = rs.roots[0]
    assert r.m == 0.0 and r.stable
    assert rs.equilibrium.m == 0.0


def test_low_temperature_triple_root():
    rs = solve(ConjugateCoords(1.2, 0.0), P)
    assert len(rs.roots) == 3
    ms = sorted(r.m for r in rs.roots)
    assert ms[0] == pytest.approx(-M_STAR_1P2, rel=1e-12)
    assert ms[1] == pytest.approx(0.0, abs=1e-13)
    assert ms[2] == pytest.approx(M_STAR_1P2, rel=1e-12)
    by_m = {round(r.m, 6): r for r in rs.roots}
    assert not by_m[0.0].stable
    assert by_m[round(M_STAR_1P2, 6)].stable
    assert by_m[round(-M_STAR_1P2, 6)].stable
    # symmetric pair ties in psi; tie breaks toward positive m
    assert rs.equilibrium.m == pytest.approx(M_STAR_1P2, rel=1e-12)


def test_root_matches_independent_bisection():
    for beta in (1.05, 1.2, 1.7, 2.5):
        rs = solve(ConjugateCoords(beta, 0.0), P)
        m_found = max(r.m for r in rs.roots if r.stable)
        assert m_found == pytest.approx(bisect_root(beta, P.jz), abs=1e-10)


def test_curve_round_trip():
    # solving at (beta(m), xi(m)) must recover m as a stable root
    for m in (0.1, 0.3, 0.5, 0.8, -0.1, -0.3, -0.5, -0.8):
        c = ConjugateCoords(beta_of_m(m, P), xi_of_m(m, P))
        rs = solve(c, P)
        best = min((r for r in rs.roots if r.stable),
                   key=lambda r: abs(r.m - m))
        assert best.m == pytest.approx(m, abs=1e-10)


def test_root_count_transitions():
    for beta in (0.2, 0.6, 1.0):
        assert len(solve(ConjugateCoords(beta, 0.0), P).roots) == 1
    for beta in (1.000002, 1.5, 2.5):
        assert len(solve(ConjugateCoords(beta, 0.0), P).roots) == 3


def test_field_sign_symmetry():
    rs_plus = solve(ConjugateCoords(1.2, 0.05), P)
    rs_minus = solve(ConjugateCoords(1.2, -0.05), P)
    ms_plus = sorted(r.m for r in rs_plus.roots)
    ms_minus = sorted(-r.m for r in rs_minus.roots)
    for a, b in zip(ms_plus, ms_minus):
        assert a == pytest.approx(b, abs=1e-12)
    assert rs_plus.equilibrium.m == pytest.approx(-rs_minus.equilibrium.m,
                                                  abs=1e-12)


def test_equilibrium_is_attracting():
    # the selected root must attract the iteration m <- tanh(beta*jz*m - xi)
    for beta in (1.5, 2.0):
        rs = solve(ConjugateCoords(beta, 0.0), P)
        m = rs.equilibrium.m + 1e-3
        for _ in range(10):
            m = math.tanh(beta * P.jz * m)
        assert abs(m - rs.equilibrium.m) < 1e-6


def test_unstable_root_repels():
    rs = solve(ConjugateCoords(2.0, 0.0), P)
    unstable = next(r for r in rs.roots if not r.stable)
    m = unstable.m + 1e-3
    for _ in range(40):
        m = math.tanh(2.0 * P.jz * m)
    assert abs(m - unstable.m) > 0.1


def test_psi_ordering():
    rs = solve(ConjugateCoords(1.2, 0.0), P)
    sel = rs.equilibrium
    assert all(sel.psi >= r.psi - 1e-12 for r in rs.roots)


def test_solve_rejects_nonpositive_beta():
    with pytest.raises(DomainError):
        solve(ConjugateCoords(0.0, 0.0), P)
    with pytest.raises(DomainError):
        solve(ConjugateCoords(-1.0, 0.0), P)


def test_zero_field_branch_values():
    pts = zero_field_branch(0.5, 2.0, 61, P)
    assert len(pts) == 61
    for pt in pts:
        if pt.beta * P.jz <= 1.0:
            assert pt.m == 0.0
            assert pt.s == 0.0
        else:
            assert pt.m > 0.0
            assert pt.lam > P.k / P.jz
            assert pt.s == pytest.approx(s_of_m(pt.m, P), rel=1e-12)
        assert pt.lam == pytest.approx(P.k * pt.beta, rel=1e-15)
    at_12 = min(pts, key=lambda q: abs(q.beta - 1.2))
    assert at_12.beta == pytest.approx(1.2, abs=1e-12)
    assert at_12.m == pytest.approx(M_STAR_1P2, rel=1e-10)


def test_zero_field_just_above_threshold():
    pts = zero_field_branch(1.0001, 1.01, 2, P)
    # first grid point sits barely past the threshold; the tiny positive
    # root must be resolved, not rounded down to zero
    first = pts[0]
    assert first.beta == pytest.approx(1.0001, abs=1e-12)
    assert first.m == pytest.approx(M_STAR_NEAR, rel=1e-8)
    assert 0.0 < first.m < 0.02


def test_zero_field_branch_is_monotone():
    pts = zero_field_branch(1.05, 3.0, 40, P)
    ms = [pt.m for pt in pts]
    assert all(b > a for a, b in zip(ms, ms[1:]))
