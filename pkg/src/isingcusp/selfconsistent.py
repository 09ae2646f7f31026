"""Roots of the self-consistent equation m = tanh(beta Jz m - xi).

All roots on (-1, 1) are located by sign-change bracketing and polished
by bisection. Stability is the fixed-point criterion: the map derivative
beta*Jz*sech^2(beta Jz m - xi) must be below one. Among stable roots the
equilibrium maximizes the grand Massieu function per site.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curve import s_of_m
from .model import ConjugateCoords, DomainError, ModelParams

BISECT_TOL = 1e-14
# Stable roots whose Massieu values agree this closely count as degenerate.
PSI_TIE = 1e-12


def _log2cosh(x: float) -> float:
    # log(2 cosh x) without overflow
    return float(np.logaddexp(x, -x))


def massieu_per_site(m: float, c: ConjugateCoords, p: ModelParams) -> float:
    """Grand Massieu function over kN at magnetization parameter m."""
    theta = c.beta * p.jz * m - c.xi
    return -0.5 * c.beta * p.jz * m * m + _log2cosh(theta)


@dataclass(frozen=True)
class Root:
    m: float
    stable: bool
    psi: float


@dataclass(frozen=True)
class RootSet:
    """Roots sorted ascending in m; selected indexes the equilibrium root."""

    roots: tuple[Root, ...]
    selected: int

    @property
    def equilibrium(self) -> Root:
        return self.roots[self.selected]


def _bisect(f, lo: float, hi: float) -> float:
    flo = f(lo)
    if flo == 0.0:
        return lo
    while hi - lo > BISECT_TOL:
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _scan(f, segments: int):
    grid = np.linspace(-1.0, 1.0, segments + 1)
    vals = np.array([f(float(g)) for g in grid])
    roots = []
    for i in range(segments):
        if vals[i] == 0.0:
            roots.append(float(grid[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            roots.append(_bisect(f, float(grid[i]), float(grid[i + 1])))
    if vals[-1] == 0.0:
        roots.append(float(grid[-1]))
    return roots


def solve(c: ConjugateCoords, p: ModelParams = ModelParams()) -> RootSet:
    """Find every root of m - tanh(beta Jz m - xi) and pick the equilibrium."""
    if c.beta <= 0:
        raise DomainError(f"solver needs beta > 0, got {c.beta}")
    bjz = c.beta * p.jz

    def f(m: float) -> float:
        return m - math.tanh(bjz * m - c.xi)

    def is_stable(m: float) -> bool:
        return bjz / math.cosh(bjz * m - c.xi) ** 2 < 1.0

    roots = _scan(f, 64)
    # refinement pass for near-degenerate brackets; a scan that catches no
    # attracting root at all has certainly skipped over brackets too
    gaps_small = len(roots) > 1 and min(np.diff(sorted(roots))) < 1.0 / 64.0
    if gaps_small or len(roots) not in (1, 3) or not any(is_stable(m) for m in roots):
        roots = _scan(f, 1024)
    if len(roots) > 3:
        raise RuntimeError(f"bracketing found {len(roots)} roots, expected at most 3")

    labeled = []
    for m in sorted(roots):
        labeled.append(Root(m=m, stable=is_stable(m), psi=massieu_per_site(m, c, p)))

    stable_idx = [i for i, r in enumerate(labeled) if r.stable]
    if stable_idx:
        best_psi = max(labeled[i].psi for i in stable_idx)
        # symmetric pair at xi=0 is degenerate; tie breaks toward positive m
        tied = [i for i in stable_idx if best_psi - labeled[i].psi < PSI_TIE]
        selected = max(tied, key=lambda i: labeled[i].m)
    else:
        selected = int(np.argmax([r.psi for r in labeled]))
    return RootSet(roots=tuple(labeled), selected=selected)


@dataclass(frozen=True)
class ZeroFieldPoint:
    beta: float
    m: float
    s: float
    lam: float


def zero_field_branch(beta_min: float, beta_max: float, n: int,
                      p: ModelParams = ModelParams()):
    """The h=0 solution family over a beta grid.

    Below the threshold beta*Jz = 1 the only root is m=0 with S=0; above
    it the positive stable root is reported together with lambda = k*beta,
    which then exceeds k/Jz.
    """
    if beta_min <= 0 or beta_max <= 0:
        raise DomainError("beta range must be positive")
    if not beta_min < beta_max:
        raise DomainError(f"need beta_min < beta_max, got [{beta_min}, {beta_max}]")
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n}")
    points = []
    for beta in np.linspace(beta_min, beta_max, n):
        beta = float(beta)
        lam = p.k * beta
        if beta * p.jz <= 1.0:
            points.append(ZeroFieldPoint(beta=beta, m=0.0, s=0.0, lam=lam))
        else:
            rs = solve(ConjugateCoords(beta=beta, xi=0.0), p)
            stable_ms = [r.m for r in rs.roots if r.stable and r.m > 0]
            # exponentially close to threshold the outer roots sit below
            # scan resolution; the branch value is indistinguishable from 0
            m_plus = max(stable_ms) if stable_ms else 0.0
            assert lam > p.k / p.jz
            points.append(ZeroFieldPoint(beta=beta, m=m_plus, s=s_of_m(m_plus, p), lam=lam))
    return points
