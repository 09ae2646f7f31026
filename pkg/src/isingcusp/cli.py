"""Command line interface.

Subcommands: curve, surface, solve, exponents, verify, zero-field,
idealgas. Data emitters honor --format csv|json and --output; reports
print plain text. Exit codes: 0 success, 1 domain or check failure,
2 usage or size error. Identical flags always produce identical bytes.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import criticality, idealgas, verify
from .curve import sample_curve
from .model import ConjugateCoords, DomainError, ModelParams, SizeError
from .selfconsistent import solve, zero_field_branch
from .serialize import DIVERGENT, emit, render
from .surface import surface_grid


def _add_model_flags(sp):
    sp.add_argument("--jz", type=float, default=1.0, help="coupling product J*z (default 1)")
    sp.add_argument("--k", type=float, default=1.0, help="Boltzmann constant (default 1)")
    sp.add_argument("--n", type=int, default=12, help="oracle site count (default 12)")
    sp.add_argument("--seed", type=int, default=0, help="seed for randomized grids (default 0)")


def _add_output_flags(sp):
    sp.add_argument("--format", choices=("csv", "json"), default="csv",
                    help="output format (default csv)")
    sp.add_argument("--output", default="-", help="output path, - for stdout (default -)")


def _params(args) -> ModelParams:
    return ModelParams(j=args.jz, z=1, k=args.k, n=args.n)


def cmd_curve(args) -> int:
    p = _params(args)
    samples = sample_curve(args.m_min, args.m_max, args.samples, args.spacing, p)
    header = ["m", "beta", "xi", "T", "h", "u", "s", "chi", "c"]
    rows = [[s.m, s.beta, s.xi, s.t, s.h, s.u, s.s,
             DIVERGENT if s.chi is None else s.chi, s.c] for s in samples]
    emit(render(args.format, header, rows), args.output)
    return 0


def cmd_surface(args) -> int:
    p = _params(args)
    cells = surface_grid((args.u_min, args.u_max), (args.m_min, args.m_max),
                         args.samples, args.samples, p)
    header = ["U", "M", "S", "valid"]
    rows = [[c.u, c.m, c.s, 1 if c.valid else 0] for c in cells]
    emit(render(args.format, header, rows), args.output)
    return 0


def cmd_solve(args) -> int:
    p = _params(args)
    rs = solve(ConjugateCoords(beta=args.beta, xi=args.xi), p)
    header = ["m", "stable", "psi", "selected"]
    rows = [[r.m, 1 if r.stable else 0, r.psi, 1 if i == rs.selected else 0]
            for i, r in enumerate(rs.roots)]
    emit(render(args.format, header, rows), args.output)
    return 0


def cmd_exponents(args) -> int:
    p = _params(args)
    rep = criticality.fit_exponents(p, args.m_min, args.m_max, args.samples)
    header = ["name", "value", "target", "window_min", "window_max", "residual"]
    rows = [
        ["delta", rep.delta.value, rep.delta.target,
         rep.delta.window[0], rep.delta.window[1], rep.delta.residual],
        ["beta", rep.beta_exp.value, rep.beta_exp.target,
         rep.beta_exp.window[0], rep.beta_exp.window[1], rep.beta_exp.residual],
        ["gamma", rep.gamma.value, rep.gamma.target,
         rep.gamma.window[0], rep.gamma.window[1], rep.gamma.residual],
        ["alpha", rep.alpha.max_deviation, rep.alpha.target,
         rep.alpha.window[0], rep.alpha.window[1], 0.0],
    ]
    emit(render(args.format, header, rows), args.output)
    return 0


def cmd_zero_field(args) -> int:
    p = _params(args)
    points = zero_field_branch(args.beta_min, args.beta_max, args.samples, p)
    header = ["beta", "m", "s", "lambda"]
    rows = [[pt.beta, pt.m, pt.s, pt.lam] for pt in points]
    emit(render(args.format, header, rows), args.output)
    return 0


def cmd_verify(args) -> int:
    p = _params(args)
    results = verify.run_all(p, seed=args.seed)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results]
    n_pass = sum(r.passed for r in results)
    lines.append(f"{n_pass}/{len(results)} checks passed")
    emit("\n".join(lines) + "\n", args.output)
    return 0 if n_pass == len(results) else 1


def cmd_idealgas(args) -> int:
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for _ in range(100):
        g = idealgas.GasState(u=float(rng.uniform(0.1, 10.0)),
                              v=float(rng.uniform(0.1, 10.0)),
                              r=float(rng.uniform(0.5, 3.0)))
        worst = max(worst, abs(idealgas.gas_hj_residual(g)))
        t, pressure = idealgas.gas_recover_eos(g)
        worst = max(worst, abs(g.u - 1.5 * g.r * t) / g.u,
                    abs(pressure * g.v - g.r * t) / (g.r * t))
    ok = worst < 1e-13
    text = (f"{'PASS' if ok else 'FAIL'} ideal-gas: max residual {worst:.3e} "
            "over 100 random states\n")
    emit(text, args.output)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isingcusp",
        description="Mean-field Ising entropy surface, solution curves, "
                    "exact finite-N oracle, and critical exponents.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("curve", help="sample the parametric solution curve")
    _add_model_flags(sp)
    _add_output_flags(sp)
    sp.add_argument("--m-min", type=float, default=-0.95)
    sp.add_argument("--m-max", type=float, default=0.95)
    sp.add_argument("--samples", type=int, default=201)
    sp.add_argument("--spacing", choices=("linear", "log"), default="linear")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("surface", help="tabulate the entropy over a (U, M) grid")
    _add_model_flags(sp)
    _add_output_flags(sp)
    sp.add_argument("--u-min", type=float, default=-1.0)
    sp.add_argument("--u-max", type=float, default=1.0)
    sp.add_argument("--m-min", type=float, default=-2.0)
    sp.add_argument("--m-max", type=float, default=2.0)
    sp.add_argument("--samples", type=int, default=33, help="points per axis")
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("solve", help="roots of the self-consistent equation")
    _add_model_flags(sp)
    _add_output_flags(sp)
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--xi", type=float, default=0.0)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("exponents", help="fit the four critical exponents")
    _add_model_flags(sp)
    _add_output_flags(sp)
    sp.add_argument("--m-min", type=float, default=1e-3)
    sp.add_argument("--m-max", type=float, default=1e-2)
    sp.add_argument("--samples", type=int, default=20)
    sp.set_defaults(func=cmd_exponents)

    sp = sub.add_parser("verify", help="run the full verification suite")
    _add_model_flags(sp)
    sp.add_argument("--output", default="-", help="report path, - for stdout")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("zero-field", help="h=0 solution branch over a beta range")
    _add_model_flags(sp)
    _add_output_flags(sp)
    sp.add_argument("--beta-min", type=float, default=0.5)
    sp.add_argument("--beta-max", type=float, default=2.0)
    sp.add_argument("--samples", type=int, default=61)
    sp.set_defaults(func=cmd_zero_field)

    sp = sub.add_parser("idealgas", help="ideal-gas residual check report")
    _add_model_flags(sp)
    sp.add_argument("--output", default="-", help="report path, - for stdout")
    sp.set_defaults(func=cmd_idealgas)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
