"""Batch command-line interface.

Subcommands (coordinates are 1-based on the command line):

  hermite-eval      evaluate h_n^alpha on a grid or point file -> CSV
  heat-kernel       heat-kernel slices (with per-parity breakdown) -> CSV
  heat-apply        apply e^{-t L} to expansion coefficients -> JSON
  riesz-apply       apply R_j to expansion coefficients -> JSON
  riesz-kernel      Riesz kernel on a pair file (per-parity breakdown) -> CSV
  pairing-check     spectral vs double-integral dual pairing -> JSON
  verify            run a named check suite from a config -> JSON, exit 1 on FAIL
  scan-growth       Calderon-Zygmund growth-estimate scan -> JSON (seeded)
  scan-smoothness   gradient-estimate scan -> JSON (seeded)

Outputs are deterministic for fixed inputs and seeds (the verify report
keeps wall times in a separate "timings" map).  CSV files start with a
versioned header comment naming the columns.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .estimates import growth_scan, smoothness_scan
from .heat import all_parities, heat_apply_spectral, heat_kernel, heat_kernel_component
from .hermite import AlphaParams, MultiIndex, hermite_fn
from .quadrature import SpectralCoeffs
from .riesz import (IntervalBump, KernelConfig, dual_pairing_check,
                    riesz_apply_spectral, riesz_kernel_components)
from .quadrature import default_rule
from .suite import parse_config, run_suite

CSV_VERSION = "v1"


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _alpha(ns) -> AlphaParams:
    try:
        return AlphaParams(ns.alpha)
    except ValueError as e:
        raise SystemExit(f"error: {e}")


def _kernel_config(ns) -> KernelConfig:
    return KernelConfig(zeta_points=ns.zeta_points, zeta_grading=ns.zeta_grading,
                        s_points_per_dim=ns.s_points, s_method=ns.s_method)


def _add_kernel_flags(p: argparse.ArgumentParser):
    p.add_argument("--zeta-points", type=int, default=192, dest="zeta_points")
    p.add_argument("--zeta-grading", type=float, default=3.0, dest="zeta_grading")
    p.add_argument("--s-points", type=int, default=48, dest="s_points")
    p.add_argument("--s-method", choices=["gauss-jacobi", "exact"],
                   default="gauss-jacobi", dest="s_method")


def _read_pairs(path: str, d: int) -> tuple[np.ndarray, np.ndarray]:
    data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    if data.shape[1] != 2 * d:
        raise SystemExit(f"error: pair file must have {2*d} columns (x1..x{d},y1..y{d})")
    return data[:, :d], data[:, d:]


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_coeffs(path: str) -> SpectralCoeffs:
    with open(path) as fh:
        doc = json.load(fh)
    alpha = AlphaParams(tuple(doc["alpha"]))
    coeffs = {}
    for key, val in doc["coeffs"].items():
        n = tuple(int(tok) for tok in key.split(","))
        if len(n) != alpha.dim:
            raise SystemExit(f"error: coefficient index {key!r} does not match alpha dimension")
        coeffs[n] = float(val)
    return SpectralCoeffs(coeffs, alpha)


def _dump_coeffs(c: SpectralCoeffs) -> str:
    doc = {
        "alpha": list(c.alpha.alpha),
        "coeffs": {",".join(str(k) for k in n): v for n, v in sorted(c.coeffs.items())},
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _eps_label(eps) -> str:
    return "".join(str(int(e)) for e in eps)


# --- subcommand implementations ---------------------------------------------

def _cmd_hermite_eval(ns) -> int:
    al = _alpha(ns)
    n = MultiIndex(ns.n)
    if n.dim != al.dim:
        raise SystemExit("error: --n and --alpha dimensions differ")
    if ns.points:
        pts = np.loadtxt(ns.points, delimiter=",", comments="#", ndmin=2)
        if pts.shape[1] != al.dim:
            raise SystemExit(f"error: point file must have {al.dim} columns")
    else:
        lo, hi, cnt = ns.grid
        axis = np.linspace(lo, hi, int(cnt))
        grids = np.meshgrid(*([axis] * al.dim), indexing="ij")
        pts = np.stack([g.ravel() for g in grids], axis=-1)
    vals = hermite_fn(n, al, pts)
    d = al.dim
    lines = [f"# dunklosc hermite-eval {CSV_VERSION}",
             f"# alpha={list(al.alpha)} n={list(n.entries)}",
             ",".join(f"x{i+1}" for i in range(d)) + ",h"]
    for row, v in zip(pts, vals):
        lines.append(",".join(f"{c:.17g}" for c in row) + f",{v:.17g}")
    _write("\n".join(lines) + "\n", ns.output)
    return 0


def _cmd_heat_kernel(ns) -> int:
    al = _alpha(ns)
    d = al.dim
    X, Y = _read_pairs(ns.pairs, d)
    eps_list = all_parities(d)
    cols = ["t"] + [f"x{i+1}" for i in range(d)] + [f"y{i+1}" for i in range(d)] + ["G"]
    cols += [f"G_eps{_eps_label(e)}" for e in eps_list]
    lines = [f"# dunklosc heat-kernel {CSV_VERSION}", f"# alpha={list(al.alpha)}",
             ",".join(cols)]
    for t in ns.t:
        if t <= 0:
            raise SystemExit("error: --t values must be positive")
        total = heat_kernel(al, t, X, Y)
        comps = [heat_kernel_component(al, e, t, X, Y) for e in eps_list]
        for p in range(X.shape[0]):
            row = [t, *X[p], *Y[p], total[p], *[c[p] for c in comps]]
            lines.append(",".join(f"{v:.17g}" for v in row))
    _write("\n".join(lines) + "\n", ns.output)
    return 0


def _cmd_heat_apply(ns) -> int:
    c = _load_coeffs(ns.coeffs)
    if ns.t < 0:
        raise SystemExit("error: --t must be >= 0")
    _write(_dump_coeffs(heat_apply_spectral(c, ns.t)), ns.output)
    return 0


def _cmd_riesz_apply(ns) -> int:
    c = _load_coeffs(ns.coeffs)
    j = ns.j - 1
    if not 0 <= j < c.dim:
        raise SystemExit(f"error: --j must be in 1..{c.dim}")
    _write(_dump_coeffs(riesz_apply_spectral(c, j)), ns.output)
    return 0


def _cmd_riesz_kernel(ns) -> int:
    al = _alpha(ns)
    d = al.dim
    j = ns.j - 1
    if not 0 <= j < d:
        raise SystemExit(f"error: --j must be in 1..{d}")
    X, Y = _read_pairs(ns.pairs, d)
    cfg = _kernel_config(ns)
    comps = riesz_kernel_components(al, j, X, Y, cfg)
    eps_list = all_parities(d)
    total = sum(comps.values())
    cols = ([f"x{i+1}" for i in range(d)] + [f"y{i+1}" for i in range(d)] + ["R"]
            + [f"R_eps{_eps_label(e)}" for e in eps_list])
    lines = [f"# dunklosc riesz-kernel {CSV_VERSION}",
             f"# alpha={list(al.alpha)} j={ns.j} zeta_points={cfg.zeta_points} "
             f"s_points={cfg.s_points_per_dim} s_method={cfg.s_method}",
             ",".join(cols)]
    for p in range(X.shape[0]):
        row = [*X[p], *Y[p], total[p], *[comps[e][p] for e in eps_list]]
        lines.append(",".join(f"{v:.17g}" for v in row))
    _write("\n".join(lines) + "\n", ns.output)
    return 0


def _cmd_pairing_check(ns) -> int:
    al = _alpha(ns)
    if al.dim != 1:
        raise SystemExit("error: pairing-check is one-dimensional")
    f = IntervalBump(*ns.f_support)
    g = IntervalBump(*ns.g_support)
    if f.overlaps(g):
        raise SystemExit("error: bump supports overlap")
    rule = default_rule(al, ns.quad_points)
    cfg = _kernel_config(ns)
    resid, spectral, integral = dual_pairing_check(
        f, g, ns.j - 1, al, rule, cfg, max_degree=ns.max_degree)
    rel = resid / max(abs(spectral), 1e-300)
    report = {
        "alpha": list(al.alpha), "j": ns.j,
        "f_support": list(ns.f_support), "g_support": list(ns.g_support),
        "separation": f.separation(g),
        "spectral": spectral, "integral": integral,
        "residual": resid, "relative_residual": rel,
        "passed": rel <= 1e-3,
    }
    _write(json.dumps(report, sort_keys=True, indent=2) + "\n", ns.output)
    return 0 if report["passed"] else 1


def _cmd_verify(ns) -> int:
    try:
        with open(ns.config) as fh:
            cfg = parse_config(fh.read())
    except (OSError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    status, report = run_suite(cfg, ns.suite)
    out = ns.output or cfg.output
    _write(json.dumps(report, sort_keys=True, indent=2) + "\n", out)
    for check in report["checks"]:
        line = "PASS" if check["passed"] else "FAIL"
        sys.stderr.write(f"{line} {check['name']} residual={check['residual']:.3g}\n")
    return status


def _cmd_scan(ns, which: str) -> int:
    al = _alpha(ns)
    j = ns.j - 1
    if not 0 <= j < al.dim:
        raise SystemExit(f"error: --j must be in 1..{al.dim}")
    cfg = KernelConfig(zeta_points=ns.zeta_points, zeta_grading=ns.zeta_grading,
                       s_points_per_dim=ns.s_points, s_method="exact")
    fn = growth_scan if which == "growth" else smoothness_scan
    rep = fn(al, j, n_pairs=ns.pairs, seed=ns.seed, cfg=cfg,
             positive_orthant=ns.positive_orthant)
    doc = rep.to_dict()
    doc["scan"] = which
    _write(json.dumps(doc, sort_keys=True, indent=2) + "\n", ns.output)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="dunklosc",
                                  description="Dunkl harmonic oscillator toolkit")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, alpha=True):
        if alpha:
            p.add_argument("--alpha", type=_parse_floats, required=True,
                           help="comma-separated alpha vector, each >= -0.5")
        p.add_argument("--output", "-o", default=None, help="output path (default stdout)")

    p = sub.add_parser("hermite-eval", help="evaluate a generalized Hermite function")
    common(p)
    p.add_argument("--n", type=_parse_ints, required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--grid", type=_parse_floats, metavar="LO,HI,COUNT")
    grp.add_argument("--points", help="CSV file of evaluation points")
    p.set_defaults(fn=_cmd_hermite_eval)

    p = sub.add_parser("heat-kernel", help="heat kernel slices as CSV")
    common(p)
    p.add_argument("--t", type=_parse_floats, required=True)
    p.add_argument("--pairs", required=True, help="CSV with columns x1..xd,y1..yd")
    p.set_defaults(fn=_cmd_heat_kernel)

    p = sub.add_parser("heat-apply", help="apply the heat semigroup to coefficients")
    common(p, alpha=False)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--coeffs", required=True, help="JSON coefficient file")
    p.set_defaults(fn=_cmd_heat_apply)

    p = sub.add_parser("riesz-apply", help="apply R_j to coefficients")
    common(p, alpha=False)
    p.add_argument("--j", type=int, required=True, help="coordinate, 1-based")
    p.add_argument("--coeffs", required=True)
    p.set_defaults(fn=_cmd_riesz_apply)

    p = sub.add_parser("riesz-kernel", help="Riesz kernel on a pair file")
    common(p)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--pairs", required=True)
    _add_kernel_flags(p)
    p.set_defaults(fn=_cmd_riesz_kernel)

    p = sub.add_parser("pairing-check", help="dual pairing: spectral vs kernel integral")
    common(p)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--f-support", type=_parse_floats, default=(0.4, 2.0),
                   metavar="RLO,RHI")
    p.add_argument("--g-support", type=_parse_floats, default=(3.0, 5.0),
                   metavar="RLO,RHI")
    p.add_argument("--max-degree", type=int, default=900)
    p.add_argument("--quad-points", type=int, default=512)
    _add_kernel_flags(p)
    p.set_defaults(fn=_cmd_pairing_check)

    p = sub.add_parser("verify", help="run a verification suite from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--suite", default="all",
                   choices=["basis", "heat", "riesz", "estimates", "all"])
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=_cmd_verify)

    for which in ("growth", "smoothness"):
        p = sub.add_parser(f"scan-{which}", help=f"Calderon-Zygmund {which} scan")
        common(p)
        p.add_argument("--j", type=int, default=1)
        p.add_argument("--pairs", type=int, default=1000)
        p.add_argument("--seed", type=int, required=True)
        p.add_argument("--positive-orthant", action="store_true")
        _add_kernel_flags(p)
        p.set_defaults(fn=lambda ns, w=which: _cmd_scan(ns, w))

    return top


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.fn(ns)
    except SystemExit:
        raise
    except (ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
