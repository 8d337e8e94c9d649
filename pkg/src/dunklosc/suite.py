"""Named verification suites driven by a RunConfig.

Each check runs one module-level identity or estimate at desk scale and
returns a record (name, passed, tolerance, residual, seed).  The CLI
``verify`` subcommand serializes the full report as JSON and exits
nonzero when any check fails.  Wall times are collected in a separate
``timings`` map so the remainder of the report is byte-deterministic for
a fixed config and seed.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .estimates import (ap_power_weight, ball_measure, growth_scan,
                        smoothness_scan, soni_scan)
from .heat import heat_apply_kernel, heat_kernel, heat_kernel_series
from .hermite import (AlphaParams, MultiIndex, delta_hermite, delta_star_hermite,
                      eigenvalue, hermite_fn, hermite_fn_all_1d, ladder_coeff)
from .polydunkl import fund_identity_check, monomial, verify_eldwa
from .quadrature import SpectralCoeffs, default_rule, multi_indices_upto
from .riesz import (KernelConfig, SchlafliMeasure, apriori_identity_check,
                    riesz_kernel, riesz_kernel_direct, riesz_multiplier,
                    star_identity_check)
from .special import bessel_ratio

__all__ = ["RunConfig", "parse_config", "serialize_config", "run_suite", "SUITES"]

SUITES = ("basis", "heat", "riesz", "estimates", "all")


@dataclass(frozen=True)
class RunConfig:
    """Validated experiment configuration (see parse_config for defaults)."""

    alpha: tuple[float, ...]
    max_degree: int = 40
    quad_points: int = 80
    kernel: KernelConfig = field(default_factory=lambda: KernelConfig(zeta_points=96))
    seed: int = 1234
    output: str | None = None

    @property
    def dimension(self) -> int:
        return len(self.alpha)

    @property
    def alpha_params(self) -> AlphaParams:
        return AlphaParams(self.alpha)


def _fail(path: str, msg: str):
    raise ValueError(f"config error at {path}: {msg}")


def parse_config(text: str) -> RunConfig:
    """Parse and validate a JSON config document.

    Required: "alpha" (list of reals >= -1/2).  Optional with defaults:
    max_degree 40, quad_points 80, kernel.zeta_points 96,
    kernel.zeta_grading 3.0, kernel.s_points_per_dim 48,
    kernel.s_method "gauss-jacobi", seed 1234, output null.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"config error: not valid JSON ({e})") from e
    if not isinstance(doc, dict):
        _fail("$", "top-level value must be an object")
    known = {"alpha", "max_degree", "quad_points", "kernel", "seed", "output"}
    for key in doc:
        if key not in known:
            _fail(key, "unknown field")
    if "alpha" not in doc:
        _fail("alpha", "required field missing")
    alpha = doc["alpha"]
    if not isinstance(alpha, list) or not alpha:
        _fail("alpha", "must be a nonempty list")
    for i, a in enumerate(alpha):
        if not isinstance(a, (int, float)):
            _fail(f"alpha[{i}]", "must be a number")
        if a < -0.5:
            _fail(f"alpha[{i}]", f"must be >= -0.5, got {a}")
    max_degree = doc.get("max_degree", 40)
    if not isinstance(max_degree, int) or max_degree < 1:
        _fail("max_degree", "must be a positive integer")
    quad_points = doc.get("quad_points", 80)
    if not isinstance(quad_points, int) or not 1 <= quad_points <= 512:
        _fail("quad_points", "must be an integer in [1, 512]")
    kdoc = doc.get("kernel", {})
    if not isinstance(kdoc, dict):
        _fail("kernel", "must be an object")
    for key in kdoc:
        if key not in {"zeta_points", "zeta_grading", "s_points_per_dim", "s_method", "atomic_threshold"}:
            _fail(f"kernel.{key}", "unknown field")
    try:
        kernel = KernelConfig(
            zeta_points=kdoc.get("zeta_points", 96),
            zeta_grading=float(kdoc.get("zeta_grading", 3.0)),
            s_points_per_dim=kdoc.get("s_points_per_dim", 48),
            s_method=kdoc.get("s_method", "gauss-jacobi"),
            atomic_threshold=float(kdoc.get("atomic_threshold", 0.0)),
        )
    except ValueError as e:
        _fail("kernel", str(e))
    seed = doc.get("seed", 1234)
    if not isinstance(seed, int):
        _fail("seed", "must be an integer")
    output = doc.get("output")
    if output is not None and not isinstance(output, str):
        _fail("output", "must be a string path")
    return RunConfig(alpha=tuple(float(a) for a in alpha), max_degree=max_degree,
                     quad_points=quad_points, kernel=kernel, seed=seed, output=output)


def serialize_config(cfg: RunConfig) -> str:
    doc = {
        "alpha": list(cfg.alpha),
        "max_degree": cfg.max_degree,
        "quad_points": cfg.quad_points,
        "kernel": {
            "zeta_points": cfg.kernel.zeta_points,
            "zeta_grading": cfg.kernel.zeta_grading,
            "s_points_per_dim": cfg.kernel.s_points_per_dim,
            "s_method": cfg.kernel.s_method,
            "atomic_threshold": cfg.kernel.atomic_threshold,
        },
        "seed": cfg.seed,
        "output": cfg.output,
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def _record(name, passed, tolerance, residual, seed=None, **extra):
    rec = {"name": name, "passed": bool(passed), "tolerance": tolerance,
           "residual": float(residual)}
    if seed is not None:
        rec["seed"] = seed
    rec.update(extra)
    return rec


# --- basis suite -----------------------------------------------------------

def _check_orthonormality(cfg: RunConfig):
    al = cfg.alpha_params
    N = min(cfg.max_degree, 8)
    rule = default_rule(al, cfg.quad_points)
    idx = multi_indices_upto(al.dim, N)
    tables = [hermite_fn_all_1d(N, ax.alpha_j, ax.nodes) for ax in rule.axes]
    B = np.empty((len(idx), rule.nodes.shape[0]))
    shape = tuple(ax.nodes.size for ax in rule.axes)
    for k, n in enumerate(idx):
        v = tables[0][n[0]]
        for i in range(1, al.dim):
            v = np.multiply.outer(v, tables[i][n[i]])
        B[k] = v.reshape(-1)
    G = (B * rule.weights) @ B.T
    resid = float(np.max(np.abs(G - np.eye(len(idx)))))
    return _record("orthonormality", resid <= 1e-8, 1e-8, resid, basis_size=len(idx))


def _grid_points(dim: int, lo=-4.0, hi=4.0, npts=21) -> np.ndarray:
    axes = [np.linspace(lo, hi, npts)] * dim
    grids = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=-1)


def _check_ladder(cfg: RunConfig):
    al = cfg.alpha_params
    N = min(cfg.max_degree, 10)
    pts = _grid_points(al.dim, npts=21 if al.dim == 1 else 9)
    worst = 0.0
    for n in multi_indices_upto(al.dim, N):
        mi = MultiIndex(n)
        for j in range(al.dim):
            lower = delta_hermite(mi, al, j, pts)
            target = (ladder_coeff(n[j], al[j]) * hermite_fn(mi.shift(j, -1), al, pts)
                      if n[j] >= 1 else np.zeros(pts.shape[0]))
            worst = max(worst, float(np.max(np.abs(lower - target))))
            upper = delta_star_hermite(mi, al, j, pts)
            target = ladder_coeff(n[j] + 1, al[j]) * hermite_fn(mi.shift(j, +1), al, pts)
            worst = max(worst, float(np.max(np.abs(upper - target))))
    return _record("ladder_identities", worst <= 1e-9, 1e-9, worst)


def _check_eigen_relation(cfg: RunConfig):
    # (1/2) sum_j (delta_j* delta_j + delta_j delta_j*) h_n = lambda_n h_n,
    # composed through the verified ladder coefficients.
    al = cfg.alpha_params
    N = min(cfg.max_degree, 6)
    pts = _grid_points(al.dim, npts=13 if al.dim == 1 else 7)
    worst = 0.0
    for n in multi_indices_upto(al.dim, N):
        mi = MultiIndex(n)
        acc = np.zeros(pts.shape[0])
        for j in range(al.dim):
            if n[j] >= 1:
                acc += 0.5 * ladder_coeff(n[j], al[j]) * delta_star_hermite(mi.shift(j, -1), al, j, pts)
            acc += 0.5 * ladder_coeff(n[j] + 1, al[j]) * delta_hermite(mi.shift(j, +1), al, j, pts)
        resid = np.max(np.abs(acc - eigenvalue(mi, al) * hermite_fn(mi, al, pts)))
        worst = max(worst, float(resid))
    return _record("eigen_relation", worst <= 1e-9, 1e-9, worst)


def _check_fischer(cfg: RunConfig):
    al = cfg.alpha_params
    rep = verify_eldwa(al, min(cfg.max_degree, 6))
    rule = default_rule(al, max(cfg.quad_points, 20))
    worst = 0.0
    idx = multi_indices_upto(al.dim, 4)
    for n in idx:
        for m in idx:
            worst = max(worst, fund_identity_check(monomial(n), monomial(m), al, rule))
    passed = rep.passed and worst <= 1e-8
    return _record("fischer_layer", passed, 1e-8, worst,
                   eldwa_max_ratio=rep.max_norm_ratio)


# --- heat suite ------------------------------------------------------------

def _check_series_vs_kernel(cfg: RunConfig):
    al = cfg.alpha_params
    axis = np.linspace(0.0, 2.0, 9 if al.dim == 1 else 4)
    grids = np.meshgrid(*([axis] * al.dim), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=-1)
    ii, jj = np.meshgrid(np.arange(pts.shape[0]), np.arange(pts.shape[0]), indexing="ij")
    X, Y = pts[ii.ravel()], pts[jj.ravel()]
    worst = 0.0
    for t in (0.3, 0.7, 1.5):
        closed = heat_kernel(al, t, X, Y)
        series = heat_kernel_series(al, t, X, Y, 60)
        worst = max(worst, float(np.max(np.abs(closed - series) / np.abs(closed))))
    return _record("heat_series_vs_kernel", worst <= 1e-6, 1e-6, worst)


def _check_semigroup(cfg: RunConfig):
    al = cfg.alpha_params
    rule = default_rule(al, cfg.quad_points)
    rng = np.random.default_rng(cfg.seed)
    X = rng.uniform(-2, 2, size=(25, al.dim))
    Y = rng.uniform(-2, 2, size=(25, al.dim))
    worst = 0.0
    M = rule.nodes.shape[0]
    for t in (0.3, 0.7):
        for s in (0.3, 0.7):
            lhs = heat_kernel(al, t + s, X, Y)
            for p in range(X.shape[0]):
                gz = heat_kernel(al, t, np.broadcast_to(X[p], (M, al.dim)), rule.nodes)
                hz = heat_kernel(al, s, rule.nodes, np.broadcast_to(Y[p], (M, al.dim)))
                rhs = float(np.sum(rule.weights * gz * hz))
                worst = max(worst, abs(lhs[p] - rhs) / abs(lhs[p]))
    return _record("heat_semigroup", worst <= 1e-6, 1e-6, worst, seed=cfg.seed)


def _check_contraction(cfg: RunConfig):
    al = cfg.alpha_params
    rule = default_rule(al, cfg.quad_points)
    rng = np.random.default_rng(cfg.seed)
    freqs = rng.uniform(0.3, 2.0, size=(10, al.dim))
    worst = -math.inf
    xs = rng.uniform(-2, 2, size=(5, al.dim))
    for w in freqs:
        f = lambda pts: np.cos(pts @ w)
        for t in (0.1, 1.0):
            for x in xs:
                val = abs(heat_apply_kernel(f, t, x, rule))
                worst = max(worst, val - 1.0)
    return _record("heat_contraction", worst <= 1e-10, 1e-10, max(worst, 0.0), seed=cfg.seed)


# --- riesz suite -----------------------------------------------------------

def _check_schlafli(cfg: RunConfig):
    worst = 0.0
    for nu in (-0.5, 0.0, 0.7, 2.0):
        m = SchlafliMeasure.from_nu(nu, 32)
        for z in (0.1, 1.0, 10.0):
            ref = bessel_ratio(nu, z)
            worst = max(worst, abs(m.laplace(z) - ref) / abs(ref))
    return _record("schlafli_normalization", worst <= 1e-8, 1e-8, worst)


def _random_coeffs(al: AlphaParams, N: int, rng) -> SpectralCoeffs:
    idx = multi_indices_upto(al.dim, N)
    return SpectralCoeffs({n: float(rng.normal()) for n in idx}, al)


def _check_star(cfg: RunConfig):
    al = cfg.alpha_params
    rng = np.random.default_rng(cfg.seed)
    N = min(cfg.max_degree, 10)
    idx = multi_indices_upto(al.dim, N)
    worst = 0.0
    for _ in range(100):
        f = _random_coeffs(al, N, rng)
        n = idx[rng.integers(len(idx))]
        for j in range(al.dim):
            worst = max(worst, star_identity_check(f, n, j, al))
    return _record("star_identity", worst <= 1e-9, 1e-9, worst, seed=cfg.seed)


def _check_apriori(cfg: RunConfig):
    al = cfg.alpha_params
    rng = np.random.default_rng(cfg.seed + 1)
    worst = 0.0
    for _ in range(100):
        n = tuple(int(k) for k in rng.integers(0, 9, size=al.dim))
        i = int(rng.integers(al.dim))
        j = int(rng.integers(al.dim))
        worst = max(worst, apriori_identity_check(n, i, j, al))
    return _record("apriori_identity", worst <= 1e-12, 1e-12, worst, seed=cfg.seed + 1)


def _check_multiplier_norm(cfg: RunConfig):
    # On the truncation the L2 operator norm of R_j equals the largest
    # multiplier (diagonal-after-shift structure); confirm with a power
    # iteration on R^T R run to convergence of the Rayleigh quotient.
    al = cfg.alpha_params
    N = min(cfg.max_degree, 12)
    idx = multi_indices_upto(al.dim, N)
    pos = {n: k for k, n in enumerate(idx)}
    worst = 0.0
    for j in range(al.dim):
        src, dst, mul = [], [], []
        for n, k in pos.items():
            if n[j] == 0:
                continue
            tgt = n[:j] + (n[j] - 1,) + n[j + 1:]
            src.append(k)
            dst.append(pos[tgt])
            mul.append(riesz_multiplier(n, al, j))
        src = np.array(src, dtype=int)
        dst = np.array(dst, dtype=int)
        mul = np.array(mul)
        exact = float(np.max(mul)) if mul.size else 0.0
        rng = np.random.default_rng(cfg.seed + 2)
        v = np.abs(rng.normal(size=len(idx))) + 0.1
        v /= np.linalg.norm(v)
        est = prev = 0.0
        for _ in range(50000):
            w = np.zeros(len(idx))
            np.add.at(w, dst, mul * v[src])
            est = float(np.linalg.norm(w))  # Rayleigh: |R v| for unit v
            u = np.zeros(len(idx))
            np.add.at(u, src, mul * w[dst])
            nrm = np.linalg.norm(u)
            if nrm == 0:
                break
            v = u / nrm
            if abs(est - prev) <= 1e-15 * max(est, 1.0):
                break
            prev = est
        worst = max(worst, abs(est - exact))
    return _record("multiplier_norm", worst <= 1e-12, 1e-12, worst, seed=cfg.seed + 2)


def _check_route_agreement(cfg: RunConfig, n_pairs: int = 8):
    al = cfg.alpha_params
    kcfg = KernelConfig(zeta_points=max(cfg.kernel.zeta_points, 256),
                        zeta_grading=cfg.kernel.zeta_grading,
                        s_points_per_dim=max(cfg.kernel.s_points_per_dim, 64),
                        s_method=cfg.kernel.s_method)
    rng = np.random.default_rng(cfg.seed + 3)
    worst = 0.0
    count = 0
    while count < n_pairs:
        x = rng.uniform(-2.5, 2.5, size=al.dim)
        y = rng.uniform(-2.5, 2.5, size=al.dim)
        if not 0.5 <= np.linalg.norm(x - y) <= 5.0:
            continue
        signs = [np.array([1.0 if b == 0 else -1.0 for b in bits])
                 for bits in np.ndindex(*([2] * al.dim))]
        refl = min(np.linalg.norm(sg * x - y) for sg in signs)
        if refl < 0.4:
            continue
        count += 1
        j = int(rng.integers(al.dim))
        dr = riesz_kernel_direct(al, j, x, y)
        zt = riesz_kernel(al, j, x, y, kcfg)
        worst = max(worst, abs(zt - dr) / max(abs(dr), 1e-290))
    return _record("riesz_route_agreement", worst <= 1e-4, 1e-4, worst,
                   seed=cfg.seed + 3, pairs=n_pairs)


# --- estimates suite -------------------------------------------------------

def _check_soni(cfg: RunConfig):
    rep = soni_scan()
    return _record("soni_scan", rep.passed, 0.0, -rep.extra["min_relative_gap"],
                   min_gap=rep.extra["min_relative_gap"])


def _check_ap(cfg: RunConfig):
    cases = []
    for a in (-0.5, 0.0, 1.3):
        lo = -(2 * a + 2)
        for p in (1.0, 1.5, 2.0, 4.0):
            hi = 0.0 if p == 1.0 else (2 * a + 2) * (p - 1)
            for r, expect in [(lo - 0.1, False), (lo + 0.1, True), (0.0, True),
                              (hi - 0.05, True), (hi + 0.05, False)]:
                if p == 1.0 and r == hi - 0.05:
                    expect = True  # r slightly below 0 is inside for p = 1
                cases.append((a, p, r, expect))
    bad = sum(1 for a, p, r, e in cases if ap_power_weight(a, p, r) != e)
    return _record("ap_power_weight", bad == 0, 0.0, float(bad), cases=len(cases))


def _check_scans(cfg: RunConfig, n_pairs: int = 200):
    al = cfg.alpha_params
    scan_cfg = KernelConfig(zeta_points=max(cfg.kernel.zeta_points, 192),
                            zeta_grading=cfg.kernel.zeta_grading,
                            s_points_per_dim=cfg.kernel.s_points_per_dim,
                            s_method="exact")
    g = growth_scan(al, 0, n_pairs=n_pairs, seed=cfg.seed, cfg=scan_cfg)
    s = smoothness_scan(al, 0, n_pairs=n_pairs, seed=cfg.seed, cfg=scan_cfg)
    passed = g.passed and s.passed
    return _record("cz_scans", passed, 0.05, max(g.refinement_drift, s.refinement_drift),
                   seed=cfg.seed, growth_constant=g.max_ratio, smoothness_constant=s.max_ratio)


def _check_ball(cfg: RunConfig):
    al = cfg.alpha_params
    if al.dim == 1:
        v, _ = ball_measure(al, [0.3], 0.9)
        a = al[0]
        p = 2 * a + 2
        F = lambda u: math.copysign(abs(u) ** p, u) / p
        exact = F(1.2) - F(-0.6)
        resid = abs(v - exact)
        return _record("ball_measure", resid <= 1e-12, 1e-12, resid)
    rng = np.random.default_rng(cfg.seed)
    x = rng.uniform(-1, 1, size=al.dim)
    v, se = ball_measure(al, x, 0.9)
    v2, se2 = ball_measure(al, x, 0.9, npoints=1 << 18, seed=cfg.seed + 9)
    resid = abs(v - v2)
    tol = 3.0 * math.sqrt(se**2 + se2**2)
    return _record("ball_measure", resid <= tol, tol, resid, seed=cfg.seed)


_SUITE_CHECKS = {
    "basis": [_check_orthonormality, _check_ladder, _check_eigen_relation, _check_fischer],
    "heat": [_check_series_vs_kernel, _check_semigroup, _check_contraction],
    "riesz": [_check_schlafli, _check_star, _check_apriori, _check_multiplier_norm,
              _check_route_agreement],
    "estimates": [_check_soni, _check_ap, _check_ball, _check_scans],
}


def run_suite(cfg: RunConfig, suite: str = "all") -> tuple[int, dict]:
    """Run the named check suite; returns (exit_status, report)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    names = ["basis", "heat", "riesz", "estimates"] if suite == "all" else [suite]
    checks = []
    timings = {}
    for sname in names:
        for fn in _SUITE_CHECKS[sname]:
            t0 = time.perf_counter()
            rec = fn(cfg)
            timings[rec["name"]] = round(time.perf_counter() - t0, 3)
            rec["suite"] = sname
            checks.append(rec)
    all_passed = all(c["passed"] for c in checks)
    report = {
        "config": json.loads(serialize_config(cfg)),
        "suite": suite,
        "checks": checks,
        "all_passed": all_passed,
        "timings": timings,
    }
    return (0 if all_passed else 1), report
