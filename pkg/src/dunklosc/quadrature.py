"""Gaussian quadrature for the reflection-invariant measures
w_alpha(x) dx = prod |x_i|^{2 a_i + 1} dx and spectral analysis/synthesis
in the generalized Hermite basis.

A one-dimensional rule is built from the generalized Gauss-Laguerre rule
for the weight u^a e^{-u} through the substitution u = x^2, which yields
a sign-symmetric node set {+-sqrt(u_i)}.  The stored weights carry the
e^{+x^2} compensation factor, so

    sum_i w_i f(x_i)  ~  integral f(x) w_alpha(x) dx

holds for integrands of Gaussian-times-polynomial type (in particular
for all products of generalized Hermite functions up to the exactness
degree).  Moment certificates are therefore phrased for the test
functions |x|^k e^{-x^2}, whose exact integrals are
Gamma((k + 2a + 2)/2).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .hermite import AlphaParams, hermite_fn_all_1d
from .special import log_gamma

__all__ = [
    "Rule1D",
    "QuadratureRule",
    "SpectralCoeffs",
    "gauss_rule_1d",
    "tensor_rule",
    "inner_product",
    "project",
    "synthesize",
    "mms_constant",
    "multi_indices_upto",
]

MAX_POINTS = 512


@dataclass(frozen=True)
class Rule1D:
    """Symmetric rule for one coordinate: nodes +-sqrt(u_i), compensated weights."""

    alpha_j: float
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int


@dataclass(frozen=True)
class QuadratureRule:
    """Tensor rule on R^d with flattened nodes (M, d) and weights (M,)."""

    axes: tuple[Rule1D, ...]
    nodes: np.ndarray
    weights: np.ndarray
    exactness_degree: int
    alpha: AlphaParams

    @property
    def dim(self) -> int:
        return len(self.axes)

    def to_csv(self) -> str:
        """Documented CSV: one row per node, coordinates then weight."""
        buf = io.StringIO()
        d = self.dim
        buf.write("# dunklosc quadrature rule v1\n")
        buf.write(f"# alpha={list(self.alpha.alpha)} exactness_degree={self.exactness_degree}\n")
        buf.write(",".join(f"x{i+1}" for i in range(d)) + ",weight\n")
        for row, w in zip(self.nodes, self.weights):
            buf.write(",".join(f"{c:.17g}" for c in row) + f",{w:.17g}\n")
        return buf.getvalue()


def _laguerre_nodes_logweights(m: int, a: float) -> tuple[np.ndarray, np.ndarray]:
    """Golub-Welsch for the weight u^a e^{-u} on (0, inf).

    Returns nodes and log-weights; the recurrence coefficients are the
    classical ones, diag 2k+a+1 and off-diagonal sqrt(k (k+a)).
    """
    k = np.arange(m)
    diag = 2.0 * k + a + 1.0
    off = np.sqrt(k[1:] * (k[1:] + a))
    nodes, vecs = eigh_tridiagonal(diag, off)
    first = vecs[0]
    logw = np.full(m, -np.inf)
    nz = first != 0.0
    logw[nz] = log_gamma(a + 1.0) + 2.0 * np.log(np.abs(first[nz]))
    return nodes, logw


def gauss_rule_1d(alpha_j: float, npoints: int) -> Rule1D:
    """Rule with nodes {+-sqrt(u_i)} exact for p(x) |x|^{2a+1} e^{-x^2}
    up to degree 4*npoints - 1 (>= 2*npoints - 1 as required).

    ``npoints`` counts nodes per half-axis; the stored weights include
    the e^{+x^2} factor (assembled in log space so tail nodes do not
    overflow).
    """
    if npoints < 1:
        raise ValueError("npoints must be >= 1")
    if npoints > MAX_POINTS:
        raise ValueError(f"npoints > {MAX_POINTS} rejected: orthogonal-polynomial recursion unstable")
    if alpha_j < -0.5:
        raise ValueError("alpha_j must be >= -1/2")
    u, logw = _laguerre_nodes_logweights(npoints, alpha_j)
    x = np.sqrt(u)
    # Halve the mass, mirror to -x; e^{x^2} compensation folded in here.
    w_half = np.exp(logw + u - math.log(2.0))
    nodes = np.concatenate([-x[::-1], x])
    weights = np.concatenate([w_half[::-1], w_half])
    return Rule1D(alpha_j=float(alpha_j), nodes=nodes, weights=weights,
                  exactness_degree=4 * npoints - 1)


def tensor_rule(rules: list[Rule1D] | tuple[Rule1D, ...]) -> QuadratureRule:
    """Product rule; exactness degree is the minimum over coordinates."""
    if not rules:
        raise ValueError("need at least one 1-d rule")
    axes = tuple(rules)
    grids = np.meshgrid(*[r.nodes for r in axes], indexing="ij")
    nodes = np.stack([g.ravel() for g in grids], axis=-1)
    wgrids = np.meshgrid(*[r.weights for r in axes], indexing="ij")
    weights = np.ones_like(wgrids[0])
    for wg in wgrids:
        weights = weights * wg
    alpha = AlphaParams(tuple(r.alpha_j for r in axes))
    return QuadratureRule(
        axes=axes,
        nodes=nodes,
        weights=weights.ravel(),
        exactness_degree=min(r.exactness_degree for r in axes),
        alpha=alpha,
    )


def default_rule(alpha: AlphaParams, npoints: int = 80) -> QuadratureRule:
    """Tensor rule with ``npoints`` per half-axis in every coordinate."""
    return tensor_rule([gauss_rule_1d(a, npoints) for a in alpha])


def _evaluate(f, nodes: np.ndarray) -> np.ndarray:
    vals = f(nodes)
    return np.asarray(vals, dtype=float).reshape(nodes.shape[0])


def inner_product(f, g, rule: QuadratureRule) -> float:
    """<f, g>_alpha = sum w_i f(x_i) g(x_i).

    ``f`` and ``g`` take an (M, d) array of points and return M values.
    Non-finite function values raise, naming the offending node.
    """
    fv = _evaluate(f, rule.nodes)
    gv = _evaluate(g, rule.nodes)
    for name, vals in (("f", fv), ("g", gv)):
        bad = ~np.isfinite(vals)
        if bad.any():
            idx = int(np.argmax(bad))
            raise ValueError(f"{name} returned non-finite value at node {rule.nodes[idx]}")
    return float(np.sum(rule.weights * fv * gv))


@dataclass
class SpectralCoeffs:
    """Truncated expansion f = sum_{|n| <= N} coeffs[n] h_n^alpha."""

    coeffs: dict[tuple[int, ...], float]
    alpha: AlphaParams

    @property
    def dim(self) -> int:
        return self.alpha.dim

    @property
    def max_degree(self) -> int:
        return max((sum(n) for n in self.coeffs), default=0)

    def norm(self) -> float:
        return math.sqrt(sum(c * c for c in self.coeffs.values()))

    def copy(self) -> "SpectralCoeffs":
        return SpectralCoeffs(dict(self.coeffs), self.alpha)


def multi_indices_upto(dim: int, max_degree: int) -> list[tuple[int, ...]]:
    """All n in N^dim with |n| <= max_degree, in lexicographic order."""
    if dim == 1:
        return [(k,) for k in range(max_degree + 1)]
    out = []
    for k in range(max_degree + 1):
        for rest in multi_indices_upto(dim - 1, max_degree - k):
            out.append((k,) + rest)
    return sorted(out)


def _axis_tables(rule: QuadratureRule, max_degree: int) -> list[np.ndarray]:
    return [hermite_fn_all_1d(max_degree, ax.alpha_j, ax.nodes) for ax in rule.axes]


def project(f, alpha: AlphaParams, max_degree: int, rule: QuadratureRule) -> SpectralCoeffs:
    """Coefficients <f, h_n>_alpha for all |n| <= max_degree.

    Contracts the weighted function values against per-axis basis tables,
    so the cost is one tensor contraction per coordinate rather than one
    quadrature per index.
    """
    if rule.alpha.alpha != alpha.alpha:
        raise ValueError("rule was built for a different alpha")
    if rule.exactness_degree < 2 * max_degree + 2:
        raise ValueError(
            f"rule exactness {rule.exactness_degree} insufficient for degree {max_degree}"
        )
    fv = _evaluate(f, rule.nodes)
    bad = ~np.isfinite(fv)
    if bad.any():
        idx = int(np.argmax(bad))
        raise ValueError(f"f returned non-finite value at node {rule.nodes[idx]}")
    shape = tuple(ax.nodes.size for ax in rule.axes)
    tensor = fv.reshape(shape)
    for ax in rule.axes:
        table = hermite_fn_all_1d(max_degree, ax.alpha_j, ax.nodes) * ax.weights
        # Contract the leading point axis; cycle the new index axis to the back
        # so the next coordinate's point axis is leading again.
        tensor = np.tensordot(table, tensor, axes=([1], [0]))
        tensor = np.moveaxis(tensor, 0, len(shape) - 1)
    coeffs = {}
    for n in multi_indices_upto(rule.dim, max_degree):
        coeffs[n] = float(tensor[n])
    return SpectralCoeffs(coeffs, alpha)


def synthesize(c: SpectralCoeffs, points) -> np.ndarray:
    """Evaluate sum_n coeffs[n] h_n^alpha at an (npoints, d) array."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != c.dim:
        raise ValueError("point dimension mismatch")
    if not c.coeffs:
        return np.zeros(pts.shape[0])
    nmax = [max(n[i] for n in c.coeffs) for i in range(c.dim)]
    tables = [hermite_fn_all_1d(nmax[i], c.alpha[i], pts[:, i]) for i in range(c.dim)]
    out = np.zeros(pts.shape[0])
    for n, v in c.coeffs.items():
        if v == 0.0:
            continue
        prod = tables[0][n[0]].copy()
        for i in range(1, c.dim):
            prod *= tables[i][n[i]]
        out += v * prod
    return out


def mms_constant(alpha: AlphaParams, rule: QuadratureRule | None = None) -> tuple[float, float, float]:
    """Macdonald-Mehta-Selberg integral c_alpha = int e^{-|x|^2} w_alpha dx.

    Returns (analytic, quadrature, discrepancy): prod Gamma(a_j + 1)
    against the rule applied to the Gaussian.
    """
    analytic = math.exp(sum(log_gamma(a + 1.0) for a in alpha))
    if rule is None:
        rule = default_rule(alpha, 40)
    quad = float(np.sum(rule.weights * np.exp(-np.sum(rule.nodes**2, axis=1))))
    return analytic, quad, abs(analytic - quad)
