"""Generalized Hermite functions for the Z2^d reflection group.

The one-dimensional system, for parameter a >= -1/2, is

    h_{2m}(x)   = d_{2m}   e^{-x^2/2} L_m^a(x^2),
    h_{2m+1}(x) = d_{2m+1} e^{-x^2/2} x L_m^{a+1}(x^2),

with d_{2m} = (-1)^m sqrt(m! / Gamma(m+a+1)) and
d_{2m+1} = (-1)^m sqrt(m! / Gamma(m+a+2)).  The d-dimensional functions
are coordinate products, orthonormal in L^2(R^d, w_alpha) with
w_alpha(x) = prod |x_i|^{2 a_i + 1}, and eigenfunctions of the Dunkl
harmonic oscillator with eigenvalue 2|n| + 2|alpha| + 2d.

At a = -1/2 the system reduces to the classical Hermite functions,
signs included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .special import laguerre, laguerre_deriv, log_gamma

__all__ = [
    "MultiIndex",
    "AlphaParams",
    "HermiteFn",
    "a_coeff",
    "hermite_fn_1d",
    "hermite_fn_all_1d",
    "hermite_fn",
    "ladder_coeff",
    "eigenvalue",
    "delta_hermite_1d",
    "delta_star_hermite_1d",
    "delta_hermite",
    "delta_star_hermite",
]


@dataclass(frozen=True)
class MultiIndex:
    """Element of N^d indexing basis functions and monomials."""

    entries: tuple[int, ...]

    def __post_init__(self):
        ent = tuple(int(e) for e in self.entries)
        if any(e < 0 for e in ent):
            raise ValueError(f"multi-index entries must be >= 0, got {ent}")
        object.__setattr__(self, "entries", ent)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        """|n| = sum of entries."""
        return sum(self.entries)

    def shift(self, j: int, by: int) -> "MultiIndex":
        """n +/- e_j (0-based j); raises if an entry would go negative."""
        ent = list(self.entries)
        ent[j] += by
        return MultiIndex(tuple(ent))

    def __getitem__(self, j: int) -> int:
        return self.entries[j]

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class AlphaParams:
    """Multiplicity parameters alpha in [-1/2, inf)^d."""

    alpha: tuple[float, ...]

    def __post_init__(self):
        al = tuple(float(a) for a in self.alpha)
        if any(a < -0.5 for a in al):
            raise ValueError(f"every alpha_j must be >= -1/2, got {al}")
        object.__setattr__(self, "alpha", al)

    @property
    def dim(self) -> int:
        return len(self.alpha)

    @property
    def abs_sum(self) -> float:
        """|alpha| = sum alpha_j (may be negative)."""
        return sum(self.alpha)

    def __getitem__(self, j: int) -> float:
        return self.alpha[j]

    def __iter__(self):
        return iter(self.alpha)


def a_coeff(n: int, a: float) -> float:
    """Squared Fischer norm of the monomial x^n: the recurrence
    a_0 = 1, a_n = n a_{n-1} (n even), a_n = (n + 2a + 1) a_{n-1} (n odd)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    val = 1.0
    for k in range(1, n + 1):
        val *= k if k % 2 == 0 else k + 2 * a + 1
    return val


def _norm_const(n: int, a: float) -> float:
    """Normalization d_{n,a}, sign (-1)^{n//2}, computed in log space."""
    m = n // 2
    shift = 1.0 if n % 2 == 0 else 2.0
    mag = math.exp(0.5 * (log_gamma(m + 1.0) - log_gamma(m + a + shift)))
    return mag if m % 2 == 0 else -mag


def hermite_fn_1d(n: int, a: float, x: float) -> float:
    """One-dimensional generalized Hermite function h_n^a(x)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    m = n // 2
    g = math.exp(-0.5 * x * x)
    if n % 2 == 0:
        return _norm_const(n, a) * g * laguerre(m, a, x * x)
    # Odd orders vanish identically at the origin through the explicit factor x.
    if x == 0.0:
        return 0.0
    return _norm_const(n, a) * g * x * laguerre(m, a + 1.0, x * x)


def hermite_fn_all_1d(nmax: int, a: float, x) -> np.ndarray:
    """Table h_n^a(x) for n = 0..nmax, vectorized over x.

    Runs the Laguerre recurrence directly on the normalized functions so
    no intermediate overflows even for degrees in the hundreds.
    Returns an array of shape (nmax+1, len(x)).
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    g = np.exp(-0.5 * x * x)
    out = np.zeros((nmax + 1, x.size))
    y = x * x
    # Even chain: ell_m = h_{2m}; odd chain: o_m = h_{2m+1}.
    ell_prev = np.zeros_like(x)
    ell = g * math.exp(-0.5 * log_gamma(a + 1.0))
    o_prev = np.zeros_like(x)
    o = x * g * math.exp(-0.5 * log_gamma(a + 2.0))
    if nmax >= 0:
        out[0] = ell
    if nmax >= 1:
        out[1] = o
    for n in range(2, nmax + 1):
        m = n // 2  # new chain index
        if n % 2 == 0:
            c1 = (2 * (m - 1) + a + 1 - y) / math.sqrt(m * (m + a))
            c2 = math.sqrt((m - 1) * (m - 1 + a) / (m * (m + a)))
            ell_prev, ell = ell, -c1 * ell - c2 * ell_prev
            out[n] = ell
        else:
            b = a + 1.0
            c1 = (2 * (m - 1) + b + 1 - y) / math.sqrt(m * (m + b))
            c2 = math.sqrt((m - 1) * (m - 1 + b) / (m * (m + b)))
            o_prev, o = o, -c1 * o - c2 * o_prev
            out[n] = o
    return out


def hermite_fn(n: MultiIndex, alpha: AlphaParams, x) -> float | np.ndarray:
    """d-dimensional h_n^alpha(x) = prod_i h_{n_i}^{a_i}(x_i).

    ``x`` may be a single point (length-d sequence) or an array of shape
    (npoints, d).
    """
    if n.dim != alpha.dim:
        raise ValueError(f"dimension mismatch: n has {n.dim}, alpha has {alpha.dim}")
    pts = np.atleast_2d(np.asarray(x, dtype=float))
    if pts.shape[1] != alpha.dim:
        raise ValueError(f"points have dimension {pts.shape[1]}, expected {alpha.dim}")
    val = np.ones(pts.shape[0])
    for i in range(alpha.dim):
        val *= hermite_fn_all_1d(n[i], alpha[i], pts[:, i])[n[i]]
    return float(val[0]) if np.asarray(x).ndim == 1 else val


def ladder_coeff(n_j: int, a_j: float) -> float:
    """m(n_j, a_j): sqrt(2 n_j) for even n_j, sqrt(2 n_j + 4 a_j + 2) for odd."""
    if n_j < 0:
        raise ValueError("n_j must be >= 0")
    if n_j % 2 == 0:
        return math.sqrt(2.0 * n_j)
    return math.sqrt(2.0 * n_j + 4.0 * a_j + 2.0)


def eigenvalue(n: MultiIndex, alpha: AlphaParams) -> float:
    """Oscillator eigenvalue 2|n| + 2|alpha| + 2d."""
    return 2.0 * n.total + 2.0 * alpha.abs_sum + 2.0 * n.dim


def delta_hermite_1d(n: int, a: float, x) -> np.ndarray:
    """(delta h_n^a)(x) computed analytically from the Laguerre forms.

    delta = T^a + x.  On the even functions h_{2m} this is d/dx + x; on
    the odd h_{2m+1} it is d/dx + x + (2a+1)/x, with the 1/x factor
    cancelled symbolically so x = 0 is regular.  Uses only the Laguerre
    derivative identity, not the ladder relation, so it serves as an
    independent route when testing the latter.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = x * x
    g = np.exp(-0.5 * y)
    m = n // 2
    d = _norm_const(n, a)
    if n % 2 == 0:
        # (d/dx + x) [d g L_m^a(y)] = d g * 2x dL/dy = -2x d g L_{m-1}^{a+1}(y)
        lder = np.array([laguerre_deriv(m, a, yy) for yy in y])
        return d * g * 2.0 * x * lder
    # (d/dx + x + (2a+1)/x) [d g x L_m^{a+1}(y)]
    #   = d g [ (2a+2) L_m^{a+1}(y) + 2 y dL^{a+1}/dy ]
    lval = np.array([laguerre(m, a + 1.0, yy) for yy in y])
    lder = np.array([laguerre_deriv(m, a + 1.0, yy) for yy in y])
    return d * g * ((2.0 * a + 2.0) * lval + 2.0 * y * lder)


def delta_star_hermite_1d(n: int, a: float, x) -> np.ndarray:
    """(delta* h_n^a)(x) via delta* = -delta + 2x."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    base = hermite_fn_all_1d(n, a, x)[n]
    return -delta_hermite_1d(n, a, x) + 2.0 * x * base


def _apply_in_slot(op_1d, n: MultiIndex, alpha: AlphaParams, j: int, pts: np.ndarray) -> np.ndarray:
    val = op_1d(n[j], alpha[j], pts[:, j])
    for i in range(alpha.dim):
        if i != j:
            val = val * hermite_fn_all_1d(n[i], alpha[i], pts[:, i])[n[i]]
    return val


def delta_hermite(n: MultiIndex, alpha: AlphaParams, j: int, x) -> np.ndarray:
    """(delta_j h_n^alpha)(x) on an (npoints, d) array of points."""
    pts = np.atleast_2d(np.asarray(x, dtype=float))
    return _apply_in_slot(delta_hermite_1d, n, alpha, j, pts)


def delta_star_hermite(n: MultiIndex, alpha: AlphaParams, j: int, x) -> np.ndarray:
    """(delta_j^* h_n^alpha)(x) on an (npoints, d) array of points."""
    pts = np.atleast_2d(np.asarray(x, dtype=float))
    return _apply_in_slot(delta_star_hermite_1d, n, alpha, j, pts)


@dataclass(frozen=True)
class HermiteFn:
    """A single basis function with its normalization constants cached."""

    n: MultiIndex
    alpha: AlphaParams
    normalization: tuple[float, ...] = field(init=False)

    def __post_init__(self):
        if self.n.dim != self.alpha.dim:
            raise ValueError("dimension mismatch between n and alpha")
        norms = tuple(_norm_const(self.n[i], self.alpha[i]) for i in range(self.n.dim))
        object.__setattr__(self, "normalization", norms)

    @property
    def eigenvalue(self) -> float:
        return eigenvalue(self.n, self.alpha)

    def __call__(self, x):
        return hermite_fn(self.n, self.alpha, x)
