"""Independent oracles: exact eigen-equation residuals, Sturm nodelessness,
a finite-difference Dirichlet eigensolver, and quadrature orthogonality.

The eigen-equation is checked in the z variable.  Substituting
psi = (1-z)^s1 (1+z)^s2 p(z)/W(z) into -d^2/dx^2 + V - E, using
(dz/dx)^2 = 4(1-z^2) and d^2z/dx^2 = -4z, and clearing the gauge factor,
one factor of (1-z^2), and W^3 leaves an exact polynomial; the candidate
is an eigenfunction iff that polynomial is identically zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .chains import ChainSpec, validate_chain
from .errors import EndpointRoot, NonRegularChain, SolverFailure
from .exactpoly import RatPoly, rational_to_str, sturm_root_count
from .extension import _det_cached, eop
from .parajacobi import GaugeFactor
from .tdpt import PotentialExpr, TDPTParams, potential_z, spectrum_levels


@dataclass(frozen=True)
class ResidualReport:
    residual: RatPoly
    is_zero: bool


def schrodinger_residual(
    gauge: GaugeFactor,
    p: RatPoly,
    potential: Union[PotentialExpr, TDPTParams],
    E: Fraction,
) -> ResidualReport:
    """Exact residual polynomial of the eigen-equation for the candidate
    psi = (1-z)^s1 (1+z)^s2 p(z) / W(z), with W the potential's log term.
    """
    if isinstance(potential, TDPTParams):
        potential = potential_z(potential)
    E = Fraction(E)
    s1, s2 = gauge.s1, gauge.s2
    a, b = potential.base.alpha, potential.base.beta
    w = potential.log_term
    z = RatPoly([0, 1])
    omz2 = RatPoly([1, 0, -1])  # 1 - z^2
    opz = RatPoly([1, 1])  # 1 + z
    omz = RatPoly([1, -1])  # 1 - z

    lam_lin = s2 * omz - s1 * opz  # (1-z^2) * d/dz log(gauge)
    gamma = (
        (s1 * s1 - s1) * opz * opz
        + (s2 * s2 - s2) * omz * omz
        - (2 * s1 * s2) * omz2
    )  # (1-z^2)^2 * [ (log gauge)'' + ((log gauge)')^2 ]
    pi_base = (
        2 * (Fraction(a) ** 2 - Fraction(1, 4)) * opz
        + 2 * (Fraction(b) ** 2 - Fraction(1, 4)) * omz
        - Fraction((a + b + 1) ** 2) * omz2
    )  # (1-z^2) * base potential

    p1 = p.derivative()
    p2 = p.derivative(2)
    w1 = w.derivative()
    w2 = w.derivative(2)
    ww = w * w
    cross = p1 * w - p * w1  # numerator of (p/W)'

    residual = (
        -4 * omz2 * omz2 * (p2 * ww - 2 * p1 * w1 * w + p * (2 * w1 * w1 - w2 * w))
        - 8 * omz2 * lam_lin * cross * w
        - 4 * gamma * p * ww
        + 4 * z * omz2 * cross * w
        + 4 * z * lam_lin * p * ww
        + (pi_base + (potential.constant - E) * omz2) * p * ww
        + omz2 * (-8 * omz2 * (w2 * w - w1 * w1) + 8 * z * w1 * w) * p
    )
    return ResidualReport(residual=residual, is_zero=residual.is_zero)


def nodeless(spec: ChainSpec) -> bool:
    """Whether det R has no zero on (-1, 1), by exact Sturm count."""
    det = _det_cached(spec)
    if det(Fraction(-1)) == 0 or det(Fraction(1)) == 0:
        raise EndpointRoot("det R vanishes at an endpoint (boundary-degenerate parameter)")
    return sturm_root_count(det, Fraction(-1), Fraction(1)) == 0


@dataclass(frozen=True)
class SpectrumReport:
    computed: tuple
    expected: tuple
    max_rel_error: float
    grid_size: int

    def levels(self):
        """Per-level (expected, computed, error); error is absolute when the
        expected level is zero, relative otherwise."""
        out = []
        for e, c in zip(self.expected, self.computed):
            err = abs(c - float(e)) if e == 0 else abs(c - float(e)) / abs(float(e))
            out.append((e, c, err))
        return out

    def to_json(self) -> dict:
        return {
            "grid_size": self.grid_size,
            "expected": [rational_to_str(e) for e in self.expected],
            "computed": [repr(c) for c in self.computed],
            "max_rel_error": repr(self.max_rel_error),
        }

    def to_csv(self) -> str:
        lines = ["level,expected,computed,rel_error"]
        for i, (e, c, err) in enumerate(self.levels()):
            lines.append(f"{i},{rational_to_str(e)},{c!r},{err!r}")
        return "\n".join(lines) + "\n"


def fd_spectrum(
    potential: Union[PotentialExpr, TDPTParams],
    grid_size: int,
    num_levels: int,
) -> SpectrumReport:
    """Dirichlet spectrum of -d^2/dx^2 + V on (0, pi/2) by second-order
    central differences on a uniform x grid (singular walls truncated)."""
    if isinstance(potential, TDPTParams):
        potential = potential_z(potential)
    if grid_size < 100:
        raise ValueError("grid_size must be at least 100")
    if num_levels < 1 or num_levels > grid_size:
        raise ValueError("num_levels out of range")
    h = (math.pi / 2) / (grid_size + 1)
    xs = np.arange(1, grid_size + 1) * h
    zs = np.cos(2.0 * xs)
    vfun = potential.float_evaluator()
    vs = np.fromiter((vfun(z) for z in zs), dtype=float, count=grid_size)
    diag = 2.0 / h**2 + vs
    off = np.full(grid_size - 1, -1.0 / h**2)
    try:
        vals = eigh_tridiagonal(
            diag, off, select="i", select_range=(0, num_levels - 1), eigvals_only=True
        )
    except np.linalg.LinAlgError as exc:  # pragma: no cover - solver hiccup
        raise SolverFailure(str(exc)) from exc
    computed = tuple(float(v) for v in vals)
    expected = tuple(spectrum_levels(potential, num_levels))
    rel = [
        abs(c - float(e)) / abs(float(e))
        for e, c in zip(expected, computed)
        if e != 0
    ]
    return SpectrumReport(
        computed=computed,
        expected=expected,
        max_rel_error=max(rel) if rel else float("nan"),
        grid_size=grid_size,
    )


def gram_matrix(spec: ChainSpec, k_set: Sequence[int], quad_order: int) -> np.ndarray:
    """Gram matrix of the family members under the chain's measure, by
    Gauss-Legendre quadrature on (-1, 1)."""
    if quad_order < 64:
        raise ValueError("quad_order must be at least 64")
    report = validate_chain(spec)
    if not report.regular:
        raise NonRegularChain("orthogonality requires a regular chain")
    nodes, weights = np.polynomial.legendre.leggauss(quad_order)
    det = np.polynomial.polynomial.polyval(nodes, _det_cached(spec).float_coeffs())
    N, M, m = spec.N, spec.M, spec.m
    measure = (1 - nodes) ** (N - m) * (1 + nodes) ** (M - m) / det**2
    qvals = [
        np.polynomial.polynomial.polyval(nodes, eop(spec, k).float_coeffs())
        for k in k_set
    ]
    n = len(k_set)
    g = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            g[i, j] = g[j, i] = float(np.sum(weights * qvals[i] * qvals[j] * measure))
    return g


def max_normalized_offdiag(g: np.ndarray) -> float:
    """Largest |G_jk| / sqrt(G_jj G_kk) over j != k (0 for a 1 x 1 matrix)."""
    n = g.shape[0]
    out = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                out = max(out, float(abs(g[i, j])) / math.sqrt(g[i, i] * g[j, j]))
    return out


def orthogonality_check(
    spec: ChainSpec,
    k_set: Sequence[int],
    tol: float = 1e-8,
    quad_order: int = 256,
    max_order: int = 2048,
) -> tuple:
    """(ok, order, max_offdiag): doubles the quadrature order on failure."""
    order = quad_order
    while True:
        g = gram_matrix(spec, k_set, order)
        off = max_normalized_offdiag(g)
        if off < tol or order >= max_order:
            return off < tol, order, off
        order *= 2
