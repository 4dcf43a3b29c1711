"""Multi-step extension objects: seed matrix, potentials, eigenfamilies.

The m seed polynomials and their derivatives fill an m x m matrix R whose
determinant is the chain Wronskian in z.  Rows 2..m are obtained by exact
differentiation of row 1, which is always well defined; re-instantiating
the shifted one-parameter family out of its window never happens here, so
the derivative ladder identity stays a checkable property rather than a
construction dependency.

det R evaluated at the endpoints has closed forms.  At z = -1:

    lam_1..lam_m (-1)^(sum n_i + m(m-1)/2) prod b_{n_i}^{(N,M)}
        / [2^(m(m-1)/2) (M-1)^(m-1) (M-2)^(m-2) ... (M-m+1)] * D,

and at z = +1 the mirrored form with b_{n_i}^{(M,N)}, the affine factors
((-1)^(n_i-N+1) lam_i + lam*_i), sign (-1)^(sum n_i - mM), and
(N-1)^(m-1) ... (N-m+1) in the denominator.  D is the m x m determinant
with entries (n_j)_k (N+M-n_j-1)_k (falling factorials), k = 0..m-1.
Note the b superscript order and the denominator anchor both swap between
the endpoints; the two variants coincide only when N = M.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .chains import ChainSpec, require_chain_indices, validate_chain
from .errors import BadIndex, DegenerateDenominator, IrregularChain, PoleAtZ, WrongArity
from .exactpoly import (
    ONE_MINUS_Z2,
    RatPoly,
    Scalar,
    det_bareiss,
    det_rational,
    falling_factorial,
)
from .parajacobi import GaugeFactor, coeff_a, coeff_b, coeff_lambda_star, jacobi_poly, pj_poly
from .tdpt import PotentialExpr, TDPTParams, energy, ground_state_gauge


def coeff_A(N: int, M: int, n_j: int, k: int) -> Fraction:
    """Parameter rescaling after k differentiations: prod of the one-step
    constants along the ladder; equals (N+M-n_j-1)_k / (n_j)_k."""
    if not 0 <= k <= n_j:
        raise ValueError(f"need 0 <= k <= n_j, got k={k}, n_j={n_j}")
    out = Fraction(1)
    for i in range(k):
        out *= coeff_a(N - i, M - i, n_j - i)
    return out


@dataclass(frozen=True)
class RMatrix:
    """Seed polynomials and their derivative rows; det is the Wronskian."""

    spec: ChainSpec
    entries: Tuple[Tuple[RatPoly, ...], ...]

    def det(self) -> RatPoly:
        return _det_cached(self.spec)

    def extended_rows(self, extra: int) -> Tuple[Tuple[RatPoly, ...], ...]:
        """Rows continued by further differentiation (for bordered minors)."""
        rows = list(self.entries)
        if not rows:
            rows = [()]
        for _ in range(extra):
            rows.append(tuple(p.derivative() for p in rows[-1]))
        return tuple(rows[: len(self.entries) + extra])


@lru_cache(maxsize=None)
def r_matrix(spec: ChainSpec) -> RMatrix:
    """The m x m grid; row 1 holds the seeds, row i the (i-1)-th derivatives."""
    require_chain_indices(spec)
    if spec.m == 0:
        return RMatrix(spec=spec, entries=())
    seeds = tuple(pj_poly(spec.N, spec.M, n, lam) for n, lam in spec.steps)
    rows = [seeds]
    for _ in range(spec.m - 1):
        rows.append(tuple(p.derivative() for p in rows[-1]))
    return RMatrix(spec=spec, entries=tuple(rows))


@lru_cache(maxsize=None)
def _det_cached(spec: ChainSpec) -> RatPoly:
    return det_bareiss(r_matrix(spec).entries)


def _denominator_ladder(base: int, m: int) -> Fraction:
    out = Fraction(1)
    for j in range(1, m):
        out *= Fraction(base - j) ** (m - j)
    return out


def _det_D(N: int, M: int, ns) -> Fraction:
    rows = [
        [falling_factorial(n, k) * falling_factorial(N + M - n - 1, k) for n in ns]
        for k in range(len(ns))
    ]
    return det_rational(rows)


def boundary_det_closed_form(spec: ChainSpec, side: int) -> Fraction:
    """Closed-form value of det R at z = side (+1 or -1)."""
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    N, M, m = spec.N, spec.M, spec.m
    if m == 0:
        return Fraction(1)
    anchor = M if side == -1 else N
    if anchor < m:
        raise DegenerateDenominator(
            f"closed form at side {side} divides by zero for {'M' if side == -1 else 'N'} < m"
        )
    require_chain_indices(spec)
    ns = spec.ns
    D = _det_D(N, M, ns)
    denom = Fraction(2) ** (m * (m - 1) // 2) * _denominator_ladder(anchor, m)
    if side == -1:
        val = Fraction((-1) ** (sum(ns) + m * (m - 1) // 2)) / denom * D
        for n, lam in spec.steps:
            val *= lam * coeff_b(N, M, n)
        return val
    val = Fraction((-1) ** (sum(ns) - m * M)) / denom * D
    for n, lam in spec.steps:
        val *= coeff_b(M, N, n) * (
            Fraction((-1) ** (n - N + 1)) * lam + coeff_lambda_star(N, M, n)
        )
    return val


def extended_potential(spec: ChainSpec) -> PotentialExpr:
    """Potential after the m-step chain: base (N-m, M-m), additive constant
    equal to the accumulated energy shift, log-derivative terms of det R."""
    report = validate_chain(spec)
    if not report.regular:
        raise IrregularChain(
            "chain fails regularity validation: " + report.to_json_str()
        )
    return PotentialExpr(
        base=TDPTParams(spec.N - spec.m, spec.M - spec.m),
        constant=energy(-spec.m, spec.N, spec.M),
        log_term=_det_cached(spec),
        chain=spec,
    )


def _border_column(spec: ChainSpec, k: int) -> list:
    """Last column of the bordered matrix for the degree-k family member."""
    N, M, m = spec.N, spec.M, spec.m
    col = []
    for i in range(1, m + 2):
        l = i - 1
        factor = Fraction((-2) ** l) * falling_factorial(k + l, l)
        col.append((ONE_MINUS_Z2 ** (m - l)) * jacobi_poly(k + l, N - l, M - l) * factor)
    return col


def eop(spec: ChainSpec, k: int) -> RatPoly:
    """Member Q_k of the orthogonal family attached to the chain.

    For k >= 0 this is the (m+1) x (m+1) bordered determinant whose first
    m columns are the derivative ladder of the seeds and whose last column
    carries the gauge-stripped derivatives of the classical eigenfunction.
    For k = -n_i - 1 it is the minor of R with the last row and the i-th
    column removed (1 when m = 1).
    """
    N, M, m = spec.N, spec.M, spec.m
    require_chain_indices(spec)
    if k >= 0:
        rows = r_matrix(spec).extended_rows(1)
        border = _border_column(spec, k)
        grid = [list(rows[i]) + [border[i]] for i in range(m + 1)]
        return det_bareiss(grid)
    matches = [i for i, (n, _) in enumerate(spec.steps) if k == -n - 1]
    if not matches:
        raise BadIndex(f"negative index {k} is not -n_i - 1 for any chain step")
    i = matches[0]
    rows = r_matrix(spec).entries
    minor = [
        [rows[r][c] for c in range(m) if c != i]
        for r in range(m - 1)
    ]
    return det_bareiss(minor)


def two_step_tuv(spec: ChainSpec) -> tuple:
    """The three quadratic seed combinations of a two-step chain.

    Built from the derivative-shifted seed factors exactly as displayed:
    T = n2 p1 S2' - n1 S1' p2 and its one- and two-derivative analogues,
    where S_j^(s) is the s-times shifted factor p^{(s)}/(n)_s.  T equals
    det R.
    """
    if spec.m != 2:
        raise WrongArity(f"two_step_tuv needs a 2-step chain, got m={spec.m}")
    require_chain_indices(spec)
    (n1, lam1), (n2, lam2) = spec.steps
    p1 = pj_poly(spec.N, spec.M, n1, lam1)
    p2 = pj_poly(spec.N, spec.M, n2, lam2)

    def shifted(p: RatPoly, n: int, s: int) -> RatPoly:
        return p.derivative(s) * (1 / falling_factorial(n, s))

    s1_1, s1_2 = shifted(p1, n1, 1), shifted(p1, n1, 2)
    s2_1, s2_2 = shifted(p2, n2, 1), shifted(p2, n2, 2)
    t = n2 * p1 * s2_1 - n1 * s1_1 * p2
    u = n2 * (n2 - 1) * p1 * s2_2 - n1 * (n1 - 1) * s1_2 * p2
    v = n1 * n2 * (n2 - 1) * s1_1 * s2_2 - n1 * (n1 - 1) * n2 * s1_2 * s2_1
    return t, u, v


def measure_weight(spec: ChainSpec, z: Scalar) -> Fraction:
    """(1-z)^(N-m) (1+z)^(M-m) / det R(z)^2 at a rational z in (-1, 1)."""
    z = Fraction(z)
    if not -1 < z < 1:
        raise ValueError("weight is defined on the open interval (-1, 1)")
    w = _det_cached(spec)(z)
    if w == 0:
        raise PoleAtZ(f"det R vanishes at z = {z}")
    N, M, m = spec.N, spec.M, spec.m
    return (1 - z) ** (N - m) * (1 + z) ** (M - m) / (w * w)


@dataclass(frozen=True)
class EigenParts:
    """Gauge factor, polynomial numerator, polynomial denominator, energy."""

    gauge: GaugeFactor
    numerator: RatPoly
    denominator: RatPoly
    energy: Fraction


def eigenfunction(spec: ChainSpec, k: int) -> EigenParts:
    """Factored eigenstate psi_k = gauge * Q_k / det R of the extension."""
    report = validate_chain(spec)
    if not report.regular:
        raise IrregularChain("eigenfunctions require a regular chain")
    return EigenParts(
        gauge=ground_state_gauge(TDPTParams(spec.N - spec.m, spec.M - spec.m)),
        numerator=eop(spec, k),
        denominator=_det_cached(spec),
        energy=energy(k, spec.N, spec.M),
    )


@dataclass(frozen=True)
class EOPFamily:
    """The exceptional orthogonal family attached to a chain."""

    spec: ChainSpec

    @property
    def negative_indices(self) -> tuple:
        return tuple(-n - 1 for n, _ in self.spec.steps)

    @property
    def measure_exponents(self) -> tuple:
        return (self.spec.N - self.spec.m, self.spec.M - self.spec.m)

    def polynomial(self, k: int) -> RatPoly:
        return eop(self.spec, k)

    def weight(self, z: Scalar) -> Fraction:
        return measure_weight(self.spec, z)

    def degree(self, k: int) -> int:
        return self.polynomial(k).degree

    def codimension(self) -> int:
        """Number of degrees missing from the family's degree sequence.

        Degrees for k >= 0 are consecutive from deg Q_0 upward, so the
        gaps are the degrees below deg Q_0 not hit by the added members.
        """
        d0 = self.degree(0)
        neg_degrees = {self.degree(k) for k in self.negative_indices}
        return d0 - sum(1 for d in neg_degrees if 0 <= d < d0)

    def to_json(self) -> dict:
        return {
            "chain": self.spec.to_json(),
            "negative_indices": list(self.negative_indices),
            "measure_exponents": list(self.measure_exponents),
            "weight_denominator": _det_cached(self.spec).to_json(),
            "codimension": self.codimension(),
        }
