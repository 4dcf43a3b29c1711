"""Para-Jacobi polynomials and classical Jacobi polynomials.

For positive integers N, M and a degree n in the window
max(N, M) <= n < N + M, the Jacobi differential equation at negative
integer parameters (-N, -M) has a full polynomial solution space.  The
monic one-parameter family p_n(z; lambda) spanning it (the para-Jacobi
polynomial of Calogero and Yi) is linear in the free parameter:

    p_n(z; lambda) = base(z) + lambda * tail(z),

with both parts built here from explicit factorial sums.  The module also
exposes the coefficient ladder attached to the family: the derivation
constant a_n, the boundary constant b_n, the positive threshold
lambda*_n that bounds the admissible parameter intervals, and the affine
map g_n driving the z -> -z symmetry.

Boundary values: p_n(-1; lambda) = (-1)^n lambda b_n^{(N,M)} and
p_n(+1; lambda) = b_n^{(M,N)} g_n^{(N,M)}(lambda).  (Note the swapped
superscript order in the +1 value; the two agree when N = M.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NegativeFactorial, WindowViolation
from .exactpoly import RatPoly, Scalar


@dataclass(frozen=True)
class PJParams:
    """Parameters (N, M, n, lambda) of one para-Jacobi polynomial."""

    N: int
    M: int
    n: int
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        require_window(self.N, self.M, self.n)


@dataclass(frozen=True)
class GaugeFactor:
    """Exponents (s1, s2) of a gauge factor (1-z)^s1 (1+z)^s2."""

    s1: Fraction
    s2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s1", Fraction(self.s1))
        object.__setattr__(self, "s2", Fraction(self.s2))


def in_window(N: int, M: int, n: int) -> bool:
    return max(N, M) <= n < N + M


def require_window(N: int, M: int, n: int) -> None:
    if N < 1 or M < 1:
        raise WindowViolation(f"N and M must be positive integers, got ({N}, {M})")
    if not in_window(N, M, n):
        raise WindowViolation(
            f"degree n={n} outside the window [max({N},{M}), {N + M}) = [{max(N, M)}, {N + M})"
        )


def _fact(k: int) -> int:
    if k < 0:
        raise NegativeFactorial(f"factorial of negative integer {k}")
    return math.factorial(k)


@lru_cache(maxsize=None)
def _one_plus_z_pow(k: int) -> RatPoly:
    return RatPoly([math.comb(k, i) for i in range(k + 1)])


@lru_cache(maxsize=None)
def para_jacobi_parts(N: int, M: int, n: int) -> tuple:
    """(base, tail) with p_n(z; lambda) = base + lambda * tail, both exact.

    base is monic of degree n; tail has degree N + M - n - 1 < n.
    """
    require_window(N, M, n)
    theta1 = RatPoly()
    for k in range(M, n + 1):
        c = Fraction(
            (-1) ** k * _fact(n - M - N + k),
            2**k * _fact(k) * _fact(k - M) * _fact(n - k),
        )
        theta1 = theta1 + _one_plus_z_pow(k) * c
    theta2 = RatPoly()
    for k in range(0, N + M - n):
        c = Fraction(
            (-1) ** k * _fact(M - 1 - k),
            2**k * _fact(k) * _fact(N + M - n - 1 - k) * _fact(n - k),
        )
        theta2 = theta2 + _one_plus_z_pow(k) * c
    c1 = Fraction((-2) ** n * _fact(n - M) * _fact(n), _fact(2 * n - M - N))
    c2 = Fraction((-2) ** n * _fact(2 * n - M - N + 1) * _fact(M + N - n - 1), _fact(n - N))
    return theta1 * c1, theta2 * c2


def para_jacobi(p: PJParams) -> RatPoly:
    """The monic degree-n para-Jacobi polynomial at the given parameter."""
    base, tail = para_jacobi_parts(p.N, p.M, p.n)
    return base + tail * p.lam


def pj_poly(N: int, M: int, n: int, lam: Scalar) -> RatPoly:
    """Shorthand for para_jacobi(PJParams(N, M, n, lam))."""
    return para_jacobi(PJParams(N, M, n, Fraction(lam)))


@lru_cache(maxsize=None)
def jacobi_poly(k: int, alpha: int, beta: int) -> RatPoly:
    """Classical Jacobi polynomial P_k^(alpha, beta) with exact coefficients.

    Built from the binomial sum
    2^-k sum_j (-1)^(k-j) C(k+alpha, j) C(k+beta, k-j) (1-z)^(k-j) (1+z)^j,
    valid for integer alpha, beta >= 0.
    """
    if k < 0:
        raise ValueError("Jacobi degree must be nonnegative")
    if alpha < 0 or beta < 0:
        raise ValueError(f"jacobi_poly supports integer alpha, beta >= 0, got ({alpha}, {beta})")
    one_minus_z = RatPoly([1, -1])
    out = RatPoly()
    for j in range(k + 1):
        c = Fraction((-1) ** (k - j) * math.comb(k + alpha, j) * math.comb(k + beta, k - j), 2**k)
        out = out + (one_minus_z ** (k - j)) * _one_plus_z_pow(j) * c
    return out


def coeff_a(N: int, M: int, n: int) -> Fraction:
    """Parameter rescaling constant (M+N-n-1)/n under one differentiation."""
    if n < 1:
        raise ValueError("coeff_a needs n >= 1")
    return Fraction(M + N - n - 1, n)


def coeff_b(N: int, M: int, n: int) -> Fraction:
    """Boundary constant 2^n (2n-N-M+1)! (M-1)! / (n! (n-N)!)."""
    return Fraction(
        2**n * _fact(2 * n - N - M + 1) * _fact(M - 1),
        _fact(n) * _fact(n - N),
    )


def coeff_lambda_star(N: int, M: int, n: int) -> Fraction:
    """Positive threshold bounding the admissible parameter intervals."""
    return Fraction(
        _fact(n) * _fact(n - M) * _fact(n - N),
        _fact(2 * n - N - M) * _fact(2 * n - N - M + 1) * _fact(N + M - n - 1),
    )


def affine_g(N: int, M: int, n: int, lam: Scalar) -> Fraction:
    """Affine map (-1)^(n-M) ((-1)^(n-N+1) lambda + lambda*_n)."""
    lam = Fraction(lam)
    return Fraction((-1) ** (n - M)) * (
        Fraction((-1) ** (n - N + 1)) * lam + coeff_lambda_star(N, M, n)
    )


def boundary_values(p: PJParams) -> tuple:
    """Closed-form values (p(-1), p(+1)).

    The +1 value uses the (M, N)-ordered boundary constant; the two
    orderings coincide for N = M but differ otherwise, as direct
    evaluation of the polynomial shows.
    """
    minus = Fraction((-1) ** p.n) * p.lam * coeff_b(p.N, p.M, p.n)
    plus = coeff_b(p.M, p.N, p.n) * affine_g(p.N, p.M, p.n, p.lam)
    return minus, plus
