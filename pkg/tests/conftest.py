"""Shared helpers: seeded samplers, chain sweeps, and independent oracles.

Oracles here deliberately avoid the library's own code paths: determinants
by cofactor expansion, Jacobi polynomials by three-term recurrence and by
the alternative factorial-ratio sum, and the eigen-equation residual by
direct rational-function arithmetic.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from pjchain import ChainSpec, RatPoly, step_interval
from pjchain.chains import IntervalSet

SEED = 20240817


def make_rng() -> random.Random:
    return random.Random(SEED)


def rand_fraction(rng: random.Random, num: int = 24, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_nonzero_fraction(rng: random.Random) -> Fraction:
    while True:
        q = rand_fraction(rng)
        if q != 0:
            return q


def rand_poly(rng: random.Random, max_deg: int = 8, allow_zero: bool = False) -> RatPoly:
    deg = rng.randint(-1 if allow_zero else 0, max_deg)
    if deg < 0:
        return RatPoly()
    cs = [rand_fraction(rng) for _ in range(deg + 1)]
    while cs[-1] == 0:
        cs[-1] = rand_fraction(rng)
    return RatPoly(cs)


# ---------------------------------------------------------------------------
# interval samplers
# ---------------------------------------------------------------------------

def inside_samples(iv: IntervalSet, count: int) -> list:
    """`count` rationals strictly inside the interval set, spread over its
    components, deterministic."""
    candidates = []
    for lo, hi in iv.components:
        if lo is not None and hi is not None:
            width = hi - lo
            candidates += [lo + width * Fraction(j, 4) for j in (1, 2, 3)]
        elif lo is None:
            candidates += [hi - j for j in (1, 2, 3)]
        else:
            candidates += [lo + j for j in (1, 2, 3)]
    if len(candidates) <= count:
        return candidates[:count]
    step = Fraction(len(candidates) - 1, count - 1) if count > 1 else Fraction(0)
    return [candidates[int(i * step)] for i in range(count)]


def outside_samples(iv: IntervalSet, count: int) -> list:
    """Rationals strictly outside the closure of the interval set (never a
    boundary point)."""
    comps = iv.components
    pieces = []
    first_lo = comps[0][0]
    if first_lo is not None:
        pieces.append((first_lo - 2, first_lo))
    for (lo_a, hi_a), (lo_b, hi_b) in zip(comps, comps[1:]):
        pieces.append((hi_a, lo_b))
    last_hi = comps[-1][1]
    if last_hi is not None:
        pieces.append((last_hi, last_hi + 2))
    out = []
    for lo, hi in pieces:
        width = hi - lo
        out += [lo + width * Fraction(j, 4) for j in (1, 3)]
    return out[:count] if count < len(out) else out


# ---------------------------------------------------------------------------
# chain sweeps
# ---------------------------------------------------------------------------

def sweep_chain_indices(nm_max: int = 5, m_max: int = 3, nm_min: int = 2):
    """All (N, M, ns) with confinement N, M >= m+1 and strictly decreasing
    window degrees."""
    for N in range(nm_min, nm_max + 1):
        for M in range(nm_min, nm_max + 1):
            window = sorted(range(max(N, M), N + M), reverse=True)
            for m in range(1, m_max + 1):
                if N < m + 1 or M < m + 1:
                    continue
                yield from ((N, M, ns) for ns in combinations(window, m))


def regular_lambda_vectors(N: int, M: int, ns, per_step: int = 3) -> list:
    """`per_step` parameter vectors with every entry inside its step interval."""
    per_col = [
        inside_samples(step_interval(i, N, M, n), per_step)
        for i, n in enumerate(ns, start=1)
    ]
    vectors = []
    for j in range(per_step):
        vectors.append(tuple(col[j % len(col)] for col in per_col))
    return vectors


def regular_lambda_grid(N: int, M: int, ns, per_step: int = 3) -> list:
    """Full cross-product of `per_step` in-interval samples for each step."""
    from itertools import product

    per_col = [
        inside_samples(step_interval(i, N, M, n), per_step)
        for i, n in enumerate(ns, start=1)
    ]
    return list(product(*per_col))


def regular_chain(N: int, M: int, ns, which: int = 0) -> ChainSpec:
    vec = regular_lambda_vectors(N, M, ns, per_step=3)[which]
    return ChainSpec(N, M, tuple(zip(ns, vec)))


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------

def laplace_det(rows) -> RatPoly:
    """Cofactor-expansion determinant (exponential; fine for small tests)."""
    m = len(rows)
    if m == 0:
        return RatPoly([1])

    def rec(rs, cols):
        if len(cols) == 1:
            return rs[0][cols[0]]
        out = RatPoly()
        for idx, c in enumerate(cols):
            minor = rec(rs[1:], cols[:idx] + cols[idx + 1 :])
            term = rs[0][c] * minor
            out = out + term if idx % 2 == 0 else out - term
        return out

    return rec(list(rows), list(range(m)))


def jacobi_recurrence(k: int, alpha: int, beta: int) -> RatPoly:
    """Three-term recurrence for classical Jacobi polynomials."""
    z = RatPoly([0, 1])
    p_prev = RatPoly([1])
    if k == 0:
        return p_prev
    p_cur = RatPoly([Fraction(alpha - beta, 2), Fraction(alpha + beta + 2, 2)])
    for n in range(2, k + 1):
        c1 = 2 * n * (n + alpha + beta) * (2 * n + alpha + beta - 2)
        c2 = 2 * n + alpha + beta - 1
        c3 = (2 * n + alpha + beta) * (2 * n + alpha + beta - 2)
        c4 = alpha * alpha - beta * beta
        c5 = 2 * (n + alpha - 1) * (n + beta - 1) * (2 * n + alpha + beta)
        nxt = (c2 * (c3 * z + RatPoly([c4]))) * p_cur - c5 * p_prev
        p_prev, p_cur = p_cur, nxt * Fraction(1, c1)
    return p_cur


def jacobi_factorial_ratio(k: int, alpha: int, beta: int) -> RatPoly:
    """Alternative explicit sum over (1+z)^j with factorial ratios."""
    one_plus_z = RatPoly([1, 1])
    pref = Fraction(
        (-1) ** k * math.factorial(k + beta),
        math.factorial(k) * math.factorial(k + alpha + beta),
    )
    out = RatPoly()
    for j in range(k + 1):
        c = Fraction(
            (-1) ** j * math.comb(k, j) * math.factorial(k + alpha + beta + j),
            2**j * math.factorial(beta + j),
        )
        out = out + (one_plus_z**j) * c
    return out * pref


class RatFunc:
    """Tiny exact rational-function arithmetic (no simplification)."""

    __slots__ = ("num", "den")

    def __init__(self, num: RatPoly, den: RatPoly = RatPoly([1])):
        self.num = num
        self.den = den

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def eval(self, z: Fraction) -> Fraction:
        return self.num(z) / self.den(z)


def residual_oracle(s1, s2, p: RatPoly, den: RatPoly, base_alpha, base_beta,
                    constant, log_term: RatPoly, E) -> RatFunc:
    """Eigen-equation residual for psi = (1-z)^s1 (1+z)^s2 p/den via the
    logarithmic derivative, as an unreduced rational function of z.

    The potential is base(alpha, beta) + constant + log-derivative terms of
    log_term.  Returns R with psi eigen iff R is the zero rational function.
    """
    one_minus_z2 = RatPoly([1, 0, -1])
    z = RatPoly([0, 1])
    s1, s2 = Fraction(s1), Fraction(s2)
    gauge_log = RatFunc(
        RatPoly([1, 1]) * (-s1) + RatPoly([1, -1]) * s2, one_minus_z2
    )
    phi = gauge_log + RatFunc(
        p.derivative() * den - p * den.derivative(), p * den
    )
    vbase = RatFunc(
        2 * (Fraction(base_alpha) ** 2 - Fraction(1, 4)) * RatPoly([1, 1])
        + 2 * (Fraction(base_beta) ** 2 - Fraction(1, 4)) * RatPoly([1, -1])
        - Fraction((base_alpha + base_beta + 1) ** 2) * one_minus_z2,
        one_minus_z2,
    )
    w, w1, w2 = log_term, log_term.derivative(), log_term.derivative(2)
    vlog = RatFunc(
        -8 * one_minus_z2 * (w2 * w - w1 * w1) + 8 * z * w1 * w, w * w
    )
    const = RatFunc(RatPoly([Fraction(constant) - Fraction(E)]))
    minus4 = RatFunc(one_minus_z2 * Fraction(-4))
    fourz = RatFunc(z * Fraction(4))
    return minus4 * (phi.derivative() + phi * phi) + fourz * phi + vbase + vlog + const
