"""Trigonometric Poschl-Teller potential on (0, pi/2) and its spectrum.

All algebra is done in the variable z = cos 2x, where the potential is

    V(z; alpha, beta) = 2(alpha+1/2)(alpha-1/2)/(1-z)
                      + 2(beta+1/2)(beta-1/2)/(1+z) - (alpha+beta+1)^2,

with the ground level pinned to zero.  The chain rule constants
(dz/dx)^2 = 4(1-z^2) and d^2z/dx^2 = -4z are encapsulated here once, so
every downstream check stays exact.  Extended potentials differ from the
base one by a constant and by log-derivative terms of a polynomial, which
is what PotentialExpr captures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Optional

from .errors import PoleAtZ
from .exactpoly import ONE, RatPoly, Scalar, rational_to_str
from .parajacobi import GaugeFactor

if TYPE_CHECKING:  # pragma: no cover
    from .chains import ChainSpec


@dataclass(frozen=True)
class TDPTParams:
    """Potential parameters; |alpha|, |beta| >= 1 in all uses here."""

    alpha: int
    beta: int

    def __post_init__(self):
        if abs(self.alpha) < 1 or abs(self.beta) < 1:
            raise ValueError(f"need |alpha|, |beta| >= 1, got ({self.alpha}, {self.beta})")


@dataclass(frozen=True)
class EnergyLevel:
    """Spectral index (possibly negative) and its exact energy."""

    k: int
    value: Fraction

    @classmethod
    def of(cls, k: int, alpha: int, beta: int) -> "EnergyLevel":
        return cls(k=k, value=energy(k, alpha, beta))


@dataclass(frozen=True)
class PotentialExpr:
    """Base potential + constant + log-derivative terms of a polynomial.

    Evaluation at z with log_term(z) != 0 is exact:

        base(z) + constant - 8(1-z^2) (log W)'' + 8z (log W)',  W = log_term.
    """

    base: TDPTParams
    constant: Fraction
    log_term: RatPoly = field(default=ONE)
    chain: Optional["ChainSpec"] = None

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))

    def eval_exact(self, z: Scalar) -> Fraction:
        z = Fraction(z)
        if z == 1 or z == -1:
            raise PoleAtZ("base potential is singular at z = +-1")
        w = self.log_term(z)
        if w == 0:
            raise PoleAtZ(f"log-derivative term has a pole at z = {z}")
        a, b = self.base.alpha, self.base.beta
        val = (
            2 * (Fraction(a) ** 2 - Fraction(1, 4)) / (1 - z)
            + 2 * (Fraction(b) ** 2 - Fraction(1, 4)) / (1 + z)
            - Fraction((a + b + 1) ** 2)
            + self.constant
        )
        if self.log_term.degree > 0:
            w1 = self.log_term.derivative()(z)
            w2 = self.log_term.derivative(2)(z)
            val += (-8 * (1 - z * z) * (w2 * w - w1 * w1) + 8 * z * w1 * w) / (w * w)
        return val

    def float_evaluator(self):
        """Fast float evaluation z -> V(z); coefficients converted once."""
        a, b = self.base.alpha, self.base.beta
        ca = 2.0 * (a * a - 0.25)
        cb = 2.0 * (b * b - 0.25)
        const = float(self.constant) - (a + b + 1) ** 2
        w0 = self.log_term.float_coeffs()
        w1 = self.log_term.derivative().float_coeffs()
        w2 = self.log_term.derivative(2).float_coeffs()
        has_log = self.log_term.degree > 0

        def horner(cs, x):
            out = 0.0
            for c in reversed(cs):
                out = out * x + c
            return out

        def evaluate(z: float) -> float:
            val = ca / (1.0 - z) + cb / (1.0 + z) + const
            if has_log:
                w = horner(w0, z)
                d1 = horner(w1, z)
                d2 = horner(w2, z)
                val += (-8.0 * (1.0 - z * z) * (d2 * w - d1 * d1) + 8.0 * z * d1 * w) / (w * w)
            return val

        return evaluate

    def to_json(self) -> dict:
        out = {
            "base": {"alpha": self.base.alpha, "beta": self.base.beta},
            "constant": rational_to_str(self.constant),
            "log_term": self.log_term.to_json(),
        }
        out["chain"] = self.chain.to_json() if self.chain is not None else None
        return out


def potential_z(p: TDPTParams) -> PotentialExpr:
    """The base potential as a PotentialExpr (no extension terms)."""
    return PotentialExpr(base=p, constant=Fraction(0))


def energy(k: int, alpha: int, beta: int) -> Fraction:
    """(alpha+beta+2k+1)^2 - (alpha+beta+1)^2 = 4k(alpha+beta+1+k)."""
    return Fraction(4 * k * (alpha + beta + 1 + k))


def ground_state_gauge(p: TDPTParams) -> GaugeFactor:
    """Exponents ((alpha+1/2)/2, (beta+1/2)/2) of the nodeless gauge factor.

    With negated parameters (-N, -M) this yields the gauge of the
    below-ground seed solutions.
    """
    return GaugeFactor(Fraction(2 * p.alpha + 1, 4), Fraction(2 * p.beta + 1, 4))


def _partial_fractions(alpha: int, beta: int) -> tuple:
    """(coefficient of 1/(1-z), coefficient of 1/(1+z), constant term)."""
    return (
        2 * (Fraction(alpha) ** 2 - Fraction(1, 4)),
        2 * (Fraction(beta) ** 2 - Fraction(1, 4)),
        -Fraction((alpha + beta + 1) ** 2),
    )


def shape_invariance_check(N: int, M: int, energy_shift: Optional[Fraction] = None) -> bool:
    """Whether one below-ground step reproduces the (N-1, M-1) potential.

    Compares V(z;N,M) - 2 (log psi_seed)'' (second derivative taken in x,
    expressed in z) against V(z;N-1,M-1) + E, with E the one-step energy
    shift by default; passing a wrong shift turns the identity false.
    """
    if N < 2 or M < 2:
        raise ValueError("need N, M >= 2 so the shifted parameters stay positive")
    shift = energy(-1, N, M) if energy_shift is None else Fraction(energy_shift)
    gauge = ground_state_gauge(TDPTParams(-N, -M))
    # -2 d^2/dx^2 log[(1-z)^s1 (1+z)^s2] collapses to 8 s1/(1-z) + 8 s2/(1+z)
    lhs = _partial_fractions(N, M)
    lhs = (lhs[0] + 8 * gauge.s1, lhs[1] + 8 * gauge.s2, lhs[2])
    rhs = _partial_fractions(N - 1, M - 1)
    rhs = (rhs[0], rhs[1], rhs[2] + shift)
    return lhs == rhs


def spectrum_levels(potential: PotentialExpr, count: int) -> list:
    """Lowest `count` exact energies of the potential, ascending.

    For an extension the level set is the base spectrum of the original
    (N, M) parameters plus one added level per chain step.
    """
    if count < 1:
        return []
    if potential.chain is None:
        a, b = potential.base.alpha, potential.base.beta
        return [energy(k, a, b) for k in range(count)]
    chain = potential.chain
    vals = [energy(-n - 1, chain.N, chain.M) for n, _ in chain.steps]
    vals += [energy(k, chain.N, chain.M) for k in range(count)]
    vals.sort()
    return vals[:count]
