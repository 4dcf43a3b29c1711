"""Admissibility and regularity analysis of multi-step chains.

A chain is specified by (N, M) and an ordered list of steps (n_i, lambda_i)
with strictly decreasing n_i inside the window [max(N, M), N+M).  Each step
constrains its continuous parameter to a finite union of open intervals,
keyed on the parities of (M, n_i - N) and on the parity of the step index;
a chain is regular when every step parameter sits inside its interval and
the final potential stays confining (N, M >= m+1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import WindowViolation
from .exactpoly import Scalar, rational_from_str, rational_to_str
from .parajacobi import coeff_lambda_star, in_window, require_window

Endpoint = Optional[Fraction]  # None encodes an infinite endpoint


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of disjoint open intervals over the extended line."""

    components: Tuple[Tuple[Endpoint, Endpoint], ...]

    def __post_init__(self):
        comps = []
        for lo, hi in self.components:
            lo = None if lo is None else Fraction(lo)
            hi = None if hi is None else Fraction(hi)
            if lo is not None and hi is not None and not lo < hi:
                raise ValueError(f"empty or inverted interval ({lo}, {hi})")
            comps.append((lo, hi))
        comps.sort(key=lambda c: (c[0] is not None, c[0] if c[0] is not None else 0))
        for (a_lo, a_hi), (b_lo, b_hi) in zip(comps, comps[1:]):
            if a_hi is None or b_lo is None or not a_hi <= b_lo:
                raise ValueError("interval components must be disjoint")
        object.__setattr__(self, "components", tuple(comps))

    def contains(self, x: Scalar) -> bool:
        x = Fraction(x)
        for lo, hi in self.components:
            if (lo is None or lo < x) and (hi is None or x < hi):
                return True
        return False

    def to_json(self) -> list:
        return [
            [
                "-inf" if lo is None else rational_to_str(lo),
                "inf" if hi is None else rational_to_str(hi),
            ]
            for lo, hi in self.components
        ]

    @classmethod
    def from_json(cls, data) -> "IntervalSet":
        comps = []
        for lo, hi in data:
            comps.append(
                (
                    None if lo == "-inf" else rational_from_str(lo),
                    None if hi == "inf" else rational_from_str(hi),
                )
            )
        return cls(tuple(comps))


def interval(lo: Scalar, hi: Scalar) -> IntervalSet:
    return IntervalSet(((Fraction(lo), Fraction(hi)),))


def below(hi: Scalar) -> IntervalSet:
    return IntervalSet(((None, Fraction(hi)),))


def above(lo: Scalar) -> IntervalSet:
    return IntervalSet(((Fraction(lo), None),))


def union(*sets: IntervalSet) -> IntervalSet:
    comps = tuple(c for s in sets for c in s.components)
    return IntervalSet(comps)


@dataclass(frozen=True)
class ChainSpec:
    """(N, M) plus the ordered steps (n_i, lambda_i) of a candidate chain."""

    N: int
    M: int
    steps: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self):
        if self.N < 1 or self.M < 1:
            raise ValueError("N and M must be positive")
        steps = tuple((int(n), Fraction(lam)) for n, lam in self.steps)
        object.__setattr__(self, "steps", steps)

    @property
    def m(self) -> int:
        return len(self.steps)

    @property
    def ns(self) -> tuple:
        return tuple(n for n, _ in self.steps)

    @property
    def lambdas(self) -> tuple:
        return tuple(lam for _, lam in self.steps)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "M": self.M,
            "steps": [{"n": n, "lambda": rational_to_str(lam)} for n, lam in self.steps],
        }

    @classmethod
    def from_json(cls, data) -> "ChainSpec":
        return cls(
            N=data["N"],
            M=data["M"],
            steps=tuple((s["n"], rational_from_str(s["lambda"])) for s in data["steps"]),
        )


def _parity_table(m_parity: int, diff_parity: int, lam_star: Fraction, odd_step: bool) -> IntervalSet:
    if odd_step:
        if (m_parity, diff_parity) == (0, 0):
            return interval(0, lam_star)
        if (m_parity, diff_parity) == (0, 1):
            return union(below(-lam_star), above(0))
        if (m_parity, diff_parity) == (1, 0):
            return union(below(0), above(lam_star))
        return interval(-lam_star, 0)
    if (m_parity, diff_parity) == (0, 0):
        return union(below(0), above(lam_star))
    if (m_parity, diff_parity) == (0, 1):
        return interval(-lam_star, 0)
    if (m_parity, diff_parity) == (1, 0):
        return interval(0, lam_star)
    return union(below(-lam_star), above(0))


def one_step_interval(N: int, M: int, n: int) -> IntervalSet:
    """Admissible open parameter region for a single-step seed."""
    require_window(N, M, n)
    return _parity_table(M % 2, (n - N) % 2, coeff_lambda_star(N, M, n), odd_step=True)


def step_interval(step_index: int, N: int, M: int, n: int) -> IntervalSet:
    """Admissible region for the parameter of step `step_index` (1-based).

    Assumes the previous steps are regular; the table depends only on the
    parity of the step index and on the parities of (M, n - N).
    """
    if step_index < 1:
        raise ValueError("step_index is 1-based")
    if step_index == 1:
        return one_step_interval(N, M, n)
    require_window(N, M, n)
    return _parity_table(
        M % 2, (n - N) % 2, coeff_lambda_star(N, M, n), odd_step=bool(step_index % 2)
    )


@dataclass(frozen=True)
class StepReport:
    step: int
    n: int
    lam: Fraction
    interval: Optional[IntervalSet]
    in_interval: bool

    def to_json(self) -> dict:
        return {
            "step": self.step,
            "n": self.n,
            "lambda": rational_to_str(self.lam),
            "interval": None if self.interval is None else self.interval.to_json(),
            "in_interval": self.in_interval,
        }


@dataclass(frozen=True)
class ChainReport:
    spec: ChainSpec
    steps: Tuple[StepReport, ...]
    ordering_ok: bool
    window_ok: bool
    confinement_ok: bool
    regular: bool

    def to_json(self) -> dict:
        return {
            "N": self.spec.N,
            "M": self.spec.M,
            "steps": [s.to_json() for s in self.steps],
            "ordering_ok": self.ordering_ok,
            "window_ok": self.window_ok,
            "confinement_ok": self.confinement_ok,
            "regular": self.regular,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def validate_chain(spec: ChainSpec) -> ChainReport:
    """Per-step diagnostics; the chain is regular iff every check passes.

    Checks: strictly decreasing n_i, every n_i in the window, every
    lambda_i inside its step interval, and confinement N, M >= m+1.
    Boundary parameter values (0 and +-lambda*) fail because the
    intervals are open.
    """
    N, M, m = spec.N, spec.M, spec.m
    ns = spec.ns
    ordering_ok = all(a > b for a, b in zip(ns, ns[1:]))
    window_ok = all(in_window(N, M, n) for n in ns)
    confinement_ok = m == 0 or (N >= m + 1 and M >= m + 1)
    steps = []
    for idx, (n, lam) in enumerate(spec.steps, start=1):
        if in_window(N, M, n):
            iv = step_interval(idx, N, M, n)
            ok = iv.contains(lam)
        else:
            iv = None
            ok = False
        steps.append(StepReport(step=idx, n=n, lam=lam, interval=iv, in_interval=ok))
    regular = ordering_ok and window_ok and confinement_ok and all(s.in_interval for s in steps)
    return ChainReport(
        spec=spec,
        steps=tuple(steps),
        ordering_ok=ordering_ok,
        window_ok=window_ok,
        confinement_ok=confinement_ok,
        regular=regular,
    )


def require_chain_indices(spec: ChainSpec) -> None:
    """Validate ordering and window only (parameters may be anything)."""
    ns = spec.ns
    for n in ns:
        require_window(spec.N, spec.M, n)
    if not all(a > b for a, b in zip(ns, ns[1:])):
        raise WindowViolation(f"chain degrees must strictly decrease, got {ns}")
