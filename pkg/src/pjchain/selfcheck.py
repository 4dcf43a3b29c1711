"""Built-in identity and oracle suite behind the `selfcheck` CLI command.

A fast, fixed subset of the full test suite: worked-example exactness,
coefficient identities over a small sweep, boundary closed forms against
direct Wronskian evaluation, eigen-equation residuals, and the Sturm
nodelessness oracle.  Every check prints one line; any failure flips the
exit status.
"""

from __future__ import annotations

from fractions import Fraction

from .chains import ChainSpec, one_step_interval, step_interval, validate_chain
from .exactpoly import RatPoly, wronskian
from .extension import boundary_det_closed_form, eop, extended_potential, r_matrix
from .parajacobi import (
    PJParams,
    boundary_values,
    coeff_a,
    coeff_b,
    coeff_lambda_star,
    in_window,
    jacobi_poly,
    para_jacobi,
    pj_poly,
)
from .tdpt import TDPTParams, energy, ground_state_gauge, shape_invariance_check
from .verify import nodeless, schrodinger_residual


def _checks():
    F = Fraction
    lam = F(5, 7)

    yield "worked example: p4 coefficients", pj_poly(3, 3, 4, lam) == RatPoly(
        [-3, -8 * (lam + 1), -6, 0, 1]
    )
    yield "worked example: p3 coefficients", pj_poly(3, 3, 3, lam) == RatPoly(
        [1 - F(2, 3) * lam, 3, 3 - 2 * lam, 1]
    )
    yield "worked example: p5 coefficients", pj_poly(3, 3, 5, lam) == RatPoly(
        [F(8, 3) - 32 * lam, 5, 0, F(-10, 3), 0, 1]
    )
    yield "worked example: lambda thresholds", (
        coeff_lambda_star(3, 3, 3),
        coeff_lambda_star(3, 3, 4),
        coeff_lambda_star(3, 3, 5),
    ) == (F(3), F(2), F(1, 6))
    yield "worked example: step intervals", (
        one_step_interval(3, 3, 4).to_json(),
        step_interval(2, 3, 3, 3).to_json(),
    ) == ([["-2", "0"]], [["0", "3"]])

    ok = True
    for N in (2, 3, 4):
        for M in (2, 3, 4):
            for n in range(max(N, M), N + M):
                for lv in (F(1, 3), F(-5, 2)):
                    p = pj_poly(N, M, n, lv)
                    ok = ok and p.coeffs[-1] == 1
                    bm, bp = boundary_values(PJParams(N, M, n, lv))
                    ok = ok and p(F(-1)) == bm and p(F(1)) == bp
                    if N > 1 and M > 1 and in_window(N - 1, M - 1, n - 1):
                        rhs = n * pj_poly(N - 1, M - 1, n - 1, coeff_a(N, M, n) * lv)
                        ok = ok and p.derivative() == rhs
    yield "identity sweep (monic, boundary, derivative ladder)", ok

    ok = True
    for spec in (
        ChainSpec(3, 3, ((4, F(-1)), (3, F(1)))),
        ChainSpec(4, 3, ((5, F(3, 7)), (4, F(-2, 5)))),
        ChainSpec(4, 4, ((6, F(2)), (5, F(-1, 3)), (4, F(7, 5)))),
    ):
        det = r_matrix(spec).det()
        ok = ok and det == wronskian([pj_poly(spec.N, spec.M, n, l) for n, l in spec.steps])
        for side in (1, -1):
            ok = ok and det(Fraction(side)) == boundary_det_closed_form(spec, side)
    yield "boundary closed forms vs direct Wronskian", ok

    spec = ChainSpec(3, 3, ((4, F(-1)), (3, F(1))))
    yield "worked example: chain validates regular", validate_chain(spec).regular
    yield "worked example: det R nodeless", nodeless(spec)
    pot = extended_potential(spec)
    yield "worked example: potential value at z=0", pot.eval_exact(0) == F(-2398, 81)

    ok = True
    for k in (-5, -4, 0, 1):
        rep = schrodinger_residual(
            ground_state_gauge(TDPTParams(1, 1)), eop(spec, k), pot, energy(k, 3, 3)
        )
        ok = ok and rep.is_zero
    yield "worked example: eigen-equation residuals vanish", ok

    rep = schrodinger_residual(
        ground_state_gauge(TDPTParams(3, 3)), jacobi_poly(2, 3, 3),
        TDPTParams(3, 3), energy(2, 3, 3),
    )
    yield "base potential bound state residual vanishes", rep.is_zero
    yield "shape invariance at (3,3) and (2,4)", (
        shape_invariance_check(3, 3) and shape_invariance_check(2, 4)
    )
    yield "shape invariance negative control", not shape_invariance_check(
        3, 3, energy_shift=Fraction(0)
    )
    yield "seed lives below ground: b and g values", (
        coeff_b(3, 3, 3) == F(8, 3) and para_jacobi(PJParams(3, 3, 3, F(2)))(F(1)) == F(8, 3)
    )


def run_selfcheck():
    lines = []
    ok_all = True
    for name, ok in _checks():
        lines.append(("ok   " if ok else "FAIL ") + name)
        ok_all = ok_all and ok
    lines.append("selfcheck: " + ("all checks passed" if ok_all else "FAILURES detected"))
    return ok_all, lines
