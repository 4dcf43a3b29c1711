"""Command-line front end.

Subcommands: pj, regularity, extend, eop, spectrum, orthogonality, plot,
selfcheck.  Rationals on the command line are "p/q" or decimal strings and
are converted exactly; every emitted float is the double nearest to the
exact rational value, printed with repr (shortest round-trip), so output
is byte-identical across runs.

Exit status: 0 on success, 1 on domain errors (reported as structured
JSON diagnostics on stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .chains import ChainSpec, step_interval, validate_chain
from .errors import (
    BadIndex,
    DegenerateDenominator,
    EndpointRoot,
    IrregularChain,
    NegativeFactorial,
    PoleAtZ,
    SweepOutsideRegularity,
    WindowViolation,
    WrongArity,
    ZeroPolynomial,
)
from .exactpoly import rational_from_str, rational_to_str
from .extension import EOPFamily, eop, extended_potential
from .parajacobi import PJParams, para_jacobi
from .verify import fd_spectrum, gram_matrix, max_normalized_offdiag

_DOMAIN_ERRORS = (
    WindowViolation,
    NegativeFactorial,
    ZeroPolynomial,
    EndpointRoot,
    DegenerateDenominator,
    IrregularChain,
    BadIndex,
    WrongArity,
    PoleAtZ,
    SweepOutsideRegularity,
    ValueError,
)

# z samples stay clear of the singular endpoints by 1/1000 of the interval
_Z_MARGIN = Fraction(2, 1000)


def _rat(s: str) -> Fraction:
    try:
        return rational_from_str(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {s!r}") from exc


def _int_list(s: str) -> list:
    return [int(tok) for tok in s.split(",") if tok.strip()]


def _rat_list(s: str) -> list:
    return [_rat(tok) for tok in s.split(",") if tok.strip()]


def _chain_spec(args) -> ChainSpec:
    ns = args.chain
    lams = args.lambdas
    if len(ns) != len(lams):
        raise ValueError(
            f"--chain lists {len(ns)} steps but --lambdas lists {len(lams)} values"
        )
    return ChainSpec(N=args.N, M=args.M, steps=tuple(zip(ns, lams)))


def _emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_json(obj, path) -> None:
    _emit(json.dumps(obj, indent=2) + "\n", path)


def _z_samples(samples: int) -> list:
    """Exact rational z grid on (-1, 1), endpoints pulled in by the margin."""
    if samples < 1:
        raise ValueError("--samples must be positive")
    lo = -1 + _Z_MARGIN
    hi = 1 - _Z_MARGIN
    if samples == 1:
        return [Fraction(0)]
    step = (hi - lo) / (samples - 1)
    return [lo + i * step for i in range(samples)]


def _float_of(q: Fraction) -> str:
    return repr(float(q))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pjchain",
        description="Exact multi-step rational extensions of the trigonometric "
        "Poschl-Teller potential and their orthogonal eigenfamilies.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_nm(p):
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--M", type=int, required=True)

    def add_chain(p, lambdas_required=True):
        add_nm(p)
        p.add_argument("--chain", type=_int_list, required=True,
                       help="comma-separated step degrees, strictly decreasing")
        p.add_argument("--lambdas", type=_rat_list, required=lambdas_required,
                       help="comma-separated step parameters (p/q or decimal)")

    def add_output(p):
        p.add_argument("--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("pj", help="evaluate one seed polynomial")
    add_nm(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", type=_rat, required=True)
    add_output(p)

    p = sub.add_parser("regularity", help="admissible parameter intervals per step")
    add_chain(p, lambdas_required=False)
    add_output(p)

    p = sub.add_parser("extend", help="build the extended potential")
    add_chain(p)
    p.add_argument("--z", type=_rat, default=None, help="evaluate at one rational z")
    p.add_argument("--plot", action="store_true", help="emit CSV samples over z")
    p.add_argument("--samples", type=int, default=500)
    add_output(p)

    p = sub.add_parser("eop", help="one member of the orthogonal family")
    add_chain(p)
    p.add_argument("--k", type=int, required=True)
    add_output(p)

    p = sub.add_parser("spectrum", help="finite-difference Dirichlet spectrum")
    add_chain(p)
    p.add_argument("--grid", type=int, default=4000)
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    add_output(p)

    p = sub.add_parser("orthogonality", help="Gram matrix of family members")
    add_chain(p)
    p.add_argument("--kset", type=_int_list, required=True)
    p.add_argument("--quad-order", type=int, default=256)
    add_output(p)

    p = sub.add_parser("plot", help="CSV surface over z and one swept parameter")
    add_chain(p)
    p.add_argument("--sweep-step", type=int, required=True, help="1-based step to sweep")
    p.add_argument("--sweep-from", type=_rat, required=True)
    p.add_argument("--sweep-to", type=_rat, required=True)
    p.add_argument("--sweep-points", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    add_output(p)

    p = sub.add_parser("selfcheck", help="run the built-in identity and oracle suite")
    add_output(p)

    return parser


def _cmd_pj(args) -> int:
    poly = para_jacobi(PJParams(args.N, args.M, args.n, args.lam))
    _emit_json(
        {
            "N": args.N,
            "M": args.M,
            "n": args.n,
            "lambda": rational_to_str(args.lam),
            "degree": poly.degree,
            "coefficients": poly.to_json(),
        },
        args.output,
    )
    return 0


def _cmd_regularity(args) -> int:
    if args.lambdas is not None:
        report = validate_chain(_chain_spec(args))
        _emit_json(report.to_json(), args.output)
        return 0
    rows = []
    for idx, n in enumerate(args.chain, start=1):
        iv = step_interval(idx, args.N, args.M, n)
        rows.append({"step": idx, "n": n, "interval": iv.to_json()})
    _emit_json({"N": args.N, "M": args.M, "steps": rows}, args.output)
    return 0


def _cmd_extend(args) -> int:
    spec = _chain_spec(args)
    pot = extended_potential(spec)
    if args.plot:
        lines = ["z,V"]
        for zq in _z_samples(args.samples):
            lines.append(f"{_float_of(zq)},{_float_of(pot.eval_exact(zq))}")
        _emit("\n".join(lines) + "\n", args.output)
        return 0
    if args.z is not None:
        val = pot.eval_exact(args.z)
        _emit_json(
            {
                "z": rational_to_str(args.z),
                "V": rational_to_str(val),
                "V_float": float(val),
            },
            args.output,
        )
        return 0
    _emit_json(pot.to_json(), args.output)
    return 0


def _cmd_eop(args) -> int:
    spec = _chain_spec(args)
    poly = eop(spec, args.k)
    family = EOPFamily(spec)
    _emit_json(
        {
            "chain": spec.to_json(),
            "k": args.k,
            "degree": poly.degree,
            "coefficients": poly.to_json(),
            "codimension": family.codimension(),
        },
        args.output,
    )
    return 0


def _cmd_spectrum(args) -> int:
    spec = _chain_spec(args)
    report = fd_spectrum(extended_potential(spec), args.grid, args.levels)
    if args.format == "csv":
        _emit(report.to_csv(), args.output)
    else:
        _emit_json(report.to_json(), args.output)
    return 0


def _cmd_orthogonality(args) -> int:
    spec = _chain_spec(args)
    g = gram_matrix(spec, args.kset, args.quad_order)
    _emit_json(
        {
            "chain": spec.to_json(),
            "k_set": list(args.kset),
            "quad_order": args.quad_order,
            "gram": [[repr(v) for v in row] for row in g.tolist()],
            "max_normalized_offdiag": repr(max_normalized_offdiag(g)),
        },
        args.output,
    )
    return 0


def _cmd_plot(args) -> int:
    spec = _chain_spec(args)
    step = args.sweep_step
    if not 1 <= step <= spec.m:
        raise ValueError(f"--sweep-step must be in 1..{spec.m}")
    lo, hi = args.sweep_from, args.sweep_to
    if lo > hi:
        raise ValueError("--sweep-from must not exceed --sweep-to")
    if args.sweep_points < 1:
        raise ValueError("--sweep-points must be positive")
    n_iv = spec.steps[step - 1][0]
    iv = step_interval(step, spec.N, spec.M, n_iv)
    if not (iv.contains(lo) and iv.contains(hi)):
        raise SweepOutsideRegularity(
            f"sweep endpoints must lie strictly inside {iv.to_json()}"
        )
    if args.sweep_points == 1 or lo == hi:
        sweep_vals = [lo]
    else:
        d = (hi - lo) / (args.sweep_points - 1)
        sweep_vals = [lo + i * d for i in range(args.sweep_points)]
    zqs = _z_samples(args.samples)
    lines = ["z,sweep,V"]
    base_steps = list(spec.steps)
    for sv in sweep_vals:
        if not iv.contains(sv):
            raise SweepOutsideRegularity(f"sweep value {sv} leaves the admissible interval")
        steps = list(base_steps)
        steps[step - 1] = (n_iv, sv)
        pot = extended_potential(ChainSpec(spec.N, spec.M, tuple(steps)))
        for zq in zqs:
            lines.append(f"{_float_of(zq)},{_float_of(sv)},{_float_of(pot.eval_exact(zq))}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_selfcheck(args) -> int:
    from .selfcheck import run_selfcheck

    ok, lines = run_selfcheck()
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


_COMMANDS = {
    "pj": _cmd_pj,
    "regularity": _cmd_regularity,
    "extend": _cmd_extend,
    "eop": _cmd_eop,
    "spectrum": _cmd_spectrum,
    "orthogonality": _cmd_orthogonality,
    "plot": _cmd_plot,
    "selfcheck": _cmd_selfcheck,
}


# flags whose values may begin with "-" (negative rationals or indices);
# joined with "=" before parsing so argparse does not mistake them for
# option strings
_VALUE_FLAGS = {"--lambdas", "--lam", "--z", "--sweep-from", "--sweep-to", "--kset"}


def _join_value_flags(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_value_flags(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except _DOMAIN_ERRORS as exc:
        diag = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(diag) + "\n")
        return 1


def entrypoint() -> None:  # pragma: no cover - console script shim
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
