"""Command-line front end.

Subcommands: derive, from-lambda, scan-lambda, jackiw, eta-mu, verify,
plot-data.  Exit codes follow one contract everywhere: 0 success/pass,
1 domain outcome (no root, verification failed), 2 usage error.  Output
is a human-readable table by default or a JSON document with --format
json; dataset commands write two-column CSV (header row, LF endings,
9-significant-digit floats, empty field where a value is missing), byte
identical for identical flags.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .eigensolver import VerifyTolerances, verify_solution
from .potential import PotentialParams, eval_potential
from .solvers import (
    NoRootError,
    ZeroModeSolution,
    jackiw_solutions,
    params_from_lambda,
    solve_eta,
    solve_eta_mu,
)
from .trial import derive_trial, trial_split
from .wavefunction import TrialWavefunction, eval_psi, maxima_radius


class UsageError(Exception):
    """Bad command-line input (exit code 2)."""


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.9g}"
    return str(x)


def _render(summary: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(summary, indent=2, sort_keys=True)
    lines = []

    def walk(prefix, obj):
        items = obj.items() if isinstance(obj, dict) else enumerate(obj)
        for key, val in items:
            if isinstance(val, (dict, list)):
                walk(f"{prefix}{key}.", val)
            else:
                lines.append(f"{prefix}{key} = {_fmt(val)}")

    walk("", summary)
    return "\n".join(lines)


def _emit(summary: dict, fmt: str) -> None:
    print(_render(summary, fmt))


def _base_summary(command: str, inputs: dict) -> dict:
    return {"command": command, "version": __version__, "inputs": inputs}


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def _potential_from_args(args, require_positive_g=True) -> PotentialParams:
    if require_positive_g:
        _require(args.g > 0, f"--g must be > 0, got {args.g}")
    else:
        _require(args.g >= 0, f"--g must be >= 0, got {args.g}")
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    try:
        return PotentialParams(g=args.g, alpha=args.alpha, beta=args.beta, bigA=args.A, n_dim=args.N)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _solution_summary(sol: ZeroModeSolution) -> dict:
    p, t = sol.potential, sol.trial
    split = trial_split(p, t)
    out = {
        "alpha": p.alpha,
        "beta": p.beta,
        "A": p.bigA,
        "a": t.a,
        "c": t.c,
        "m": t.m,
        "e0": split.e0,
    }
    if sol.lambda_form is not None:
        out["lambda"] = sol.lambda_form.lambda_
        out["eta"] = sol.lambda_form.eta
    if sol.jackiw_form is not None:
        out["r0_sq"] = sol.jackiw_form.r0_sq
        out["mu"] = sol.jackiw_form.mu
        out["eta"] = sol.jackiw_form.eta
    return out


def _report_summary(report) -> dict:
    return {
        "oracle_energy": report.oracle_energy,
        "closed_form_e0": report.closed_form_e0,
        "energy_error": report.energy_error,
        "similarity": report.similarity,
        "max_residual": report.max_residual,
        "m_residual": report.m_residual,
        "zero_energy_residual": report.zero_energy_residual,
        "verdict": "PASS" if report.passed else "FAIL",
        "failures": list(report.failures),
    }


def cmd_derive(args) -> int:
    p = _potential_from_args(args)
    t = derive_trial(p)
    split = trial_split(p, t)
    summary = _base_summary(
        "derive",
        {"g": args.g, "alpha": args.alpha, "beta": args.beta, "A": args.A, "N": args.N},
    )
    summary["derived"] = {
        "a": t.a,
        "c": t.c,
        "m": t.m,
        "h_coef1": split.h_coef1,
        "h_coef2": split.h_coef2,
        "e0": split.e0,
    }
    _emit(summary, args.format)
    return 0


def cmd_from_lambda(args) -> int:
    _require(np.isfinite(args.lambda_), f"--lambda must be finite, got {args.lambda_}")
    _require(args.g > 0, f"--g must be > 0, got {args.g}")
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    roots = solve_eta(args.lambda_, args.N)
    summary = _base_summary("from-lambda", {"g": args.g, "lambda": args.lambda_, "N": args.N})
    if not roots:
        summary["solutions"] = []
        summary["message"] = "no eta in (0,1)"
        _emit(summary, args.format)
        return 1
    summary["solutions"] = [
        _solution_summary(params_from_lambda(args.g, args.lambda_, eta, args.N)) for eta in roots
    ]
    _emit(summary, args.format)
    return 0


def cmd_scan_lambda(args) -> int:
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    _require(1.0 < args.from_, f"--from must be > 1, got {args.from_}")
    _require(args.from_ < args.to, f"need --from < --to, got {args.from_} >= {args.to}")
    _require(args.steps >= 2, f"--steps must be >= 2, got {args.steps}")
    lams = np.linspace(args.from_, args.to, args.steps)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("lambda,eta\n")
        for lam in lams:
            roots = solve_eta(float(lam), args.N)
            eta_field = _fmt(roots[0]) if roots else ""
            fh.write(f"{_fmt(float(lam))},{eta_field}\n")
    return 0


def cmd_jackiw(args) -> int:
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    branches = jackiw_solutions(args.N)
    summary = _base_summary("jackiw", {"N": args.N})
    summary["r0_sq"] = branches[0].potential.alpha / 2.0
    summary["branches"] = [
        {
            "alpha": b.potential.alpha,
            "beta": b.potential.beta,
            "A": b.potential.bigA,
            "a": b.trial.a,
            "c": b.trial.c,
            "m": b.trial.m,
            "e0": b.e0,
        }
        for b in branches
    ]
    _emit(summary, args.format)
    return 0


def cmd_eta_mu(args) -> int:
    _require(args.g > 0, f"--g must be > 0, got {args.g}")
    _require(args.N >= 1, f"--N must be >= 1, got {args.N}")
    _require(args.grid >= 16, f"--grid must be >= 16, got {args.grid}")
    sol = solve_eta_mu(args.g, args.N)  # NoRootError propagates as exit 1
    report = verify_solution(sol, VerifyTolerances(r_max=args.rmax, n_points=args.grid))
    summary = _base_summary("eta-mu", {"g": args.g, "N": args.N})
    summary["solution"] = _solution_summary(sol)
    summary["c_rule"] = "c = (1 - eta) * g * r0_sq / 2"
    summary["verification"] = _report_summary(report)
    _emit(summary, args.format)
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    _require(args.grid >= 16, f"--grid must be >= 16, got {args.grid}")
    _require(args.rmax is None or args.rmax > 0, f"--rmax must be > 0, got {args.rmax}")
    p = _potential_from_args(args)
    sol = ZeroModeSolution(potential=p, trial=derive_trial(p))
    report = verify_solution(sol, VerifyTolerances(r_max=args.rmax, n_points=args.grid))
    summary = _base_summary(
        "verify",
        {"g": args.g, "alpha": args.alpha, "beta": args.beta, "A": args.A, "N": args.N},
    )
    summary["derived"] = {"a": sol.trial.a, "c": sol.trial.c, "m": sol.trial.m}
    summary["verification"] = _report_summary(report)
    _emit(summary, args.format)
    return 0 if report.passed else 1


def cmd_plot_data(args) -> int:
    _require(args.r_from >= 0, f"--r-from must be >= 0, got {args.r_from}")
    _require(args.r_from < args.r_to, f"need --r-from < --r-to, got {args.r_from} >= {args.r_to}")
    _require(args.steps >= 2, f"--steps must be >= 2, got {args.steps}")
    p = _potential_from_args(args, require_positive_g=(args.what == "wavefunction"))
    radii = np.linspace(args.r_from, args.r_to, args.steps)
    if args.what == "potential":
        values = np.asarray(eval_potential(p, radii))
    else:
        w = TrialWavefunction.from_potential(p)
        peak = maxima_radius(w)
        values = np.asarray(eval_psi(w, radii)) / eval_psi(w, peak.radius)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("r,value\n")
        for r, y in zip(radii, values):
            fh.write(f"{_fmt(float(r))},{_fmt(float(y))}\n")
    return 0


def _add_potential_flags(sub):
    sub.add_argument("--g", type=float, required=True, help="coupling g")
    sub.add_argument("--alpha", type=float, required=True, help="quadratic-term coefficient")
    sub.add_argument("--beta", type=float, required=True, help="constant-term coefficient")
    sub.add_argument("--A", type=float, required=True, help="shift coefficient")
    sub.add_argument("--N", type=int, required=True, help="spatial dimension")


def _add_format_flag(sub):
    sub.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sombrero",
        description="Zero-energy groundstates of sombrero-shaped sextic potentials",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("derive", help="trial coefficients and e0 for explicit parameters")
    _add_potential_flags(sub)
    _add_format_flag(sub)
    sub.set_defaults(func=cmd_derive)

    sub = subs.add_parser("from-lambda", help="solve the eta cubic and rebuild the potential")
    sub.add_argument("--g", type=float, required=True)
    sub.add_argument("--lambda", dest="lambda_", type=float, required=True)
    sub.add_argument("--N", type=int, required=True)
    _add_format_flag(sub)
    sub.set_defaults(func=cmd_from_lambda)

    sub = subs.add_parser("scan-lambda", help="eta(lambda) dataset over a lambda range")
    sub.add_argument("--N", type=int, required=True)
    sub.add_argument("--from", dest="from_", type=float, required=True)
    sub.add_argument("--to", type=float, required=True)
    sub.add_argument("--steps", type=int, required=True)
    sub.add_argument("--out", required=True, help="output CSV path")
    sub.set_defaults(func=cmd_scan_lambda)

    sub = subs.add_parser("jackiw", help="both closed-form branches of the fixed-r0 family")
    sub.add_argument("--N", type=int, required=True)
    _add_format_flag(sub)
    sub.set_defaults(func=cmd_jackiw)

    sub = subs.add_parser("eta-mu", help="well-form zero-energy solution plus oracle verdict")
    sub.add_argument("--g", type=float, required=True)
    sub.add_argument("--N", type=int, required=True)
    sub.add_argument("--rmax", type=float, default=None, help="oracle domain (default: auto)")
    sub.add_argument("--grid", type=int, default=2000, help="oracle grid points")
    _add_format_flag(sub)
    sub.set_defaults(func=cmd_eta_mu)

    sub = subs.add_parser("verify", help="check parameters against the numerical oracle")
    _add_potential_flags(sub)
    sub.add_argument("--rmax", type=float, default=None, help="oracle domain (default: auto)")
    sub.add_argument("--grid", type=int, default=2000, help="oracle grid points")
    _add_format_flag(sub)
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser("plot-data", help="sampled potential or wavefunction dataset")
    sub.add_argument("--what", choices=("potential", "wavefunction"), required=True)
    _add_potential_flags(sub)
    sub.add_argument("--r-from", dest="r_from", type=float, required=True)
    sub.add_argument("--r-to", dest="r_to", type=float, required=True)
    sub.add_argument("--steps", type=int, required=True)
    sub.add_argument("--out", required=True, help="output CSV path")
    sub.set_defaults(func=cmd_plot_data)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoRootError as exc:
        print(f"no solution: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
