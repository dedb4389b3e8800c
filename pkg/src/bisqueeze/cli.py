"""Command-line entry point: ``bisqueeze <subcommand> ...``.

Exit codes: 0 on success, 2 on invalid input, 3 on a numerical failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

import numpy as np

from . import io as state_io
from .fock import TruncatedSpace, evolve_vacuum, oracle_expectations
from .generation import (
    MODES,
    CovarianceElements,
    PumpParameters,
    ThermalSpec,
    bisqueezed_state,
    decouple,
)
from .homodyne import homodyne_condition
from .measures import (
    bipartition_negativities,
    first_order_coherence,
    negativity,
    number_expectation,
    report_dict,
    tripartite_negativity,
    von_neumann_entropy,
)
from .symplectic import NumericalError, from_quadrature_basis, n_modes_of, partial_trace
from .sweep import load_config, run_sweep, write_csv

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 2, 3


def _print_pairs(pairs: dict, out=None) -> None:
    out = out or sys.stdout
    for key, value in pairs.items():
        if isinstance(value, float):
            value = f"{value:.12g}"
        print(f"{key}={value}", file=out)


def _nus_arg(text: str) -> tuple[float, float, float]:
    try:
        nus = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}") from None
    if len(nus) != 3:
        raise argparse.ArgumentTypeError(f"expected three values, got {len(nus)}")
    return nus


def _load(path: str) -> np.ndarray:
    sigma, basis = state_io.read_state(path)
    return from_quadrature_basis(sigma) if basis == "quadrature" else sigma


def _two_mode_report(sigma: np.ndarray, prefix: str = "") -> dict:
    out = report_dict(negativity(sigma), prefix)
    out.update(report_dict(first_order_coherence(sigma, 0, 1), prefix))
    return out


def cmd_sweep(args) -> int:
    overrides = {
        "omega_a": args.omega_a,
        "omega_b": args.omega_b,
        "omega_c": args.omega_c,
        "temperature": args.temperature,
        "r_min": args.r_min,
        "r_max": args.r_max,
        "r_steps": args.r_steps,
        "theta": args.theta,
        "outputs": args.outputs,
    }
    config = load_config(args.config, overrides)
    rows = run_sweep(config)
    write_csv(args.out, rows, config.outputs)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_state(args) -> int:
    p = PumpParameters(args.rab, args.rbc)
    if args.nus is not None:
        thermal_input = args.nus
    else:
        thermal_input = ThermalSpec.from_hz(args.omega_a, args.omega_b, args.omega_c, args.temperature)
    sigma = bisqueezed_state(p, thermal_input)
    if args.out:
        state_io.write_state(args.out, sigma)
        _print_pairs(vars(CovarianceElements.from_matrix(sigma)))
    else:
        state_io.write_state(sys.stdout, sigma)
    return EXIT_OK


def cmd_measure(args) -> int:
    sigma = _load(args.input)
    n = n_modes_of(sigma)
    pair = args.pair or ("abc" if n == 3 else None)
    if n == 2:
        if pair not in (None, "ac", "ab", "bc"):
            raise ValueError("a two-mode state supports only a two-letter --pair (or none)")
        _print_pairs(_two_mode_report(sigma))
        return EXIT_OK
    if n != 3:
        raise ValueError(f"measure expects a two- or three-mode state, got {n} modes")
    if pair == "abc":
        pairs = {f"N_{k}": v for k, v in bipartition_negativities(sigma).items()}
        pairs["N_abc"] = tripartite_negativity(sigma)
        pairs.update({f"n_{m}": number_expectation(sigma, i) for m, i in MODES.items()})
        _print_pairs(pairs)
        return EXIT_OK
    reduced = partial_trace(sigma, [MODES[ch] for ch in pair])
    _print_pairs(_two_mode_report(reduced))
    return EXIT_OK


def cmd_homodyne(args) -> int:
    sigma = _load(args.input)
    out = homodyne_condition(sigma, measured=MODES[args.measured], theta=args.theta)
    if args.out:
        state_io.write_state(args.out, out)
    if n_modes_of(out) == 2:
        _print_pairs(_two_mode_report(out))
    return EXIT_OK


def cmd_decouple(args) -> int:
    d = decouple(PumpParameters(args.rab, args.rbc))
    _print_pairs(vars(d))
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    p = PumpParameters(args.rab, args.rbc)
    space = TruncatedSpace(n_max=args.nmax, norm_tol=args.norm_tol)
    fock = oracle_expectations(evolve_vacuum(p, space), space)
    sigma = bisqueezed_state(p)
    e = CovarianceElements.from_matrix(sigma)
    gauss = {
        "n_a": number_expectation(sigma, 0),
        "n_b": number_expectation(sigma, 1),
        "n_c": number_expectation(sigma, 2),
        "|adagc|": abs(e.delta) / 2,
    }
    for m, i in MODES.items():
        gauss[f"S_{m}"] = von_neumann_entropy(partial_trace(sigma, [i]))
    fvals = {
        "n_a": fock.n_a,
        "n_b": fock.n_b,
        "n_c": fock.n_c,
        "|adagc|": abs(fock.a_dag_c),
        "S_a": fock.entropies[0],
        "S_b": fock.entropies[1],
        "S_c": fock.entropies[2],
    }
    print(f"{'quantity':<10}{'gaussian':>20}{'fock':>20}{'delta':>12}")
    for key, g in gauss.items():
        f = fvals[key]
        print(f"{key:<10}{g:>20.12g}{f:>20.12g}{f - g:>12.3e}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bisqueeze", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("sweep", help="sweep r = R_ab = R_bc and write a CSV table")
    sp.add_argument("--config", help="key = value config file")
    sp.add_argument("--out", required=True, help="output CSV path")
    for flag in ("omega-a", "omega-b", "omega-c"):
        sp.add_argument(f"--{flag}", type=float, help="mode frequency in Hz")
    sp.add_argument("--temperature", type=float, help="kelvin")
    sp.add_argument("--r-min", type=float)
    sp.add_argument("--r-max", type=float)
    sp.add_argument("--r-steps", type=int)
    sp.add_argument("--theta", type=float, help="homodyne angle")
    sp.add_argument("--outputs", help="comma-separated subset of columns")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("state", help="write the bi-squeezed covariance matrix")
    sp.add_argument("--rab", type=float, required=True)
    sp.add_argument("--rbc", type=float, required=True)
    sp.add_argument("--omega-a", type=float, default=4.99e9, help="Hz")
    sp.add_argument("--omega-b", type=float, default=5.0e9, help="Hz")
    sp.add_argument("--omega-c", type=float, default=5.01e9, help="Hz")
    sp.add_argument("--temperature", type=float, default=0.015, help="kelvin")
    sp.add_argument("--nus", type=_nus_arg, help="thermal eigenvalues nu_a,nu_b,nu_c (overrides frequencies)")
    sp.add_argument("--out", help="state file (default: stdout)")
    sp.set_defaults(func=cmd_state)

    sp = sub.add_parser("measure", help="entanglement and coherence of a state file")
    sp.add_argument("--input", required=True)
    sp.add_argument("--pair", choices=("ab", "bc", "ac", "abc"))
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("homodyne", help="condition on a homodyne measurement of one mode")
    sp.add_argument("--input", required=True)
    sp.add_argument("--theta", type=float, default=0.0)
    sp.add_argument("--measured", choices=tuple(MODES), default="b")
    sp.add_argument("--out", help="conditional state file")
    sp.set_defaults(func=cmd_homodyne)

    sp = sub.add_parser("decouple", help="factorised squeezing parameters")
    sp.add_argument("--rab", type=float, required=True)
    sp.add_argument("--rbc", type=float, required=True)
    sp.set_defaults(func=cmd_decouple)

    sp = sub.add_parser("oracle-check", help="compare against a truncated Fock-space simulation")
    sp.add_argument("--rab", type=float, required=True)
    sp.add_argument("--rbc", type=float, required=True)
    sp.add_argument("--nmax", type=int, default=12)
    sp.add_argument("--norm-tol", type=float, default=1e-5)
    sp.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
