"""Command-line front end: ``cvenn <command> ...``.

Exit codes: 0 success, 1 domain error (error class name on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from . import closest, decompose, entropy, io, states, tasks, witness
from .errors import CvennError


def _emit_matrix(obj, out):
    text = io.dumps_matrix(obj)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _state(path):
    return io.load_matrix(path).state()


def _operator(path):
    return io.load_matrix(path).operator()


def _print_report(report, as_json):
    if as_json:
        print(json.dumps(report.to_dict(), sort_keys=False))
    else:
        print(report.to_text())


def cmd_gen(args):
    fam = args.family
    if fam == "werner":
        rho = states.werner(args.p)
    elif fam == "isotropic":
        rho = states.isotropic(args.alpha, args.dim)
    elif fam == "maxent":
        rho = states.max_entangled(args.dim)
    else:
        dims = args.dims or [args.dim, args.dim]
        rho = states.random_density(dims, args.seed)
    _emit_matrix(rho, args.out)


def cmd_entropy(args):
    _print_report(entropy.entropy_report(_state(args.state), args.base), args.json)


def cmd_witness_log(args):
    w = witness.log_witness(_state(args.state), args.base)
    _emit_matrix(w, args.out)


def cmd_witness_geometric(args):
    rho_s = _state(args.state)
    config = closest.SolverConfig(violation_tolerance=args.tol) if args.tol else None
    result = closest.project_to_cvenn(rho_s, config)
    w = witness.geometric_witness(rho_s, result.sigma_c)
    sigma_out = args.sigma_out
    if sigma_out is None and args.out:
        p = Path(args.out)
        sigma_out = str(p.with_name(p.stem + ".sigma_c" + p.suffix))
    _emit_matrix(w, args.out)
    if sigma_out:
        _emit_matrix(result.sigma_c, sigma_out)
    print(f"distance = {result.distance:.4f}", file=sys.stderr)
    print(f"converged = {str(result.converged).lower()}", file=sys.stderr)


def cmd_witness_eval(args):
    value = witness.eval_witness(_operator(args.witness), _state(args.state))
    if args.json:
        print(json.dumps({"value": value}))
    else:
        print(f"Tr(W rho) = {value:.4f}")


def cmd_decompose(args):
    w = _operator(args.witness)
    if args.basis == "pauli":
        dec = decompose.pauli_decompose(w)
    elif args.basis == "gellmann":
        dec = decompose.gellmann_decompose(w)
    else:
        dec = decompose.polarization_decompose(w)
    print(dec.to_text())


def cmd_scan(args):
    w = _operator(args.witness)
    rows = io.scan_family(args.family, w, args.points, args.base, args.dim)
    if args.out:
        io.write_scan_csv(rows, args.out)
    else:
        io.write_scan_csv(rows, sys.stdout)


def cmd_task(args):
    rho = _state(args.state)
    name = args.task
    if name == "sdc":
        report = tasks.sdc_capacity(rho)
    elif name == "merge":
        report = tasks.merging_report(rho, args.direction, args.base)
    elif name == "randomness":
        report = tasks.randomness_rates(rho)
    elif name == "distill":
        report = tasks.hashing_bound(rho)
    else:
        setting = tasks.UncertaintySetting(_load_local(args.obs_x), _load_local(args.obs_y))
        report = tasks.uncertainty_bound(setting, rho)
        region = tasks.memory_region(setting, rho)
        report = dataclasses.replace(report, metadata={**report.metadata, "region": region.value})
    _print_report(report, args.json)


def _load_local(path):
    # Observables on A are stored with dims (dA, 1).
    return io.load_matrix(path).operator().matrix


def cmd_project(args):
    result = closest.project_to_cvenn(_state(args.state))
    _emit_matrix(result.sigma_c, args.out)
    print(f"distance = {result.distance:.4f}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cvenn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def base_arg(p, default="bits"):
        p.add_argument("--base", choices=["bits", "nats"], default=default)

    p = sub.add_parser("gen", help="write a named or random state")
    p.add_argument("--family", choices=["werner", "isotropic", "maxent", "random"], required=True)
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--dims", type=int, nargs=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("entropy", help="entropy report for a state")
    p.add_argument("--state", required=True)
    base_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_entropy)

    pw = sub.add_parser("witness", help="build or evaluate witnesses")
    wsub = pw.add_subparsers(dest="witness_command", required=True)
    p = wsub.add_parser("log")
    p.add_argument("--state", required=True)
    base_arg(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness_log)
    p = wsub.add_parser("geometric")
    p.add_argument("--state", required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--out")
    p.add_argument("--sigma-out")
    p.set_defaults(func=cmd_witness_geometric)
    p = wsub.add_parser("eval")
    p.add_argument("--witness", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_witness_eval)

    p = sub.add_parser("decompose", help="expand a witness in a local basis")
    p.add_argument("--witness", required=True)
    p.add_argument("--basis", choices=["pauli", "gellmann", "polarization"], required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("scan", help="witness value and S(A|B) along a state family")
    p.add_argument("--family", choices=["werner", "isotropic"], required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--witness", required=True)
    base_arg(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("task", help="operational bounds")
    p.add_argument("task", choices=["sdc", "merge", "uncertainty", "randomness", "distill"])
    p.add_argument("--state", required=True)
    p.add_argument("--obs-x")
    p.add_argument("--obs-y")
    p.add_argument("--direction", choices=["AtoB", "BtoA"], default="AtoB")
    base_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_task)

    p = sub.add_parser("project", help="closest CVENN state")
    p.add_argument("--state", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_project)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "task", None) == "uncertainty" and not (args.obs_x and args.obs_y):
        parser.print_usage(sys.stderr)
        print("cvenn: error: task uncertainty needs --obs-x and --obs-y", file=sys.stderr)
        return 2
    try:
        args.func(args)
    except CvennError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


run = main


if __name__ == "__main__":
    sys.exit(main())
