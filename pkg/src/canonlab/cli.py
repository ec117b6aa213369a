"""Command-line interface.

Exit codes: 0 on success (for `verify`: all checks passed), 1 when a
verification check fails, 2 on misconfiguration (bad arguments, unknown
ids, unreadable input).
"""
from __future__ import annotations

import argparse
import json
import sys

from .fields import DEFAULT_PRIME, GF
from .groebner import Ideal, buchberger
from .invariants import betti_diagram, hilbert_data, tangent_dim
from .constructions import dimension_ledger
from .experiments import EXAMPLE_IDS, ExperimentConfig, run_example, sample
from .petri import build_g5_quadrics, build_g6_quadrics
from .rings import GREVLEX, LEX
from . import serialize


class CliError(Exception):
    pass


def _emit(payload, out_path):
    text = serialize.dumps(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_ideal(path) -> Ideal:
    try:
        return serialize.ideal_from_json(_load_json(path))
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad ideal file {path}: {exc}") from exc


def cmd_gb(args):
    I = _load_ideal(args.ideal)
    order = {"grevlex": GREVLEX, "lex": LEX}[args.order]
    gb = buchberger(I, order)
    payload = serialize.ideal_to_json(Ideal(I.ring, gb.elements, check=False))
    _emit(payload, args.out)
    return 0


def cmd_invariants(args):
    I = _load_ideal(args.ideal)
    payload = {
        "hilbert": serialize.hilbert_to_json(hilbert_data(I)),
        "betti": serialize.betti_to_json(betti_diagram(I)),
    }
    if args.tangent:
        payload["tangent_dim"] = tangent_dim(I)
    _emit(payload, args.out)
    return 0


def cmd_petri_build(args):
    try:
        system = serialize.petri_from_json(_load_json(args.system))
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad system file {args.system}: {exc}") from exc
    quads = build_g5_quadrics(system) if system.genus == 5 else build_g6_quadrics(system)
    I = Ideal(system.ring, tuple(quads[p] for p in system.PAIRS))
    _emit(serialize.ideal_to_json(I), args.out)
    return 0


def cmd_verify(args):
    try:
        report = run_example(args.example)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def cmd_sample(args):
    try:
        config = ExperimentConfig(experiment=f"sample-g{args.genus}",
                                  field=GF(args.p), seed=args.seed,
                                  sample_count=args.n)
        report = sample(config)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def cmd_ledger(args):
    _emit(dimension_ledger(args.genus), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="canonlab",
        description="Exact Groebner computations for canonical curves of genus 5 and 6")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("ideal")
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("invariants", help="Hilbert data and Betti diagram")
    p.add_argument("ideal")
    p.add_argument("--tangent", action="store_true",
                   help="also compute the Hilbert-scheme tangent dimension")
    p.add_argument("--out")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("petri", help="Petri-system operations")
    petri_sub = p.add_subparsers(dest="petri_command", required=True)
    pb = petri_sub.add_parser("build", help="build the normalised quadrics")
    pb.add_argument("system")
    pb.add_argument("--out")
    pb.set_defaults(func=cmd_petri_build)

    p = sub.add_parser("verify", help="run a named verification scenario")
    p.add_argument("example", metavar="example-id",
                   help=f"one of {', '.join(EXAMPLE_IDS)}")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="finite-field sampling experiment")
    p.add_argument("--genus", type=int, choices=(5, 6), required=True)
    p.add_argument("--p", type=int, default=DEFAULT_PRIME)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("ledger", help="Hilbert-scheme dimension counts")
    p.add_argument("--genus", type=int, choices=(5, 6), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ledger)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"canonlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
