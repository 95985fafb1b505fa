import argparse
import logging
import os
import sys

import qcover
import qcover.config as config
import qcover.rng as rng
import qcover.settings as settings
from qcover.error.core_errors import QCoverError

from . import commands

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _default_jobs():
    try:
        return int(os.environ.get("QCOVER_JOBS", config.default_jobs))
    except ValueError:
        return config.default_jobs


def _add_solver_args(parser):
    parser.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker processes (default: $QCOVER_JOBS or 1)")
    parser.add_argument("--budget", type=int, default=None,
                        help="node budget of the exact search")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qcover",
        description="Exact tools for intersecting families of subspaces "
        "over finite fields.")
    parser.add_argument("--version", action="version",
                        version=f"qcover {qcover.__version__}")
    parser.add_argument("--log-level", choices=_LOG_LEVELS, default="WARNING")
    parser.add_argument("--seed", type=int, default=config.default_seed)
    subparsers = parser.add_subparsers(dest="command", required=True)

    gauss = subparsers.add_parser("gauss", help="Gaussian binomial [n m]_q")
    for name in ("q", "n", "m"):
        gauss.add_argument(name, type=int)
    gauss.set_defaults(handler=commands.cmd_gauss)

    count = subparsers.add_parser("count-type",
                                  help="N(m1,k1;m,k;n+l,n) over GF(q)")
    for name in ("q", "m1", "k1", "m", "k", "n", "l"):
        count.add_argument(name, type=int)
    count.set_defaults(handler=commands.cmd_count_type)

    tau = subparsers.add_parser("tau", help="covering number of a family")
    tau.add_argument("family_file")
    tau.add_argument("--oracle", action="store_true",
                     help="use the brute-force oracle")
    tau.add_argument("--cert", help="write a certificate to this path")
    _add_solver_args(tau)
    tau.set_defaults(handler=commands.cmd_tau)

    check = subparsers.add_parser("check-intersecting")
    check.add_argument("family_file")
    check.set_defaults(handler=commands.cmd_check_intersecting)

    construct = subparsers.add_parser("construct")
    construct.add_argument("kind",
                           choices=("trivial", "extremal",
                                    "extremal-singular"))
    construct.add_argument("--q", type=int, required=True)
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--m", type=int, required=True)
    construct.add_argument("--l", type=int, default=0)
    construct.add_argument("--k", type=int, default=0)
    construct.add_argument("--point", type=int, default=0,
                           help="index of the standard vector spanning the "
                           "common point of a trivial family")
    construct.add_argument("-o", "--output", required=True)
    construct.set_defaults(handler=commands.cmd_construct)

    lemma37 = subparsers.add_parser(
        "lemma37", help="random A, B and the subspace S meeting A in "
        "dimension d and B trivially")
    lemma37.add_argument("--q", type=int, required=True)
    lemma37.add_argument("--dim-v", type=int, required=True)
    for name in ("--a", "--b", "--c", "--d"):
        lemma37.add_argument(name, type=int, required=True)
    lemma37.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    lemma37.set_defaults(handler=commands.cmd_lemma37)

    ineq = subparsers.add_parser("verify-ineq")
    ineq.add_argument("which", choices=("23", "chain12", "233", "10",
                                        "t-choice"))
    for name in ("--m", "--q", "--k", "--n", "--l", "--a", "--b"):
        ineq.add_argument(name, type=int)
    ineq.add_argument("--sweep", action="store_true")
    ineq.add_argument("--m-min", type=int)
    ineq.add_argument("--m-max", type=int)
    ineq.add_argument("--q-max", type=int)
    ineq.add_argument("--a-max", type=int)
    ineq.add_argument("--cert", help="write a certificate to this path")
    ineq.set_defaults(handler=commands.cmd_verify_ineq)

    search = subparsers.add_parser("search-max")
    for name in ("--q", "--n", "--m", "--min-tau"):
        search.add_argument(name, type=int, required=True)
    search.add_argument("--target", type=int,
                        help="decide whether a family of this size exists")
    search.add_argument("--size-gate", type=int, default=None)
    search.add_argument("--force", action="store_true",
                        help="search past the size gate")
    search.add_argument("--cert", help="write a certificate to this path")
    search.add_argument("-o", "--output",
                        help="write the witness family to this path")
    _add_solver_args(search)
    search.set_defaults(handler=commands.cmd_search_max)

    structure = subparsers.add_parser("structure-check")
    structure.add_argument("family_file")
    structure.set_defaults(handler=commands.cmd_structure_check)

    extremal = subparsers.add_parser("verify-extremal")
    extremal.add_argument("family_file")
    _add_solver_args(extremal)
    extremal.set_defaults(handler=commands.cmd_verify_extremal)

    selftest = subparsers.add_parser("selftest")
    selftest.add_argument("--quick", action="store_true")
    selftest.set_defaults(handler=commands.cmd_selftest)
    return parser


def _register_settings(args):
    registered = {"seed": args.seed}
    for name in ("jobs", "size_gate"):
        value = getattr(args, name, None)
        if value is not None:
            registered[name] = value
    if getattr(args, "budget", None) is not None:
        registered["node_budget"] = args.budget
    settings.register_settings(registered)


def cli_dispatch(argv):
    """Runs one subcommand and returns its exit code: 0 success, 1 property
    violated (including a failed internal re-check), 2 invalid input, 3 size
    gate exceeded or budget exhausted."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code
    logging.basicConfig(format="%(levelname)s: %(message)s",
                        level=getattr(logging, args.log_level))
    _register_settings(args)
    rng.seed_rng(args.seed)
    try:
        return args.handler(args)
    except QCoverError as error:
        print(f"error: {error}", file=sys.stderr)
        return error.exit_code


def main():
    return cli_dispatch(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
