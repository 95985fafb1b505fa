"""Handlers for the qcover subcommands. Each takes the parsed argparse
namespace, prints its result to stdout and returns the exit code."""
import logging

import qcover.rng as rng
from qcover.constants import (EXIT_GATE_EXCEEDED, EXIT_INVALID_INPUT,
                              EXIT_PROPERTY_VIOLATED, EXIT_SUCCESS)
from qcover.error.count_error import ParameterRangeError
from qcover.family.covering import covering_number, covering_number_oracle
from qcover.family.family import is_intersecting
from qcover.gfq.field import make_field
from qcover.io.certificate import (cover_certificate, inequality_certificate,
                                   search_certificate, write_certificate)
from qcover.io.family_file import read_family, write_family
from qcover.qcount.gaussian import count_type, gaussian
from qcover.qcount.inequality import (all_steps_hold, verify_chain_thm12,
                                      verify_ineq_10, verify_ineq_23,
                                      verify_ineq_233, verify_t_choice_k0)
from qcover.qcount.sweep import (failing_rows, sweep_chain_thm12,
                                 sweep_holds, sweep_ineq_10, sweep_ineq_23,
                                 sweep_ineq_233)
from qcover.search.max_family import exists_family, max_family
from qcover.selftest import run_selftest
from qcover.singular.extremal import (construct_extremal_thm12,
                                      construct_extremal_thm31,
                                      construct_trivial, structure_check,
                                      verify_extremal)
from qcover.singular.singular_space import SingularSpace
from qcover.subspace.construction import lemma37_construct
from qcover.subspace.sampling import random_pair_with_meet
from qcover.subspace.subspace import meet, span_of, standard_vector


def _exit_for(holds):
    return EXIT_SUCCESS if holds else EXIT_PROPERTY_VIOLATED


def cmd_gauss(args):
    print(gaussian(args.n, args.m, args.q))
    return EXIT_SUCCESS


def cmd_count_type(args):
    print(count_type(args.m1, args.k1, args.m, args.k, args.n, args.l,
                     args.q))
    return EXIT_SUCCESS


def cmd_tau(args):
    (family, sing) = read_family(args.family_file)
    if args.oracle:
        cover = covering_number_oracle(family)
    else:
        cover = covering_number(family, jobs=args.jobs,
                                node_budget=args.budget)
    logging.info(f"Witness cover: {cover.witness}")
    if args.cert:
        write_certificate(args.cert, cover_certificate(family, cover, sing))
    if not cover.exact:
        print(f"tau<={cover.tau} tau>={cover.lower_bound} "
              f"(node budget exhausted)")
        return EXIT_GATE_EXCEEDED
    print(f"tau={cover.tau}")
    return EXIT_SUCCESS


def cmd_check_intersecting(args):
    (family, _) = read_family(args.family_file)
    result = is_intersecting(family)
    if result.holds:
        print("intersecting")
    else:
        (first, second) = result.pair
        print(f"not intersecting: {first} {second}")
    return _exit_for(result.holds)


def cmd_construct(args):
    spec = make_field(args.q)
    sing = None
    if args.kind == "trivial":
        point = span_of(spec, args.n, [standard_vector(args.n, args.point)])
        family = construct_trivial(spec, args.n, args.m, point)
    elif args.kind == "extremal":
        family = construct_extremal_thm12(spec, args.n, args.m)
    else:
        sing = SingularSpace(spec, args.n, args.l)
        family = construct_extremal_thm31(sing, args.m, args.k)
    write_family(args.output, family, sing)
    print(f"{len(family)} members written to {args.output}")
    return EXIT_SUCCESS


def cmd_lemma37(args):
    spec = make_field(args.q)
    logging.info(f"Drawing A and B with seed {rng.current_seed()}")
    (first, second) = random_pair_with_meet(spec, args.dim_v, args.a, args.b,
                                            args.c, rng.get_rng())
    result = lemma37_construct(first, second, args.d)
    print(f"A = {first}")
    print(f"B = {second}")
    print(f"S = {result}")
    print(f"dim S = {result.dim}, dim(S ∩ A) = {meet(result, first).dim}, "
          f"dim(S ∩ B) = {meet(result, second).dim}")
    return EXIT_SUCCESS


def _print_report(report):
    print(f"{report.lhs} < {report.rhs} "
          f"{'HOLDS' if report.holds else 'FAILS'}")
    for step in report.steps:
        print(f"  {step.name}: {'ok' if step.holds else 'FAILS'}")


_SINGLE_CHECKS = {
    "23": lambda args: verify_ineq_23(args.m, args.q),
    "chain12": lambda args: verify_chain_thm12(args.m, args.q),
    "233": lambda args: verify_ineq_233(args.m, args.k, args.n, args.l,
                                        args.q),
    "10": lambda args: verify_ineq_10(args.a, args.b, args.q),
    "t-choice": lambda args: verify_t_choice_k0(args.m, args.n, args.l,
                                                args.q),
}

_REQUIRED_PARAMS = {
    "23": ("m", "q"),
    "chain12": ("m", "q"),
    "233": ("m", "k", "n", "l", "q"),
    "10": ("a", "b", "q"),
    "t-choice": ("m", "n", "l", "q"),
}

_SWEEPS = {
    "23": lambda args: sweep_ineq_23(_m_range(args), args.q_max),
    "chain12": lambda args: sweep_chain_thm12(_m_range(args), args.q_max),
    "233": lambda args: sweep_ineq_233(_m_range(args), args.q_max),
    "10": lambda args: sweep_ineq_10(args.a_max),
}


def _m_range(args):
    if args.m_min is None and args.m_max is None:
        return None
    if args.m_min is None or args.m_max is None:
        raise ParameterRangeError("--m-min and --m-max go together")
    return (args.m_min, args.m_max)


def cmd_verify_ineq(args):
    if args.sweep:
        if args.which not in _SWEEPS:
            print(f"no sweep for inequality {args.which}")
            return EXIT_INVALID_INPUT
        frame = _SWEEPS[args.which](args)
        failing = failing_rows(frame)
        print(f"{len(frame)} instances, {len(failing)} failing")
        if len(failing):
            print(failing.to_string(index=False))
        return _exit_for(sweep_holds(frame))
    missing = [
        name for name in _REQUIRED_PARAMS[args.which]
        if getattr(args, name) is None
    ]
    if missing:
        flags = ", ".join(f"--{name}" for name in missing)
        raise ParameterRangeError(f"inequality {args.which} needs {flags}")
    report = _SINGLE_CHECKS[args.which](args)
    _print_report(report)
    if args.cert:
        write_certificate(args.cert, inequality_certificate(report))
    return _exit_for(all_steps_hold(report))


def cmd_search_max(args):
    common = dict(jobs=args.jobs, size_gate=args.size_gate, force=args.force,
                  node_budget=args.budget)
    if args.target is None:
        search = max_family(args.q, args.n, args.m, args.min_tau, **common)
        checks = search.structure_checks
        optimal = "yes" if search.optimal else "no"
        print(f"size={search.result} optimal={optimal}"
              f" optima={len(search.optima)} "
              f"structured={sum(checks)}/{len(checks)}")
    else:
        search = exists_family(args.q, args.n, args.m, args.min_tau,
                               args.target, **common)
        answer = "yes" if search.witness is not None else \
            ("no" if search.optimal else "unknown")
        print(f"exists size>={args.target}: {answer}")
    if args.cert:
        write_certificate(args.cert, search_certificate(search))
    if args.output and search.witness is not None:
        write_family(args.output, search.witness)
    return EXIT_SUCCESS if search.optimal else EXIT_GATE_EXCEEDED


def cmd_structure_check(args):
    (family, sing) = read_family(args.family_file)
    holds = structure_check(family, sing)
    print("structure check " + ("passed" if holds else "failed"))
    return _exit_for(holds)


def cmd_verify_extremal(args):
    (family, sing) = read_family(args.family_file)
    report = verify_extremal(family, sing, jobs=args.jobs,
                             node_budget=args.budget)
    print(report)
    return _exit_for(report.passed)


def cmd_selftest(args):
    results = run_selftest(quick=args.quick, seed=args.seed)
    for result in results:
        print(f"{'PASS' if result.passed else 'FAIL'} {result.name}: "
              f"{result.detail}")
    return _exit_for(all(result.passed for result in results))
