"""Runs the invariant suite at tiny parameters; behind `qcover selftest`."""
import itertools
import logging
from collections import namedtuple

import qcover.rng as rng
from qcover.error.core_errors import InternalError
from qcover.family.covering import covering_number, covering_number_oracle
from qcover.family.extension import lemma21_extend
from qcover.family.family import count_through, is_intersecting
from qcover.gfq.field import make_field
from qcover.qcount.gaussian import count_type, gaussian, point_count
from qcover.qcount.inequality import (all_steps_hold, verify_chain_thm12,
                                      verify_ineq_23)
from qcover.search.max_family import max_family
from qcover.singular.extremal import (construct_extremal_thm12,
                                      construct_trivial)
from qcover.singular.singular_space import (SingularSpace, enumerate_type,
                                            type_of)
from qcover.subspace.construction import lemma37_construct
from qcover.subspace.enumeration import enumerate_subspaces
from qcover.subspace.sampling import random_pair_with_meet
from qcover.subspace.subspace import full_space, span_of, standard_vector

SelftestResult = namedtuple("SelftestResult", ["name", "passed", "detail"])

_PINNED_GAUSSIANS = (((3, 2, 2), 7), ((5, 3, 2), 155), ((5, 3, 3), 1210),
                     ((4, 2, 3), 130))


def _check_field_axioms(q):
    spec = make_field(q)
    elements = range(q)
    for (a, b) in itertools.product(elements, repeat=2):
        if spec.add(a, b) != spec.add(b, a) or \
                spec.mul(a, b) != spec.mul(b, a):
            return SelftestResult(f"field GF({q})", False,
                                  f"not commutative at ({a}, {b})")
    for a in elements[1:]:
        if spec.mul(a, spec.inv(a)) != 1:
            return SelftestResult(f"field GF({q})", False,
                                  f"bad inverse of {a}")
    return SelftestResult(f"field GF({q})", True, "axioms hold")


def _check_gaussians():
    bad = [(args, expected) for (args, expected) in _PINNED_GAUSSIANS
           if gaussian(*args) != expected]
    return SelftestResult("gaussian pins", not bad,
                          f"{len(_PINNED_GAUSSIANS) - len(bad)} of "
                          f"{len(_PINNED_GAUSSIANS)} match")


def _check_enumeration(max_dim, q):
    spec = make_field(q)
    for dim in range(1, max_dim + 1):
        space = full_space(spec, dim)
        for sub_dim in range(dim + 1):
            count = sum(1 for _ in enumerate_subspaces(space, sub_dim))
            if count != gaussian(dim, sub_dim, q):
                return SelftestResult(f"enumeration q={q}", False,
                                      f"[{dim} {sub_dim}] gave {count}")
    return SelftestResult(f"enumeration q={q}", True,
                          f"counts match up to dimension {max_dim}")


def _check_type_counts(max_ambient, q):
    spec = make_field(q)
    checked = 0
    for ambient in range(1, max_ambient + 1):
        for l in range(ambient):
            sing = SingularSpace(spec, ambient - l, l)
            space = full_space(spec, ambient)
            (m_space, k_space) = type_of(sing, space)
            for (m, k) in itertools.product(range(ambient + 1), repeat=2):
                # enumerate_type asserts the formula count itself
                found = sum(1 for _ in enumerate_type(sing, space, m, k))
                if found != count_type(m, k, m_space, k_space, sing.n,
                                       sing.l, q):
                    return SelftestResult(f"type counts q={q}", False,
                                          f"type ({m},{k}) in n={sing.n}, "
                                          f"l={l}")
                checked += 1
    return SelftestResult(f"type counts q={q}", True,
                          f"{checked} types checked")


def _check_lemma37(q, num_instances, ambient, state):
    spec = make_field(q)
    for _ in range(num_instances):
        a = int(state.randint(0, ambient + 1))
        b = int(state.randint(0, a + 1))
        c = int(state.randint(max(0, a + b - ambient), b + 1))
        (first, second) = random_pair_with_meet(spec, ambient, a, b, c,
                                                state)
        d = int(state.randint(0, a - b + 1))
        # postconditions are re-verified inside the construction
        try:
            lemma37_construct(first, second, d)
        except InternalError as error:
            return SelftestResult(f"lemma37 q={q}", False, str(error))
    return SelftestResult(f"lemma37 q={q}", True,
                          f"{num_instances} random instances")


def _check_extremal_tau(q, m):
    spec = make_field(q)
    family = construct_extremal_thm12(spec, 2 * m - 1, m)
    cover = covering_number(family)
    oracle = covering_number_oracle(family)
    passed = len(family) == gaussian(2 * m - 1, m, q) and \
        cover.tau == oracle.tau == m and is_intersecting(family).holds
    return SelftestResult(f"extremal q={q} m={m}", passed,
                          f"|F|={len(family)}, tau={cover.tau}, "
                          f"oracle={oracle.tau}")


def _check_trivial_extension(q, ambient, m):
    spec = make_field(q)
    point = span_of(spec, ambient, [standard_vector(ambient, 0)])
    family = construct_trivial(spec, ambient, m, point)
    factor = point_count(m, q)
    other = span_of(spec, ambient, [standard_vector(ambient, 1)])
    # the hypothesis needs a member missing S; S = e2 is missed by some
    target = lemma21_extend(family, other)
    passed = covering_number(family).tau == 1 and \
        count_through(family, target) * factor >= count_through(family, other)
    return SelftestResult(f"trivial q={q} n={ambient} m={m}", passed,
                          f"|F|={len(family)}")


def _check_inequalities():
    reports = [verify_ineq_23(3, 3), verify_chain_thm12(4, 4),
               verify_chain_thm12(4, 5)]
    passed = all(all_steps_hold(report) for report in reports)
    return SelftestResult("inequalities", passed,
                          f"{reports[0].lhs} < {reports[0].rhs} and chain "
                          f"steps at m=4")


def _check_max_family(q):
    search = max_family(q, 4, 2, 2)
    passed = search.optimal and search.result == gaussian(3, 2, q) and \
        all(search.structure_checks)
    return SelftestResult(f"max family q={q} n=4 m=2", passed,
                          f"size={search.result}, "
                          f"{len(search.optima)} optima")


def run_selftest(quick=False, seed=0):
    state = rng.make_random_state(seed)
    checks = [
        lambda: _check_field_axioms(4),
        lambda: _check_field_axioms(9),
        _check_gaussians,
        lambda: _check_enumeration(4 if quick else 5, 2),
        lambda: _check_type_counts(3 if quick else 4, 2),
        lambda: _check_lemma37(2, 50 if quick else 300, 5, state),
        lambda: _check_lemma37(3, 20 if quick else 100, 5, state),
        lambda: _check_extremal_tau(2, 2),
        lambda: _check_trivial_extension(2, 4, 2),
        _check_inequalities,
        lambda: _check_max_family(2),
    ]
    if not quick:
        checks += [
            lambda: _check_field_axioms(16),
            lambda: _check_extremal_tau(3, 2),
            lambda: _check_extremal_tau(2, 3),
            lambda: _check_max_family(3),
        ]
    results = []
    for check in checks:
        result = check()
        logging.info(f"selftest {result.name}: "
                     f"{'pass' if result.passed else 'FAIL'}")
        results.append(result)
    return results

