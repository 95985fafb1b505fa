"""Exact covering number of a family of subspaces.

A cover T must contain a point of every member, so while some member M
misses T the search branches over the points of M and adjoins each to T.
The search runs by iterative deepening on dim T, which makes the first depth
that succeeds the covering number. Every cover of that dimension lies in X,
the span of the family: the nonzero vectors picked from each T ∩ M span a
cover inside T, which equals T by minimality. The witness is then the first
cover among the subspaces of X listed in Subspace.key order."""
import logging
from collections import namedtuple
from multiprocessing import Pool

import qcover.config as config
import qcover.settings as settings
from qcover.error.core_errors import InternalError
from qcover.error.family_error import EmptyFamilyError, OracleSizeError
from qcover.error.subspace_error import DimensionRangeError
from qcover.qcount.gaussian import gaussian
from qcover.subspace.enumeration import (enumerate_subspaces,
                                         enumerate_subspaces_by_key)
from qcover.subspace.subspace import intersects, span_of

from .family import is_intersecting, span_family
from .incidence import iter_bits

CoverResult = namedtuple("CoverResult", [
    "tau", "witness", "nodes_explored", "exact", "lower_bound",
    "intersecting"
])


class _BudgetExhausted(Exception):
    pass


class _DepthSearch:
    """Depth-limited search for a cover of a fixed dimension.

    Subspaces that failed at a given remaining depth are memoized, since a
    failed subtree holds no cover."""
    def __init__(self, family, depth, node_budget):
        self._spec = family.spec
        self._ambient = family.ambient
        self._incidence = family.incidence
        self._depth = depth
        self._node_budget = node_budget
        self._failed = set()
        self._nodes = 0

    @property
    def nodes(self):
        return self._nodes

    def first_branches(self):
        """Points of the first member, the branches at the root."""
        return list(iter_bits(self._incidence.member_points(0)))

    def run_branch(self, point_idx):
        vector = self._incidence.point_vector(point_idx)
        return self._extend(span_of(self._spec, self._ambient, [vector]),
                            self._depth - 1)

    def run(self):
        for point_idx in self.first_branches():
            found = self.run_branch(point_idx)
            if found is not None:
                return found
        return None

    def _extend(self, partial, remaining):
        self._nodes += 1
        if self._nodes > self._node_budget:
            raise _BudgetExhausted
        incidence = self._incidence
        covered = incidence.members_covered(incidence.point_mask(partial))
        uncovered = incidence.full_mask & ~covered
        if not uncovered:
            return partial
        if remaining == 0 or (partial.key, remaining) in self._failed:
            return None
        first_missed = (uncovered & -uncovered).bit_length() - 1
        for point_idx in iter_bits(incidence.member_points(first_missed)):
            vector = incidence.point_vector(point_idx)
            grown = span_of(self._spec, self._ambient,
                            partial.rows + (vector, ))
            found = self._extend(grown, remaining - 1)
            if found is not None:
                return found
        self._failed.add((partial.key, remaining))
        return None


_worker_state = {}


def _init_worker(family, depth, node_budget):
    _worker_state["family"] = family
    _worker_state["depth"] = depth
    _worker_state["node_budget"] = node_budget


def _run_worker_branch(point_idx):
    search = _DepthSearch(_worker_state["family"], _worker_state["depth"],
                          _worker_state["node_budget"])
    try:
        found = search.run_branch(point_idx)
    except _BudgetExhausted:
        return (point_idx, None, search.nodes, False)
    return (point_idx, found, search.nodes, True)


def _search_depth_parallel(family, depth, node_budget, jobs):
    """Runs the root branches on a worker pool. Each branch gets the full
    node budget."""
    branches = _DepthSearch(family, depth, node_budget).first_branches()
    with Pool(processes=jobs,
              initializer=_init_worker,
              initargs=(family, depth, node_budget)) as pool:
        outcomes = pool.map(_run_worker_branch, branches)
    nodes = sum(outcome[2] for outcome in outcomes)
    for (_, found, _, _) in outcomes:
        if found is not None:
            return (found, nodes)
    if not all(outcome[3] for outcome in outcomes):
        raise _BudgetExhausted(nodes)
    return (None, nodes)


def _search_depth(family, depth, node_budget, jobs):
    if jobs > 1:
        return _search_depth_parallel(family, depth, node_budget, jobs)
    search = _DepthSearch(family, depth, node_budget)
    try:
        found = search.run()
    except _BudgetExhausted:
        raise _BudgetExhausted(search.nodes)
    return (found, search.nodes)


def _least_cover(family, dim):
    """The cover of dimension dim inside X with the smallest key, and the
    number of candidates scanned.

    Throws:
        InternalError: if X holds no cover of that dimension.
    """
    incidence = family.incidence
    candidates = enumerate_subspaces_by_key(incidence.space, dim)
    for (scanned, candidate) in enumerate(candidates, start=1):
        covered = incidence.members_covered(incidence.point_mask(candidate))
        if covered == incidence.full_mask:
            return (candidate, scanned)
    raise InternalError(f"no {dim}-dimensional cover inside "
                        f"{incidence.space}")


def _validate_and_return_members(family):
    if not len(family):
        raise EmptyFamilyError("the covering number of an empty family is "
                               "undefined")
    if family.m < 1:
        raise DimensionRangeError("members of dimension 0 cannot be covered")


def covering_number(family, jobs=None, node_budget=None):
    """Exact covering number with a witness cover.

    The witness is the cover of dimension tau with the smallest key, so it
    does not depend on the number of workers. A non-intersecting family is
    accepted with a warning, and its trivial upper bound is dim X.

    When the node budget runs out the result has exact=False, tau is the
    trivial upper bound with its cover (the first member, or X) and
    lower_bound the largest dimension proven too small plus one.

    Throws:
        EmptyFamilyError: if the family has no members.
    """
    _validate_and_return_members(family)
    jobs = settings.resolve_setting("jobs", jobs)
    node_budget = settings.resolve_setting("node_budget", node_budget)
    intersecting = is_intersecting(family).holds
    if intersecting:
        (upper, fallback) = (family.m, family.members[0])
    else:
        logging.warning("Covering number requested for a non-intersecting "
                        "family")
        space = span_family(family)
        (upper, fallback) = (space.dim, space)
    logging.info(f"Covering search over {len(family)} members, upper bound "
                 f"{upper}, jobs={jobs}")
    total_nodes = 0
    for depth in range(1, upper):
        logging.debug(f"Covering search at depth {depth}")
        try:
            (found, nodes) = _search_depth(family, depth, node_budget, jobs)
        except _BudgetExhausted as exhausted:
            total_nodes += exhausted.args[0] if exhausted.args else 0
            logging.warning(f"Node budget {node_budget} exhausted at depth "
                            f"{depth}; tau >= {depth}")
            return CoverResult(upper, fallback, total_nodes, False, depth,
                               intersecting)
        total_nodes += nodes
        if found is not None:
            tau = depth
            break
    else:
        tau = upper
    (witness, scanned) = _least_cover(family, tau)
    total_nodes += scanned
    logging.info(f"tau = {tau} after {total_nodes} nodes, {scanned} "
                 f"candidates scanned for the least witness")
    return CoverResult(tau, witness, total_nodes, True, tau, intersecting)


def covering_number_oracle(family, max_subspaces=None):
    """Brute-force covering number: tests every s-subspace of X for
    s = 1, 2, ... with direct meet computations. The witness is the first
    cover in enumeration order.

    Throws:
        EmptyFamilyError: if the family has no members.
        OracleSizeError: if some level to scan has more than max_subspaces
            subspaces.
    """
    _validate_and_return_members(family)
    max_subspaces = max_subspaces or config.oracle_max_subspaces
    space = span_family(family)
    intersecting = is_intersecting(family).holds
    explored = 0
    for dim in range(1, space.dim + 1):
        level_size = gaussian(space.dim, dim, family.spec.q)
        if level_size > max_subspaces:
            raise OracleSizeError(f"{level_size} subspaces of dimension {dim} "
                                  f"exceed the oracle cap {max_subspaces}")
        for candidate in enumerate_subspaces(space, dim):
            explored += 1
            if all(intersects(candidate, member) for member in family):
                return CoverResult(dim, candidate, explored, True, dim,
                                   intersecting)
    raise DimensionRangeError("no cover found inside the span")
