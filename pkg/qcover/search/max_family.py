"""Exhaustive search for largest intersecting families with a lower bound on
the covering number.

Intersecting families of m-subspaces are the cliques of the intersection
graph. Adding members never lowers the covering number, so a largest family
with tau >= min_tau is a maximal clique; the search is a colouring-bounded
maximum clique branch and bound (vertices ordered by degree, ties canonical)
that checks tau only where no candidate is left. Ties with the best size are
explored, so every optimum is found."""
import logging
import time
from collections import namedtuple
from multiprocessing import Pool

import networkx as nx

import qcover.settings as settings
from qcover.error.count_error import ParameterRangeError
from qcover.error.search_error import DeskScaleGateError
from qcover.family.covering import covering_number
from qcover.family.family import Family
from qcover.family.incidence import iter_bits
from qcover.gfq.field import make_field
from qcover.qcount.gaussian import gaussian
from qcover.singular.extremal import structure_check
from qcover.subspace.enumeration import enumerate_subspaces
from qcover.subspace.subspace import full_space

from .recorder import SearchRecorder

SearchCertificate = namedtuple("SearchCertificate", [
    "parameters", "result", "witness", "optimal", "nodes", "wall_time",
    "optima", "structure_checks"
])

_MAXIMIZE = "maximize"


class _BudgetExhausted(Exception):
    pass


class IntersectionGraph:
    """All m-subspaces of GF(q)^n as vertices (canonical order), adjacent
    when they meet nontrivially."""
    def __init__(self, spec, n_amb, m):
        self._spec = spec
        self._n_amb = n_amb
        self._m = m
        self._family = Family(enumerate_subspaces(full_space(spec, n_amb), m),
                              spec, n_amb, m)
        incidence = self._family.incidence
        self._point_masks = tuple(
            incidence.member_points(idx) for idx in range(len(self._family)))
        self._graph = nx.Graph()
        self._graph.add_nodes_from(range(len(self._family)))
        for idx in range(len(self._family)):
            later = incidence.members_meeting(idx) >> (idx + 1)
            self._graph.add_edges_from(
                (idx, idx + 1 + other) for other in iter_bits(later))
        logging.info(f"Intersection graph: {self._graph.number_of_nodes()} "
                     f"vertices, {self._graph.number_of_edges()} edges")

    @property
    def graph(self):
        return self._graph

    @property
    def family(self):
        return self._family

    @property
    def point_masks(self):
        return self._point_masks

    def search_order(self):
        """Vertices by non-increasing degree, ties in canonical order."""
        return sorted(self._graph.nodes,
                      key=lambda vertex: (-self._graph.degree[vertex], vertex))

    def clique_number(self):
        """Maximum clique size by networkx, independent of the search."""
        return max((len(clique) for clique in nx.find_cliques(self._graph)),
                   default=0)


class _CliqueSearch:
    """Branch and bound over vertex positions in search order; vertex sets
    are bitmasks over positions."""
    def __init__(self, state):
        self._order = state["order"]
        self._adjacency = state["adjacency"]
        self._point_masks = state["point_masks"]
        self._members = state["members"]
        self._shape = state["shape"]
        self._min_tau = state["min_tau"]
        self._target = state["target"]
        self._node_budget = state["node_budget"]
        self._best = 0 if self._target is None else self._target
        self._optima = []
        self._uncertain = False
        self._recorder = SearchRecorder()

    @property
    def best(self):
        return self._best

    @property
    def optima(self):
        return self._optima

    @property
    def uncertain(self):
        return self._uncertain

    @property
    def recorder(self):
        return self._recorder

    def _colour_sort(self, candidates):
        """Greedy colouring of the candidates in position order; returns
        (vertex, colour) pairs by non-decreasing colour."""
        adjacency = self._adjacency
        ordered = []
        colour = 0
        uncoloured = candidates
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                low = available & -available
                vertex = low.bit_length() - 1
                available &= ~adjacency[vertex] & ~low
                uncoloured &= ~low
                ordered.append((vertex, colour))
        return ordered

    def root_branches(self, candidates):
        """(vertex, candidates left for it) per root branch, in the order
        the sequential search takes them."""
        branches = []
        for (vertex, _) in reversed(self._colour_sort(candidates)):
            branches.append((vertex, candidates & self._adjacency[vertex]))
            candidates &= ~(1 << vertex)
        return branches

    def run_branch(self, vertex, candidates):
        self._visit([vertex], candidates)

    def run(self, candidates):
        self._expand([], candidates)

    def _expand(self, clique, candidates):
        for (vertex, colour) in reversed(self._colour_sort(candidates)):
            if len(clique) + colour < self._best:
                self._recorder.increment("pruned")
                return
            self._visit(clique + [vertex],
                        candidates & self._adjacency[vertex])
            if self._found_target():
                return
            candidates &= ~(1 << vertex)

    def _visit(self, clique, candidates):
        self._recorder.increment("nodes")
        if self._recorder["nodes"] > self._node_budget:
            raise _BudgetExhausted
        if candidates:
            self._expand(clique, candidates)
        elif len(clique) >= self._best:
            self._leaf(clique)

    def _found_target(self):
        return self._target is not None and bool(self._optima)

    def _leaf(self, clique):
        self._recorder.increment("leaves")
        if not self._tau_at_least(clique):
            return
        if self._target is None and len(clique) > self._best:
            self._best = len(clique)
            self._optima = []
        self._optima.append(sorted(self._order[pos] for pos in clique))

    def _tau_at_least(self, clique):
        if self._min_tau <= 1:
            return True
        self._recorder.increment("tau_checks")
        common = -1
        for pos in clique:
            common &= self._point_masks[pos]
        if common:
            return False
        if self._min_tau == 2:
            return True
        (spec, n_amb, m) = self._shape
        family = Family([self._members[pos] for pos in clique], spec, n_amb, m)
        cover = covering_number(family, jobs=1)
        if not cover.exact:
            self._uncertain = True
            return cover.lower_bound >= self._min_tau
        return cover.tau >= self._min_tau


_worker_state = {}


def _init_worker(state):
    _worker_state.update(state)


def _run_worker_branch(branch):
    (vertex, candidates) = branch
    search = _CliqueSearch(_worker_state)
    try:
        search.run_branch(vertex, candidates)
    except _BudgetExhausted:
        return (search.best, [], dict(search.recorder), False)
    return (search.best, search.optima, dict(search.recorder),
            not search.uncertain)


def _validate_and_return_spec(q, n_amb, m, min_tau):
    spec = make_field(q)
    if not (1 <= m <= n_amb):
        raise ParameterRangeError(f"m={m} outside [1, {n_amb}]")
    if not (1 <= min_tau <= m):
        raise ParameterRangeError(f"min_tau={min_tau} outside [1, {m}]")
    return spec


def _search_state(graph, shape, min_tau, target, node_budget):
    order = graph.search_order()
    position = {vertex: pos for (pos, vertex) in enumerate(order)}
    adjacency = tuple(
        sum(1 << position[other] for other in graph.graph.neighbors(vertex))
        for vertex in order)
    return {
        "order": order,
        "adjacency": adjacency,
        "point_masks": tuple(graph.point_masks[vertex] for vertex in order),
        "members": tuple(graph.family.members[vertex] for vertex in order),
        "shape": shape,
        "min_tau": min_tau,
        "target": target,
        "node_budget": node_budget
    }


def _run_search(state, jobs):
    """Returns (best, optima as sorted vertex lists, recorder, complete)."""
    all_vertices = (1 << len(state["order"])) - 1
    search = _CliqueSearch(state)
    if jobs <= 1:
        try:
            search.run(all_vertices)
        except _BudgetExhausted:
            logging.warning(f"Node budget {state['node_budget']} exhausted")
            return (search.best, search.optima, search.recorder, False)
        return (search.best, search.optima, search.recorder,
                not search.uncertain)
    branches = search.root_branches(all_vertices)
    with Pool(processes=jobs, initializer=_init_worker,
              initargs=(state, )) as pool:
        outcomes = pool.map(_run_worker_branch, branches)
    recorder = SearchRecorder()
    for outcome in outcomes:
        recorder.merge(outcome[2])
    complete = all(outcome[3] for outcome in outcomes)
    if state["target"] is None:
        best = max(outcome[0] for outcome in outcomes)
        optima = [
            optimum for outcome in outcomes for optimum in outcome[1]
            if len(optimum) == best
        ]
    else:
        optima = [optimum for outcome in outcomes for optimum in outcome[1]]
        best = state["target"]
    return (best, optima, recorder, complete)


def _search(q, n_amb, m, min_tau, target, jobs, size_gate, force,
            node_budget):
    spec = _validate_and_return_spec(q, n_amb, m, min_tau)
    jobs = settings.resolve_setting("jobs", jobs)
    size_gate = settings.resolve_setting("size_gate", size_gate)
    node_budget = settings.resolve_setting("node_budget", node_budget)
    num_vertices = gaussian(n_amb, m, q)
    if num_vertices > size_gate and not force:
        raise DeskScaleGateError(num_vertices, size_gate)
    start = time.perf_counter()
    graph = IntersectionGraph(spec, n_amb, m)
    state = _search_state(graph, (spec, n_amb, m), min_tau, target,
                          node_budget)
    (best, optima, recorder, complete) = _run_search(state, jobs)
    families = [
        Family([graph.family.members[vertex] for vertex in optimum], spec,
               n_amb, m) for optimum in sorted(optima)
    ]
    wall_time = time.perf_counter() - start
    logging.info(f"Search finished: best={best}, {len(families)} optima, "
                 f"{recorder['nodes']} nodes, {wall_time:.2f}s")
    return (families, recorder, complete, wall_time)


def max_family(q, n_amb, m, min_tau, jobs=None, size_gate=None, force=False,
               node_budget=None):
    """Largest intersecting family of m-subspaces of GF(q)^n_amb with
    tau >= min_tau. The witness is the lexicographically least optimum (as
    a sorted list of canonical vertex indices); every optimum found is
    structure checked.

    Throws:
        ParameterRangeError: unless 1 <= min_tau <= m <= n_amb.
        DeskScaleGateError: if there are more m-subspaces than the size gate
            allows and force is not set.
    """
    (families, recorder, complete, wall_time) = _search(
        q, n_amb, m, min_tau, None, jobs, size_gate, force, node_budget)
    result = len(families[0]) if families else 0
    parameters = {
        "q": q, "n": n_amb, "m": m, "min_tau": min_tau, "target": _MAXIMIZE
    }
    checks = tuple(structure_check(family) for family in families)
    return SearchCertificate(parameters, result,
                             families[0] if families else None, complete,
                             recorder["nodes"], wall_time, tuple(families),
                             checks)


def exists_family(q, n_amb, m, min_tau, target_size, jobs=None,
                  size_gate=None, force=False, node_budget=None):
    """Decision form: a family of size >= target_size with tau >= min_tau,
    or a proof that none exists (result 0, witness None, optimal True).

    Throws:
        ParameterRangeError: unless target_size >= 1 and
            1 <= min_tau <= m <= n_amb.
        DeskScaleGateError: as for max_family.
    """
    if target_size < 1:
        raise ParameterRangeError(f"target size must be >= 1, got "
                                  f"{target_size}")
    (families, recorder, complete, wall_time) = _search(
        q, n_amb, m, min_tau, target_size, jobs, size_gate, force,
        node_budget)
    witness = families[0] if families else None
    parameters = {
        "q": q, "n": n_amb, "m": m, "min_tau": min_tau, "target": target_size
    }
    # a witness settles the question even when the budget ran out elsewhere
    decided = complete or witness is not None
    return SearchCertificate(parameters, len(witness) if witness else 0,
                             witness, decided, recorder["nodes"], wall_time,
                             tuple(families[:1]), ())
