"""Exact verification of the counting inequalities behind the bounds.

Every comparison is between Python integers or fractions.Fraction values,
so quotients such as q^(m-1)/(q-1)^(m-2) are compared by cross
multiplication, never in floating point. An IneqReport's headline is always
a strict "lhs < rhs"; chained checks list each link as a Step."""
from collections import namedtuple
from fractions import Fraction

from qcover.error.count_error import ParameterRangeError

from .gaussian import (count_type, eq99_t, gaussian, point_count,
                       require_type_condition)

IneqReport = namedtuple("IneqReport",
                        ["kind", "params", "lhs", "rhs", "holds", "steps"])
Step = namedtuple("Step", ["name", "lhs", "relation", "rhs", "holds"])

_RELATIONS = {
    "<": lambda lhs, rhs: lhs < rhs,
    "<=": lambda lhs, rhs: lhs <= rhs,
    ">": lambda lhs, rhs: lhs > rhs,
    ">=": lambda lhs, rhs: lhs >= rhs,
}


def make_step(name, lhs, relation, rhs):
    return Step(name, lhs, relation, rhs, _RELATIONS[relation](lhs, rhs))


def _make_report(kind, params, lhs, rhs, steps=()):
    return IneqReport(kind, params, lhs, rhs, lhs < rhs, tuple(steps))


def all_steps_hold(report):
    return report.holds and all(step.holds for step in report.steps)


def _require(condition, message):
    if not condition:
        raise ParameterRangeError(message)


def thm12_lhs(m, q):
    """Right hand side of the bound for families whose span has dimension
    at least 2m: [m-1 1][m 1]^(m-1) + [m-1 1]^2 [2m-3 m-2]."""
    _require(m >= 2 and q >= 2, f"thm12_lhs needs m >= 2, q >= 2; got "
             f"m={m}, q={q}")
    first = point_count(m - 1, q)
    return first * point_count(m, q)**(m - 1) + \
        first**2 * gaussian(2 * m - 3, m - 2, q)


def thm12_rhs(m, q):
    """[2m-1 m], the size of the extremal family."""
    _require(m >= 1 and q >= 2, f"thm12_rhs needs m >= 1, q >= 2; got "
             f"m={m}, q={q}")
    return gaussian(2 * m - 1, m, q)


def verify_ineq_23(m, q):
    """lhs of the large-span bound < [2m-1 m]. Truth values for q < m are
    reported, not asserted."""
    _require(m >= 3 and q >= 2, f"inequality (2.3) needs m >= 3, q >= 2; "
             f"got m={m}, q={q}")
    return _make_report("ineq_23", {"m": m, "q": q}, thm12_lhs(m, q),
                        thm12_rhs(m, q))


def verify_chain_thm12(m, q):
    """Checks each link of the argument that the large-span bound is below
    [2m-1 m] when m >= 4 and q >= m."""
    _require(m >= 4 and q >= m, f"the chain needs m >= 4 and q >= m; got "
             f"m={m}, q={q}")
    target = gaussian(2 * m - 1, m, q)
    inner = gaussian(2 * m - 3, m - 2, q)
    ratio = Fraction(q**(m - 1), (q - 1)**(m - 2))
    lhs = thm12_lhs(m, q)
    span_bound = ratio * Fraction(1, (q - 1)**2) * q**(m * (m - 1)) + \
        Fraction(q**(2 * (m - 1)), (q - 1)**2) * inner
    steps = [
        make_step("[2m-1 m] > q^(m(m-1))", target, ">",
                  q**(m * (m - 1))),
        make_step("[2m-1 m] > q^(2(m-1)) [2m-3 m-2]", target, ">",
                  q**(2 * (m - 1)) * inner),
        make_step("(1-1/q)^(m-3) >= 1-(m-3)/q",
                  Fraction(q - 1, q)**(m - 3), ">=",
                  1 - Fraction(m - 3, q)),
        make_step("1-(m-3)/q > 1-(m-3)/(q-1)",
                  1 - Fraction(m - 3, q), ">", 1 - Fraction(m - 3, q - 1)),
        make_step("q^(m-1)/(q-1)^(m-2) < q^2/(q-m+2)", ratio, "<",
                  Fraction(q**2, q - m + 2)),
        # q^2/(q-m+2) <= q^2/(q-2) fails for m > 4, so no link through it
        make_step("q^2/(q-m+2) <= q(q-2)", Fraction(q**2, q - m + 2),
                  "<=", q * (q - 2)),
        make_step("q^(m-1)/(q-1)^(m-2) < q(q-2)", ratio, "<",
                  q * (q - 2)),
        make_step("lhs < large-span bound", lhs, "<", span_bound),
        make_step("large-span bound < [2m-1 m]", span_bound, "<", target),
    ]
    return _make_report("chain_thm12", {"m": m, "q": q}, lhs, target, steps)


def verify_ineq_10(a, b, q):
    """q^(b(a-b)) < [a b] <= [a-b+1 1]^b."""
    _require(a > b >= 1 and q >= 2, f"inequality (10) needs a > b >= 1 and "
             f"q >= 2; got a={a}, b={b}, q={q}")
    value = gaussian(a, b, q)
    upper = point_count(a - b + 1, q)**b
    steps = [
        make_step("q^(b(a-b)) < [a b]", q**(b * (a - b)), "<", value),
        make_step("[a b] <= [a-b+1 1]^b", value, "<=", upper),
    ]
    return _make_report("ineq_10", {"a": a, "b": b, "q": q},
                        q**(b * (a - b)), value, steps)


def verify_ineq_233(m, k, n, l, q):
    """Large-span bound < N(m,k;2m-1,t;n+l,n) with t from eq99_t, plus the
    auxiliary steps of its proof.

    Throws:
        ParameterRangeError: unless q >= m+2 >= 5.
        InfeasibleTypeError: if (m, k, 2m-1, t, n, l) violates the
            feasibility condition; the message names the clause.
    """
    _require(m >= 3 and q >= m + 2, f"the typed bound needs q >= m+2 >= 5; "
             f"got m={m}, q={q}")
    _require(k >= 0 and n >= 1 and l >= 0, f"need k >= 0, n >= 1, l >= 0; "
             f"got k={k}, n={n}, l={l}")
    t = eq99_t(m, k, n)
    require_type_condition(m, k, 2 * m - 1, t, n, l)
    lhs = thm12_lhs(m, q)
    target = count_type(m, k, 2 * m - 1, t, n, l, q)
    top = q**(m * (m - 1))
    split_bound = Fraction(q**(m - 1) + q**(m - 2), (q - 1)**m) * top
    steps = [
        make_step("[2m-3 m-2] <= [m 1]^(m-2)",
                  gaussian(2 * m - 3, m - 2, q), "<=",
                  point_count(m, q)**(m - 2)),
        make_step("lhs < split bound", lhs, "<", split_bound),
        make_step("(q-1)^m > q^m - m q^(m-1)", (q - 1)**m, ">",
                  q**m - m * q**(m - 1)),
        make_step("q^m - m q^(m-1) >= q^m - (q-2) q^(m-1)",
                  q**m - m * q**(m - 1), ">=", q**m - (q - 2) * q**(m - 1)),
        make_step("q^m - (q-2) q^(m-1) > q^(m-1) + q^(m-2)",
                  q**m - (q - 2) * q**(m - 1), ">", q**(m - 1) + q**(m - 2)),
        make_step("(q-1)^m > q^(m-1) + q^(m-2)", (q - 1)**m, ">",
                  q**(m - 1) + q**(m - 2)),
        make_step("split bound < q^(m(m-1))", split_bound, "<", top),
        make_step("q^(m(m-1)) <= N(m,k;2m-1,t)", top, "<=", target),
    ]
    params = {"m": m, "k": k, "n": n, "l": l, "q": q, "t": t}
    return _make_report("ineq_233", params, lhs, target, steps)


def verify_t_choice_k0(m, n, l, q):
    """N(m,0;2m-1,t) is maximal over feasible t exactly at
    t = max{0, 2m-1-n}: lhs is the best competing count (0 if t is the only
    feasible choice), rhs the count at that t.

    Throws:
        InfeasibleTypeError: if t = max{0, 2m-1-n} is itself infeasible.
    """
    _require(m >= 2 and n >= 1 and l >= 0 and q >= 2, f"need m >= 2, "
             f"n >= 1, l >= 0, q >= 2; got m={m}, n={n}, l={l}, q={q}")
    chosen = eq99_t(m, 0, n)
    require_type_condition(m, 0, 2 * m - 1, chosen, n, l)
    steps = []
    competitor = 0
    for t in range(0, 2 * m):
        value = count_type(m, 0, 2 * m - 1, t, n, l, q)
        if value == 0:
            continue
        steps.append(make_step(f"N(m,0;2m-1,{t})", value, ">=", 0))
        if t != chosen:
            competitor = max(competitor, value)
    return _make_report("t_choice_k0", {"m": m, "n": n, "l": l, "q": q,
                                        "t": chosen}, competitor,
                        count_type(m, 0, 2 * m - 1, chosen, n, l, q), steps)
