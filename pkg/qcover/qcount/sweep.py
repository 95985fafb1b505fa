"""Parameter sweeps over the inequality checkers, tabulated as DataFrames."""
import logging

import pandas as pd

import qcover.config as config
from qcover.gfq.field import prime_powers

from .gaussian import check_type_condition, eq99_t
from .inequality import (all_steps_hold, verify_chain_thm12, verify_ineq_10,
                         verify_ineq_23, verify_ineq_233)

_COLUMNS = ["kind", "params", "lhs", "rhs", "holds", "steps_hold"]


def reports_to_frame(reports):
    """One row per report; lhs/rhs stay exact Python integers (object
    dtype)."""
    rows = [{
        "kind": report.kind,
        "params": ",".join(f"{k}={v}" for (k, v) in report.params.items()),
        "lhs": report.lhs,
        "rhs": report.rhs,
        "holds": report.holds,
        "steps_hold": all(step.holds for step in report.steps)
    } for report in reports]
    return pd.DataFrame(rows, columns=_COLUMNS)


def sweep_holds(frame):
    return bool(frame["holds"].all() and frame["steps_hold"].all())


def sweep_ineq_23(m_range=None, q_max=None):
    (m_lo, m_hi) = m_range or config.sweep_ineq_23_m_range
    q_max = q_max or config.sweep_ineq_23_q_max
    reports = [
        verify_ineq_23(m, q) for m in range(m_lo, m_hi + 1)
        for q in prime_powers(m, q_max)
    ]
    logging.info(f"Swept inequality (2.3) over {len(reports)} instances")
    return reports_to_frame(reports)


def sweep_chain_thm12(m_range=None, q_max=None):
    (m_lo, m_hi) = m_range or config.sweep_chain_m_range
    q_max = q_max or config.sweep_chain_q_max
    reports = [
        verify_chain_thm12(m, q) for m in range(max(m_lo, 4), m_hi + 1)
        for q in prime_powers(m, q_max)
    ]
    logging.info(f"Swept the (2.3) chain over {len(reports)} instances")
    return reports_to_frame(reports)


def sweep_ineq_10(a_max=None, qs=None):
    a_max = a_max or config.sweep_ineq_10_a_max
    qs = qs or config.sweep_ineq_10_qs
    reports = [
        verify_ineq_10(a, b, q) for q in qs for a in range(2, a_max + 1)
        for b in range(1, a)
    ]
    logging.info(f"Swept inequality (10) over {len(reports)} instances")
    return reports_to_frame(reports)


def ineq_233_grid(m):
    """Feasible (k, n, l) for a given m: every k in [0, m] and n, l up to
    2m+1 for which eq99_t gives a feasible type."""
    grid = []
    for k in range(0, m + 1):
        for n in range(1, 2 * m + 2):
            t = eq99_t(m, k, n)
            for l in range(0, 2 * m + 2):
                if check_type_condition(m, k, 2 * m - 1, t, n, l) is None:
                    grid.append((k, n, l))
    return grid


def sweep_ineq_233(m_range=None, q_max=None):
    (m_lo, m_hi) = m_range or config.sweep_ineq_233_m_range
    q_max = q_max or config.sweep_ineq_233_q_max
    reports = [
        verify_ineq_233(m, k, n, l, q) for m in range(max(m_lo, 3), m_hi + 1)
        for q in prime_powers(m + 2, q_max) for (k, n, l) in ineq_233_grid(m)
    ]
    logging.info(f"Swept inequality (233) over {len(reports)} instances")
    return reports_to_frame(reports)


def failing_rows(frame):
    return frame[~(frame["holds"] & frame["steps_hold"])]


__all__ = [
    "all_steps_hold", "failing_rows", "ineq_233_grid", "reports_to_frame",
    "sweep_chain_thm12", "sweep_holds", "sweep_ineq_10", "sweep_ineq_23",
    "sweep_ineq_233"
]
