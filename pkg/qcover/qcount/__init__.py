from .gaussian import (check_type_condition, count_type, eq99_t, gaussian,
                       point_count, require_type_condition)
from .inequality import (IneqReport, Step, all_steps_hold, thm12_lhs,
                         thm12_rhs, verify_chain_thm12, verify_ineq_10,
                         verify_ineq_23, verify_ineq_233, verify_t_choice_k0)
from .sweep import (failing_rows, reports_to_frame, sweep_chain_thm12,
                    sweep_holds, sweep_ineq_10, sweep_ineq_23, sweep_ineq_233)
