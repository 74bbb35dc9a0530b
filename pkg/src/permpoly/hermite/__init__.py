"""C(N) computations: case dispatch, support systems and the four methods."""

from .cases import (CaseParams, DispatchError, NoClosedForm, Row, admissible_us, dispatch_case,
                    generic_value, generic_value_mod_p, select_row, u_threshold)
from .methods import (CNResult, METHODS, alpha_sum, cn_all, cn_borrow_set, cn_bruteforce,
                      cn_closed_form, cn_multinomial_sum, plan_for)
from .support import BudgetExceeded, SolutionVector, check_solution, solve_support_system

__all__ = [
    "BudgetExceeded", "CNResult", "CaseParams", "DispatchError", "METHODS", "NoClosedForm", "Row",
    "SolutionVector", "admissible_us", "alpha_sum", "check_solution", "cn_all", "cn_borrow_set",
    "cn_bruteforce", "cn_closed_form", "cn_multinomial_sum", "dispatch_case", "generic_value",
    "generic_value_mod_p", "plan_for", "select_row", "solve_support_system", "u_threshold",
]
