"""Four ways to compute C(N), the X^(q^e - 1) coefficient of f_a^N mod X^(q^e) - X.

* ``brute``       -sum_x f(x)^N over the whole field
* ``multinomial`` direct sum over the exponent arrays alpha (or over the
                  support vectors c for sections 6.2, 7, 8)
* ``borrow-set``  sum over the borrow set of window-product coefficients
* ``closed-form`` the printed value / formula for the case
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..coeffx import WindowProduct, extract_coefficient
from ..combinat import binomial_mod_p, multinomial_mod_p
from ..digits import ExponentPlan, build_plan, enumerate_borrow_set
from ..ffield import CapExceeded, FieldSpec, SWEEP_CAP, chunk_ranges, tables
from ..ppcheck import eval_f_all
from .cases import (CaseParams, NoClosedForm, ROW_SECTIONS, closed_value_mod_p, lemma_for,
                    reduced_coefficients, select_row)
from .support import BudgetExceeded, solve_support_system

METHODS = ("brute", "multinomial", "borrow-set", "closed-form")
MULTINOMIAL_BUDGET = 10**7


@dataclass(frozen=True)
class CNResult:
    N: int
    value: int
    method: str
    plan: ExponentPlan | None = None
    detail: dict = field(default_factory=dict, compare=False, hash=False)


def plan_for(params: CaseParams, variant: str | None = None) -> ExponentPlan:
    row = select_row(params)
    return build_plan(params.section.split(".")[0], params.q, params.e, params.a,
                      row.r, row.s, variant)


def cn_bruteforce(spec: FieldSpec, a: int, N: int, workers: int = 1,
                  chunks: int | None = None) -> CNResult:
    """C(N) = -sum_{x in F} f_a(x)^N.

    The field is cut into contiguous chunks whose partial sums are added in
    F_p; the result does not depend on the chunking.
    """
    Q = spec.cardinality
    if Q > SWEEP_CAP:
        raise CapExceeded(f"|F| = {Q} exceeds sweep cap {SWEEP_CAP}")
    if not 0 < N < Q - 1:
        raise ValueError(f"N={N} outside (0, q^e - 1)")
    t = tables(spec)
    p = spec.p

    def partial(r):
        idx = np.arange(r[0], r[1], dtype=np.int64)
        vals = t.pow(eval_f_all(spec, a, idx), N)
        return t.digits[vals].sum(axis=0) % p

    ranges = chunk_ranges(Q, chunks or max(1, workers))
    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(partial, ranges))
    else:
        parts = [partial(r) for r in ranges]
    total = sum(parts) % p
    if np.any(total[1:]):
        raise ArithmeticError("power sum left the prime field")  # pragma: no cover
    return CNResult(N, int(-total[0] % p), "brute")


# -- multinomial sums ---------------------------------------------------------

def _alpha_groups(plan: ExponentPlan) -> tuple[list[tuple[int, list[int]]], int]:
    """[(total, weights q^... for i = 1..a)], target for the alpha constraint."""
    q, e, a = plan.q, plan.e, plan.a
    low = [q ** (i - 1) for i in range(1, a + 1)]
    if plan.case == "4" and plan.variant == "E1":
        lead = [q ** (e - 3 * a + i - 1) for i in range(1, a + 1)]
        return [(4 * plan.r, lead), (plan.s, low)], plan.S1
    if plan.case == "5" and plan.variant == "E1":
        lead = [q ** (e - 2 * a + i - 1) for i in range(1, a + 1)]
        return [(2 * plan.r, lead), (plan.s, low)], plan.S1
    return [(plan.s, low)], plan.S2


def alpha_sum(groups: list[tuple[int, list[int]]], target: int, p: int,
              budget: int = MULTINOMIAL_BUDGET) -> int:
    """sum over alpha of prod_g multinomial(total_g; alpha_g) mod p subject to
    sum_g sum_i alpha_gi * w_gi = target and sum_i alpha_gi = total_g."""
    # bounds for what the groups after index g can still contribute
    lo_after = [0] * (len(groups) + 1)
    hi_after = [0] * (len(groups) + 1)
    for g in range(len(groups) - 1, -1, -1):
        tot, w = groups[g]
        lo_after[g] = lo_after[g + 1] + tot * min(w)
        hi_after[g] = hi_after[g + 1] + tot * max(w)
    visited = 0

    def rec(g: int, i: int, left: int, rem: int) -> int:
        # place alpha_{g,i} (i counts down); `left` units of group g remain
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"more than {budget} partial alpha arrays")
        w = groups[g][1]
        if i == 0:
            need = rem - left * w[0]
            if g + 1 == len(groups):
                return 1 if need == 0 else 0
            nxt_tot = groups[g + 1][0]
            return rec(g + 1, len(groups[g + 1][1]) - 1, nxt_tot, need)
        acc = 0
        wi, wmin, wmax = w[i], w[0], w[i - 1]
        for x in range(min(left, rem // wi), -1, -1):
            r2 = rem - x * wi
            l2 = left - x
            if r2 < l2 * wmin + lo_after[g + 1] or r2 > l2 * wmax + hi_after[g + 1]:
                continue
            c = binomial_mod_p(left, x, p)
            if c:
                acc += c * rec(g, i - 1, l2, r2)
        return acc % p

    tot0, w0 = groups[0]
    return rec(0, len(w0) - 1, tot0, target) % p


def cn_multinomial_sum(params: CaseParams, plan: ExponentPlan | None = None,
                       budget: int = MULTINOMIAL_BUDGET) -> CNResult:
    p = params.p
    if params.section in ROW_SECTIONS:
        plan = plan or plan_for(params)
        groups, target = _alpha_groups(plan)
        return CNResult(plan.N, alpha_sum(groups, target, p, budget), "multinomial", plan)
    if params.section in ("6.2", "7", "8"):
        N, _ = closed_value_mod_p(params)
        lemma, k = lemma_for(params)
        coef = reduced_coefficients(params)
        sols = solve_support_system(lemma, params.q, params.e, k, mode="brute", budget=budget)
        total = 0
        terms = []
        for sol in sorted(sols):
            m = multinomial_mod_p(N, sol.values, p)
            for j, c in zip(sol.indices(), sol.values):
                m = m * pow(coef[j], c, p) % p
            terms.append((sol.values, m))
            total += m
        return CNResult(N, total % p, "multinomial", None, {"terms": terms})
    raise NoClosedForm(f"no Hermite witness in section {params.section}")


def cn_borrow_set(params: CaseParams, plan: ExponentPlan | None = None) -> CNResult:
    plan = plan or plan_for(params)
    p = params.p
    prod = WindowProduct(params.a, plan.window_exponents)
    eps = enumerate_borrow_set(plan.target_sum, plan.target_weight, params.q)
    contributions = []
    for vec in eps:
        contributions.append((vec.digits, extract_coefficient(prod, vec.digits, p)))
    value = sum(c for _, c in contributions) % p
    return CNResult(plan.N, value, "borrow-set", plan, {"contributions": contributions})


def cn_closed_form(params: CaseParams) -> CNResult:
    p = params.p
    if params.section in ROW_SECTIONS:
        row = select_row(params)
        plan = plan_for(params)
        detail = {"row": row.tag, "printed": row.value}
        return CNResult(plan.N, row.value % p, "closed-form", plan, detail)
    if params.section in ("6.2", "7", "8"):
        N, value = closed_value_mod_p(params)
        detail = {}
        if params.section == "8" and params.q != params.p:
            detail["note"] = "printed display uses p^k - 1; Lemma system forces q^k - 1"
        return CNResult(N, value, "closed-form", None, detail)
    raise NoClosedForm(f"no Hermite witness in section {params.section}")


def cn_all(params: CaseParams, spec: FieldSpec | None = None, workers: int = 1,
           methods: tuple[str, ...] = METHODS,
           budget: int = MULTINOMIAL_BUDGET) -> dict[str, CNResult | str]:
    """Run every requested method that is feasible; infeasible ones map to a reason."""
    out: dict[str, CNResult | str] = {}
    closed = cn_closed_form(params)
    N = closed.N
    for m in methods:
        try:
            if m == "closed-form":
                out[m] = closed
            elif m == "borrow-set":
                if params.section not in ROW_SECTIONS:
                    out[m] = "not applicable"
                    continue
                out[m] = cn_borrow_set(params, closed.plan)
            elif m == "multinomial":
                out[m] = cn_multinomial_sum(params, closed.plan, budget)
            elif m == "brute":
                if spec is None or spec.cardinality > SWEEP_CAP:
                    out[m] = "field too large"
                    continue
                out[m] = cn_bruteforce(spec, params.a, N, workers)
        except (BudgetExceeded, CapExceeded) as exc:
            out[m] = str(exc)
    return out
