"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
terminal summary) or ``python tests/test_acceptance.py``.
"""

import random
import time

from permpoly.coeffx import WindowProduct, dense_coefficient, expand_dense, extract_coefficient
from permpoly.cli import sweep_cases
from permpoly.ffield import make_field, prime_power
from permpoly.hasse import hw_certificate
from permpoly.hermite import (cn_all, cn_borrow_set, dispatch_case,
                              generic_value_mod_p, solve_support_system)
from permpoly.hermite.cases import CaseParams, admissible_us
from permpoly.hermite.support import system
from permpoly.hermite.tables import odd_prime_powers, u_rows
from permpoly.ppcheck import (eval_f_all, eval_terms, f_terms, g_identity_check, is_pp,
                              reduce_a)

try:
    from conftest import ACCEPTANCE
except ImportError:  # pragma: no cover - direct script run from elsewhere
    ACCEPTANCE = {}


def report(n, ok, detail, t0):
    line = f"{detail} ({time.perf_counter() - t0:.1f}s)"
    ACCEPTANCE[n] = (ok, line)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {line}")
    assert ok, line


# 1 -----------------------------------------------------------------------------

def test_criterion_1_conjecture_sweep():
    t0 = time.perf_counter()
    cases = [c for c in sweep_cases(100_000, [2, 3, 5, 7, 11, 13, 17, 19, 23], True) if c[0] <= 27]
    qs = sorted({q for q, _, _ in cases})
    assert qs == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27]
    mismatches = []
    for q, e, a in cases:
        p, k = prime_power(q)
        v = is_pp(make_field(p, k, e), a)
        if not v.agrees:
            mismatches.append((q, e, a))
    report(1, not mismatches,
           f"{len(cases)} triples over {len(qs)} prime powers, {len(mismatches)} mismatches", t0)


# 2 -----------------------------------------------------------------------------

ORACLE_CASES = [
    # (q, e, a, expected value or None)
    (3, 7, 2, 1),
    (3, 10, 3, None),
    (3, 11, 3, None),
    (3, 5, 2, 1),
    (5, 5, 2, None),
    (3, 7, 5, None),
    (3, 8, 5, None),
    (3, 9, 5, None),
    (3, 3, 2, 2), (3, 4, 3, 2), (3, 5, 4, 2),
    (5, 3, 2, 4), (5, 4, 3, 4), (5, 5, 4, 4),
    (9, 3, 2, 2), (9, 4, 3, 2), (9, 5, 4, 2),
    (3, 4, 5, None),
    (3, 4, 7, None),
    (3, 5, 11, 2),
]


def test_criterion_2_oracle_tower():
    t0 = time.perf_counter()
    failures = []
    counted = 0
    for q, e, a, want in ORACLE_CASES:
        P = dispatch_case(q, e, a, require_gcd=False)
        p, k = prime_power(q)
        res = cn_all(P, make_field(p, k, e))
        vals = {m: r.value for m, r in res.items() if not isinstance(r, str)}
        counted += len(vals)
        if P.section == "7":
            want = -(P.u + 1) * pow(P.u, q - 2, p) % p
        ok = "brute" in vals and len(set(vals.values())) == 1 and 0 not in vals.values()
        if want is not None:
            ok = ok and vals["closed-form"] == want
        if not ok:
            failures.append((q, e, a, P.section, vals))
    report(2, not failures,
           f"{len(ORACLE_CASES)} subcases, {counted} method results, failures: {failures}", t0)


# 3 -----------------------------------------------------------------------------

GEOMETRIES = {
    "4.1": [(3, 11), (4, 14), (4, 15), (5, 17), (5, 18), (5, 19)],
    "5.1": [(3, 8), (4, 10), (4, 11), (5, 12), (5, 13), (5, 14)],
    "6.1": [(3, 5), (4, 6), (4, 7), (5, 7), (5, 8), (5, 9)],
}

PRINTED = {
    "4.1": ["3^2*5*11*13", "2*3^2*5^2*13*23*29*31", "2*3*7*11^2*19*23*41*43*47",
            "2^2*3^4*19*29*31*53*59*61*107", "2*5*11*13*17*19*23*37*73*79*137*139"],
    "5.1": ["5*7", "2*5*7*11*13", "2*3^2*7*11*23*37", "2^2*5^3*13*17*29*31"],
    "6.1": ["3", "2*5*7"],
}


def test_criterion_3_generic_closed_forms():
    t0 = time.perf_counter()
    bad = []
    n = 0
    for q in (7, 11, 13, 25, 27, 49, 81, 121, 125):
        p, _ = prime_power(q)
        for sec, geos in GEOMETRIES.items():
            for u in admissible_us(sec, q):
                for a, e in geos:
                    r = cn_borrow_set(CaseParams(q, p, e, a, sec, u=u))
                    n += 1
                    if r.value != generic_value_mod_p(sec, u, p):
                        bad.append((q, sec, u, a, e))
    tables_ok = all([r.factored for r in u_rows(sec)] == PRINTED[sec] for sec in PRINTED)
    tables_ok = tables_ok and u_rows("4.1")[0].value == 6435 == 3**2 * 5 * 11 * 13
    report(3, not bad and tables_ok,
           f"{n} borrow-set evaluations, {len(bad)} disagreements, u-tables match: {tables_ok}", t0)


# 4 -----------------------------------------------------------------------------

def test_criterion_4_lemma_solvers():
    t0 = time.perf_counter()
    bad = []
    n = 0
    for q in (3, 5, 7, 9):
        for e in (3, 4, 5):
            jobs = [("6.5", None), ("7.1", None)] + [("8.1", k) for k in range(1, e)]
            for lemma, k in jobs:
                system(lemma, q, e, k)
                closed = solve_support_system(lemma, q, e, k, "closed")
                brute = solve_support_system(lemma, q, e, k, "brute")
                n += 1
                if closed != brute:
                    bad.append((lemma, q, e, k))
    report(4, not bad, f"{n} systems compared, differing: {bad}", t0)


# 5 -----------------------------------------------------------------------------

def test_criterion_5_window_identity():
    t0 = time.perf_counter()
    rng = random.Random(20240601)
    bad = 0
    nonzero = 0
    for _ in range(1000):
        width = rng.randint(1, 3)
        factors = {rng.randint(0, 4): rng.randint(0, 4) for _ in range(rng.randint(0, 4))}
        prod = WindowProduct(width, factors)
        dense = expand_dense(prod)
        if rng.random() < 0.75:
            target = dict(enumerate(rng.choice(sorted(dense))))
        else:
            nvars = max(prod.factors, default=0) + width
            target = {}
            for _ in range(prod.degree):
                j = rng.randrange(nvars)
                target[j] = target.get(j, 0) + 1
        want = dense_coefficient(prod, target)
        nonzero += want != 0
        if extract_coefficient(prod, target) != want:
            bad += 1
    report(5, bad == 0, f"1000 window products ({nonzero} nonzero), {bad} disagreements", t0)


# 6 -----------------------------------------------------------------------------

def test_criterion_6_hasse_weil():
    t0 = time.perf_counter()
    uncertified = []
    n = 0
    for q in odd_prime_powers(0, 121):
        for a in range(2, 7):
            for e in range(4 * a, 4 * a + 9):
                n += 1
                if not hw_certificate(q, e, a).certified:
                    uncertified.append((q, e, a))
    brute = is_pp(make_field(3, 1, 8), 2)
    ok = not uncertified and not brute.is_pp and hw_certificate(3, 8, 2).certified
    report(6, ok, f"{n} certificates, {len(uncertified)} missing; brute force (3, 8, 2) non-PP "
                  f"with witness {brute.witness}", t0)


# 7 -----------------------------------------------------------------------------

def test_criterion_7_identities():
    t0 = time.perf_counter()
    bad = []
    n = 0
    for q in (3, 5, 9):
        p, k = prime_power(q)
        for e in (2, 3):
            spec = make_field(p, k, e)
            for a in range(1, 5):
                if a + 1 > p * e - 1:
                    continue
                n += 1
                if not g_identity_check(spec, a):
                    bad.append(("g", q, e, a))
    for e in (2, 3, 4):
        spec = make_field(3, 1, e)
        xs = list(range(spec.cardinality))
        for a in range(1, 2 * 3 * e + 1):
            r = reduce_a(a, 3, e)
            n += 1
            if list(eval_f_all(spec, a)) != list(eval_terms(spec, f_terms(3, e, r, 3), xs)):
                bad.append(("reduce", e, a))
    report(7, not bad, f"{n} identity checks, failures: {bad}", t0)


if __name__ == "__main__":  # pragma: no cover
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
