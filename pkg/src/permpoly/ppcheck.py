"""Brute-force evaluation and permutation tests for f_a = sum_{i=1..a} X^(q^i - 2)."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ffield import (CapExceeded, FieldElement, FieldSpec, SWEEP_CAP, chunk_ranges,
                     element_pow, frobenius_q, subfield_q, tables)


@dataclass(frozen=True)
class PPVerdict:
    q: int
    e: int
    a: int
    is_pp: bool
    expected: bool
    witness: tuple[int, int] | None = None
    method: str = "brute"

    @property
    def agrees(self) -> bool:
        return self.is_pp == self.expected


def reduce_exponent_class(m: int, Q: int) -> int:
    """Canonical exponent of X^m modulo X^Q - X (0 stays 0, else in [1, Q-1])."""
    if m == 0:
        return 0
    return (m - 1) % (Q - 1) + 1


def f_terms(q: int, e: int, a: int, p: int) -> dict[int, int]:
    """f_a reduced mod X^(q^e) - X as {exponent: coefficient mod p}.

    a = 0 and a = -1 follow the conventions f_0 = 0, f_{-1} = -X^(q^e - 2).
    For a > e the q^i - 2 exponents repeat with period e, which collapses f
    to a combination of X^(q^j - 2), j = 1..e, with multiplicities u or u+1.
    """
    Q = q**e
    if a < -1:
        raise ValueError("a must be at least -1")
    if a == -1:
        return {Q - 2: p - 1} if Q - 2 > 0 else {0: p - 1}
    out: dict[int, int] = {}
    for i in range(1, a + 1):
        # q^i mod (Q-1) = q^(i mod e), so X^(q^i - 2) only depends on i mod e,
        # except for the constant term X^0 (q = 2, i = 1)
        key = 0 if q**i == 2 else (pow(q, i, Q - 1) - 3) % (Q - 1) + 1
        out[key] = (out.get(key, 0) + 1) % p
    return {k: c for k, c in sorted(out.items()) if c}


def eval_terms(spec: FieldSpec, terms: dict[int, int], idx: np.ndarray) -> np.ndarray:
    """Evaluate sum c_m x^m at the element indices `idx` (vectorised)."""
    t = tables(spec)
    digits = np.zeros((len(idx), spec.n), dtype=np.int64)
    for m, c in terms.items():
        digits += c * t.digits[t.pow(idx, m)]
    return t.encode(digits)


def eval_f_all(spec: FieldSpec, a: int, idx: np.ndarray | None = None) -> np.ndarray:
    if idx is None:
        idx = np.arange(spec.cardinality, dtype=np.int64)
    return eval_terms(spec, f_terms(spec.q, spec.e, a, spec.p), idx)


def eval_f(spec: FieldSpec, a: int, x: FieldElement, method: str = "fast") -> FieldElement:
    """f_a(x) for a >= 1.

    ``termwise`` sums x^(q^i - 2) directly (0^0 = 1); ``fast`` computes
    (sum_i x^(q^i)) * x^(-2) for x != 0 via the Frobenius map.
    """
    if a < 1:
        raise ValueError("a must be positive")
    q = spec.q
    if method == "termwise" or x.is_zero():
        acc = spec.zero
        for i in range(1, a + 1):
            acc = acc + element_pow(x, q**i - 2)
        return acc
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    acc = spec.zero
    for i in range(1, a + 1):
        acc = acc + frobenius_q(x, i)
    return acc * (x * x).inverse()


def _check_cap(spec: FieldSpec) -> None:
    if spec.cardinality > SWEEP_CAP:
        raise CapExceeded(f"|F| = {spec.cardinality} exceeds sweep cap {SWEEP_CAP}")


def _image(spec: FieldSpec, terms: dict[int, int], workers: int = 1) -> np.ndarray:
    Q = spec.cardinality
    ranges = chunk_ranges(Q, max(1, workers))

    def run(r):
        return eval_terms(spec, terms, np.arange(r[0], r[1], dtype=np.int64))

    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(run, ranges))
    else:
        parts = [run(r) for r in ranges]
    return np.concatenate(parts)


def first_collision(values: np.ndarray) -> tuple[int, int] | None:
    """Lexicographically least (x, y), x < y, with values[x] == values[y]."""
    order = np.argsort(values, kind="stable")
    sv = values[order]
    dup = np.nonzero(sv[1:] == sv[:-1])[0]
    if len(dup) == 0:
        return None
    # within a run of equal values the stable sort keeps indices ascending,
    # so the pair (run start, run start + 1) is that value's least pair
    starts = dup[np.concatenate(([True], dup[1:] != dup[:-1] + 1))]
    pairs = [(int(order[s]), int(order[s + 1])) for s in starts]
    return min(pairs)


def conjecture_expected(q: int, e: int, a: int) -> bool:
    """True iff (a = 2 and q = 2) or (a = 1 and gcd(q-2, q^e-1) = 1)."""
    return (a == 2 and q == 2) or (a == 1 and math.gcd(q - 2, q**e - 1) == 1)


def is_pp(spec: FieldSpec, a: int, workers: int = 1) -> PPVerdict:
    _check_cap(spec)
    values = _image(spec, f_terms(spec.q, spec.e, a, spec.p), workers)
    hits = np.bincount(values, minlength=spec.cardinality)
    ok = bool(np.all(hits == 1))
    witness = None if ok else first_collision(values)
    return PPVerdict(spec.q, spec.e, a, ok, conjecture_expected(spec.q, spec.e, a), witness)


def gcd_condition(a: int, p: int, e: int) -> bool:
    return math.gcd(a, p * e) == 1


def kernel_test(spec: FieldSpec, a: int) -> bool:
    """True iff L(X) = X + X^q + ... + X^(q^(a-1)) vanishes only at 0."""
    _check_cap(spec)
    Q, q = spec.cardinality, spec.q
    terms: dict[int, int] = {}
    for i in range(a):
        key = (pow(q, i, Q - 1) - 1) % (Q - 1) + 1
        terms[key] = (terms.get(key, 0) + 1) % spec.p
    terms = {m: c for m, c in terms.items() if c}
    values = eval_terms(spec, terms, np.arange(Q, dtype=np.int64))
    return int(np.count_nonzero(values == 0)) == 1


def reduce_a(a: int, p: int, e: int) -> int:
    """Representative of a mod pe in [-1, pe - 2]."""
    if a < -1:
        raise ValueError("a must be at least -1")
    r = a % (p * e)
    return -1 if r == p * e - 1 else r


def g_identity_check(spec: FieldSpec, a: int) -> bool:
    """Check f_a(x^q - x) = sum_{c in F_q} (x + c)^(q^(a+1) - 2) at every x."""
    _check_cap(spec)
    if a < 1 or a + 1 > spec.p * spec.e - 1:
        raise ValueError("need 1 <= a and a + 1 <= pe - 1")
    t = tables(spec)
    Q, q = spec.cardinality, spec.q
    xs = np.arange(Q, dtype=np.int64)
    arg = t.add(t.pow(xs, q), t.scale(xs, -1))
    lhs = eval_f_all(spec, a, arg)
    n = q ** (a + 1) - 2
    m = reduce_exponent_class(n, Q)
    rhs = np.zeros(Q, dtype=np.int64)
    for c in subfield_q(spec):
        shifted = t.add(xs, np.full(Q, c.index, dtype=np.int64))
        rhs = t.add(rhs, t.pow(shifted, m))
    return bool(np.array_equal(lhs, rhs))
