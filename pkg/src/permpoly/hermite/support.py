"""Exponent systems behind C(N) for e = a + 1, e < a < (p-1)e and a > (p-1)e.

For N = q^2 - 1, q - 1 or q^k - 1 the coefficient C(N) is a sum of
multinomials over the vectors c with sum(c_j) = N and
sum(c_j (q^j - 2)) = 0 mod (q^e - 1).  Each system has a short explicit
solution list; ``mode="brute"`` enumerates every composition instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LEMMAS = ("6.5", "7.1", "8.1")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class SolutionVector:
    values: tuple[int, ...]
    lemma: str
    first_index: int  # j of values[0]

    def indices(self) -> range:
        return range(self.first_index, self.first_index + len(self.values))


def system(lemma: str, q: int, e: int, k: int | None = None) -> tuple[int, int, int]:
    """(first index j0, last index j1, required sum) for a lemma."""
    if lemma == "6.5":
        if e < 3:
            raise ValueError("lemma 6.5 needs e >= 3")
        return 1, e - 1, q * q - 1
    if lemma == "7.1":
        if e < 2:
            raise ValueError("lemma 7.1 needs e >= 2")
        return 1, e, q - 1
    if lemma == "8.1":
        if k is None or not 1 <= k < e:
            raise ValueError("lemma 8.1 needs 1 <= k < e")
        return k, e, q**k - 1
    raise ValueError(f"unknown lemma {lemma!r}")


def _closed(lemma: str, q: int, e: int, k: int | None) -> list[tuple[int, ...]]:
    if lemma == "6.5":
        if e == 3:
            return [(2 * q - 1, q * q - 2 * q)]
        if e == 4:
            return [(q - 1, q + 1, q * q - 2 * q - 1), (2 * q - 1, 0, q * q - 2 * q)]
        mid = (0,) * (e - 5)
        return [(q - 1, 1) + mid + (q, q * q - 2 * q - 1),
                (2 * q - 1,) + (0,) * (e - 3) + (q * q - 2 * q,)]
    if lemma == "7.1":
        return [(1,) + (0,) * (e - 2) + (q - 2,)]
    return [(1,) + (0,) * (e - k - 1) + (q**k - 2,)]


def _brute(q: int, e: int, j0: int, j1: int, total: int, budget: int) -> list[tuple[int, ...]]:
    mod = q**e - 1
    w = [(q**j - 2) % mod for j in range(j0, j1 + 1)]
    m = len(w)
    out = []
    count = 0
    vec = [0] * m

    def last_two(left, res):
        # c * w[-2] + (left - c) * w[-1] = -res (mod mod), 0 <= c <= left
        d = (w[-2] - w[-1]) % mod
        rhs = (-res - left * w[-1]) % mod
        g = math.gcd(d, mod)
        if rhs % g:
            return
        step = mod // g
        c = rhs // g * pow(d // g, -1, step) % step if step > 1 else 0
        for c in range(c, left + 1, step):
            vec[-2], vec[-1] = c, left - c
            out.append(tuple(vec))

    def rec(i, left, res):
        nonlocal count
        count += 1
        if count > budget:
            raise BudgetExceeded(f"more than {budget} partial vectors")
        if i == m - 2:
            last_two(left, res)
            return
        for c in range(left + 1):
            vec[i] = c
            rec(i + 1, left - c, (res + c * w[i]) % mod)

    if m == 1:
        if total * w[0] % mod == 0:
            out.append((total,))
    else:
        rec(0, total, 0)
    return sorted(out)


def solve_support_system(lemma: str, q: int, e: int, k: int | None = None,
                         mode: str = "closed", budget: int = 10**7) -> set[SolutionVector]:
    j0, j1, total = system(lemma, q, e, k)
    if mode == "closed":
        vals = _closed(lemma, q, e, k)
    elif mode == "brute":
        vals = _brute(q, e, j0, j1, total, budget)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return {SolutionVector(v, lemma, j0) for v in vals}


def check_solution(sol: SolutionVector, q: int, e: int, total: int) -> bool:
    mod = q**e - 1
    acc = sum(c * (q**j - 2) for j, c in zip(sol.indices(), sol.values))
    return sum(sol.values) == total and acc % mod == 0
