"""Binomial and multinomial coefficients mod p via base-p digits."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence


def _digits(n: int, p: int) -> list[int]:
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


@lru_cache(maxsize=1 << 16)
def binomial_mod_p(n: int, m: int, p: int) -> int:
    """binom(n, m) mod p by Lucas' theorem; 0 unless 0 <= m <= n."""
    if m < 0 or n < 0 or m > n:
        return 0
    out = 1
    while m:
        n, nd = divmod(n, p)
        m, md = divmod(m, p)
        if md > nd:
            return 0
        out = out * math.comb(nd, md) % p
    return out % p


def multinomial_mod_p(n: int, parts: Sequence[int], p: int) -> int:
    """n! / prod(n_i!) mod p, or 0 when the parts do not sum to n.

    Each base-p digit position must split without carries; the result is the
    product of the digit-level multinomials.
    """
    if any(x < 0 for x in parts) or sum(parts) != n:
        return 0
    nd = _digits(n, p)
    pd = [_digits(x, p) for x in parts]
    out = 1
    for j, top in enumerate(nd):
        col = [d[j] for d in pd if j < len(d)]
        if sum(col) != top:
            return 0
        for c in col:
            out = out * math.comb(top, c) % p
            top -= c
    return out % p


def multinomial(n: int, parts: Sequence[int]) -> int:
    """Exact multinomial coefficient (0 when the parts do not sum to n)."""
    if any(x < 0 for x in parts) or sum(parts) != n:
        return 0
    out, left = 1, n
    for x in parts:
        out *= math.comb(left, x)
        left -= x
    return out


def generalized_binomial(t: int, m: int) -> int:
    """Exact t(t-1)...(t-m+1)/m! for any integer t."""
    if m < 0:
        return 0
    if t >= 0:
        return math.comb(t, m)
    return (-1) ** m * math.comb(-t + m - 1, m)


def generalized_binomial_mod_p(t: int, m: int, p: int) -> int:
    if m < 0:
        return 0
    if t >= 0:
        return binomial_mod_p(t, m, p)
    sign = -1 if m % 2 else 1
    return sign * binomial_mod_p(-t + m - 1, m, p) % p


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation of |n| by trial division."""
    n = abs(n)
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def format_factorization(n: int) -> str:
    if n == 0:
        return "0"
    f = factorize(n)
    body = "*".join(f"{p}^{k}" if k > 1 else str(p) for p, k in sorted(f.items())) or "1"
    return ("-" if n < 0 else "") + body
