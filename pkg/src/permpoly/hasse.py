"""Hasse-Weil non-permutation certificate for 2 <= a <= e/4.

If f_a were a PP, F(X, Y) = (f(X) - f(Y)) / (X - Y) could have at most one
zero on the diagonal and none off it.  With d = q^a - 3 the Hasse-Weil
bound gives at least

    q^e - (d-1)(d-2) q^(e/2) - d(d-1)^2 / 2 - d - 2

zeros, which is > 1 as soon as q^(e/2) exceeds the larger root lambda of
X^2 - (d-1)(d-2) X - d(d-1)^2/2 - d - 3.  Everything here is exact integer
arithmetic; q^(e/2) for odd e is only ever compared through squares.
Absolute irreducibility of F is taken as given, not checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ffield import prime_power


@dataclass(frozen=True)
class HWCertificate:
    q: int
    e: int
    a: int
    d: int
    bound: int
    lambda_check: bool
    certified: bool
    chain: tuple[bool, bool, bool] = (False, False, False)  # lambda<d^2, d^2<q^2a, 4a<=e
    assumption: str = "F(X, Y) absolutely irreducible (not checked)"


def ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def point_bound(q: int, e: int, d: int) -> int:
    """A lower bound for the zero count, rounded down at every step."""
    Q = q**e
    A = (d - 1) * (d - 2)
    half_pow = q ** (e // 2) if e % 2 == 0 else ceil_sqrt(Q)
    return Q - A * half_pow - -(-d * (d - 1) ** 2 // 2) - d - 2


def lambda_below_sqrt(d: int, Q: int) -> bool:
    """Exact test of lambda < sqrt(Q).

    lambda is the larger root of X^2 - A X - c with A = (d-1)(d-2) and
    2c = d(d-1)^2 + 2d + 6, so lambda < B = sqrt(Q) iff B > A/2 and
    Q - A B - c > 0, i.e. 4Q > A^2, 2Q > 2c and 4 A^2 Q < (2Q - 2c)^2.
    """
    A = (d - 1) * (d - 2)
    c2 = d * (d - 1) ** 2 + 2 * d + 6
    return 4 * Q > A * A and 2 * Q > c2 and 4 * A * A * Q < (2 * Q - c2) ** 2


def lambda_below(d: int, m: int) -> bool:
    """Exact test of lambda < m for an integer m."""
    A = (d - 1) * (d - 2)
    c2 = d * (d - 1) ** 2 + 2 * d + 6
    return 2 * m > A and 2 * (m * m - A * m) > c2


def hw_certificate(q: int, e: int, a: int) -> HWCertificate:
    prime_power(q)
    if not (2 <= a and 4 * a <= e):
        raise ValueError(f"need 2 <= a <= e/4, got a={a}, e={e}")
    d = q**a - 3
    Q = q**e
    bound = point_bound(q, e, d)
    lam = lambda_below_sqrt(d, Q)
    chain = (lambda_below(d, d * d), d * d < q ** (2 * a), 4 * a <= e)
    return HWCertificate(q, e, a, d, bound, lam, bound > 1 and lam, chain)
