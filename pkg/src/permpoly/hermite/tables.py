"""The u-tables of the generic sections and the q that survive them.

For the generic (r, s) choice with parameter u (admissible when
threshold(u) < q), C(N) is a fixed integer independent of q.  A field of
characteristic p escapes all of them only when p divides every admissible
value, which leaves a short list of prime powers.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..combinat import factorize, format_factorization
from ..ffield import prime_power
from .cases import generic_value, u_threshold

COROLLARY_SECTIONS = {"cor4.4": "4.1", "cor5.4": "5.1", "cor6.4": "6.1"}


@dataclass(frozen=True)
class URow:
    u: int
    threshold: int
    value: int
    factors: dict[int, int]

    @property
    def factored(self) -> str:
        return format_factorization(self.value)


@dataclass(frozen=True)
class RangeRow:
    lo: int | None  # exclusive
    hi: int | None  # inclusive
    us: tuple[int, ...]
    primes: tuple[int, ...]
    qs: tuple[int, ...]


def odd_prime_powers(lo: int, hi: int, primes=None) -> list[int]:
    """Odd prime powers q with lo < q <= hi, optionally restricted to primes."""
    out = []
    for q in range(max(lo + 1, 3), hi + 1):
        if q % 2 == 0:
            continue
        try:
            p, _ = prime_power(q)
        except ValueError:
            continue
        if primes is None or p in primes:
            out.append(q)
    return out


def u_rows(section: str) -> list[URow]:
    """u = 1, 2, ... while some odd prime still divides every value so far."""
    rows = []
    common = None
    u = 1
    while True:
        value = generic_value(section, u)
        fac = factorize(value)
        rows.append(URow(u, u_threshold(section, u), value, fac))
        odd = {p for p in fac if p != 2}
        common = odd if common is None else common & odd
        if not common:
            return rows
        u += 1


def range_rows(section: str) -> list[RangeRow]:
    rows = u_rows(section)
    out = [RangeRow(None, rows[0].threshold, (), (), tuple(odd_prime_powers(0, rows[0].threshold)))]
    common: set[int] | None = None
    for i, row in enumerate(rows):
        odd = {p for p in row.factors if p != 2}
        common = odd if common is None else common & odd
        hi = rows[i + 1].threshold if i + 1 < len(rows) else None
        us = tuple(r.u for r in rows[: i + 1])
        qs = () if hi is None or not common else tuple(odd_prime_powers(row.threshold, hi, common))
        out.append(RangeRow(row.threshold, hi, us, tuple(sorted(common)), qs))
    return out


def exceptional_qs(section: str) -> list[int]:
    """All q the table leaves open, in increasing order."""
    return sorted(q for r in range_rows(section) for q in r.qs)
