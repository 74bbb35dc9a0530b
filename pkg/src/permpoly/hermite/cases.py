"""Range dispatch for (q, e, a) and the table of (r, s) choices per case.

Sections are named after the range of a they cover:

    "3"   2 <= a <= e/4          (Hasse-Weil, no Hermite witness)
    "4.1" 3a+2 <= e < 4a         "4.2" e = 3a+1
    "5.1" 2a+2 <= e < 3a         "5.2" e = 2a+1
    "6.1" a+2 <= e < 2a          "6.2" e = a+1
    "7"   e < a < (p-1)e         "8"   (p-1)e < a <= pe-2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..combinat import generalized_binomial, generalized_binomial_mod_p
from ..ffield import prime_power


class DispatchError(ValueError):
    pass


class NoClosedForm(LookupError):
    pass


@dataclass(frozen=True)
class CaseParams:
    q: int
    p: int
    e: int
    a: int
    section: str
    u: int | None = None
    v: int | None = None
    k: int | None = None
    subcase: str | None = None


def _section(p: int, e: int, a: int) -> str:
    if 4 * a <= e:
        return "3"
    if 3 * a < e:
        return "4.2" if e == 3 * a + 1 else "4.1"
    if 2 * a < e < 3 * a:
        return "5.2" if e == 2 * a + 1 else "5.1"
    if a < e < 2 * a:
        return "6.2" if e == a + 1 else "6.1"
    if e < a < (p - 1) * e:
        return "7"
    if (p - 1) * e < a <= p * e - 2:
        return "8"
    raise DispatchError(f"a={a} lies on a range boundary for e={e}, p={p}")


def dispatch_case(q: int, e: int, a: int, require_gcd: bool = True) -> CaseParams:
    """Place (q, e, a) in its section and fill in u, v, k and the table row.

    ``require_gcd=False`` skips the gcd(a, pe) = 1 filter; the coefficient
    formulas themselves do not depend on it.
    """
    p, _ = prime_power(q)
    if p == 2:
        raise DispatchError("the Hermite tier covers odd q only")
    if e < 2:
        raise DispatchError("e must be at least 2")
    if not 1 <= a <= p * e - 2:
        raise DispatchError(f"a={a} outside [1, pe-2]")
    if require_gcd and math.gcd(a, p * e) != 1:
        raise DispatchError(f"gcd(a, pe) = gcd({a}, {p * e}) != 1; L(X) has a nonzero root")
    if a == 1:
        raise DispatchError("a = 1 is settled by gcd(q-2, q^e-1)")
    section = _section(p, e, a)
    u = v = k = None
    if section == "7":
        u, v = divmod(a - 1, e)
        v += 1
    elif section == "8":
        k = a + 1 - (p - 1) * e
    params = CaseParams(q, p, e, a, section, u, v, k)
    if section in ROW_SECTIONS:
        row = select_row(params)
        params = CaseParams(q, p, e, a, section, row.u, None, None, row.tag)
    elif section == "6.2":
        params = CaseParams(q, p, e, a, section, subcase="N=q^2-1")
    return params


# -- case table ---------------------------------------------------------------

@dataclass(frozen=True)
class Row:
    section: str
    tag: str
    r: int
    s: int
    value: int | None  # the coefficient as printed (an integer, reduce mod p)
    u: int | None = None


def _generic_rs(section: str, q: int, u: int) -> tuple[int, int]:
    if section == "4.1":
        return q - 2 * u, q - u + (15 * u - 8) * q
    if section == "5.1":
        return q - 2 * u, q - u + (7 * u - 4) * q
    if section == "6.1":
        return q - 2 * u, q - u + (3 * u - 2) * q
    raise NoClosedForm(section)


def generic_value(section: str, u: int) -> int:
    """The exact-integer closed form in u (q replaced by 0, as mod p)."""
    if section == "4.1":
        return generalized_binomial(-u, 30 * u - 15) * generalized_binomial(-16 * u + 7, 7)
    if section == "5.1":
        return generalized_binomial(-u, 14 * u - 7) * generalized_binomial(-8 * u + 3, 3)
    if section == "6.1":
        return (-4 * u + 1) * generalized_binomial(-u, 6 * u - 3)
    raise NoClosedForm(section)


def generic_value_mod_p(section: str, u: int, p: int) -> int:
    g = generalized_binomial_mod_p
    if section == "4.1":
        return g(-u, 30 * u - 15, p) * g(-16 * u + 7, 7, p) % p
    if section == "5.1":
        return g(-u, 14 * u - 7, p) * g(-8 * u + 3, 3, p) % p
    if section == "6.1":
        return (-4 * u + 1) * g(-u, 6 * u - 3, p) % p
    raise NoClosedForm(section)


def u_threshold(section: str, u: int) -> int:
    """u is admissible iff this value is < q."""
    return {"4.1": 30 * u - 15, "5.1": 14 * u - 7, "6.1": 6 * u - 3}[section]


def admissible_us(section: str, q: int) -> list[int]:
    out = []
    u = 1
    while u_threshold(section, u) < q:
        out.append(u)
        u += 1
    return out


def generic_row(section: str, q: int, u: int) -> Row:
    if u not in admissible_us(section, q):
        raise NoClosedForm(f"u={u} not admissible for q={q} in section {section}")
    r, s = _generic_rs(section, q, u)
    return Row(section, f"generic u={u}", r, s, generic_value(section, u), u)


def _b(n, m):
    return math.comb(n, m)


def specific_row(section: str, q: int, e: int, a: int) -> Row | None:
    """The per-q choices for small q; None when the generic formula applies."""
    d = e - 3 * a if section.startswith("4") else e - 2 * a
    if section == "4.1":
        if q == 13:
            return Row(section, "q=13", 5, 9 + 4 * q, _b(4, 1))
        if q == 11:
            return Row(section, "q=11", 3, 7 + 2 * q, _b(7, 5) * _b(4, 2))
        if q == 7:
            return Row(section, "q=7", 1, 4 + q, _b(4, 3) * _b(2, 1))
        if q == 25:
            if d >= 3:
                return Row(section, "q=25, e>=3a+3", 3, 14 + 12 * q + q**d, 3)
            return Row(section, "q=25, e=3a+2", 3, 14 + 13 * q, _b(14, 2))
        if q == 5:
            if d >= 3:
                return Row(section, "q=5, e>=3a+3", 3, 4 + 2 * q + q**d, 3)
            return Row(section, "q=5, e=3a+2", 3, 4 + 3 * q, _b(4, 2))
        if q == 81:
            if d >= 3:
                return Row(section, "q=81, e>=3a+3", q - 10, q - 5 + 67 * q, 4)
            return Row(section, "q=81, e=3a+2", q - 10, q - 5 + 67 * q, 1)
        if q == 27:
            return Row(section, "q=27", 1, 14 + 5 * q, _b(14, 11))
        if q == 9:
            if d >= 3:
                return Row(section, "q=9, e>=3a+3", 1, 5 + 2 * q + q * q + q**d, 5)
            return Row(section, "q=9, e=3a+2", 1, 5 + 4 * q, 1)
        if q == 3:
            return Row(section, "q=3", 1, 2 + q**d, 4)
        return None
    if section == "4.2":
        if q > 8:
            return Row(section, "q>8", q - 2, q - 1 + 7 * q, -1)
        if q == 7:
            return Row(section, "q=7", 1, 4 + q, _b(5, 1))
        if q == 5:
            return Row(section, "q=5, a>=3" if a >= 3 else "q=5, a=2", 2, 1 + q * q, 3 if a >= 3 else 2)
        if q == 3:
            return Row(section, "q=3, a>=3" if a >= 3 else "q=3, a=2", 1, 2 + q, 2 if a >= 3 else 1)
    if section == "5.1":
        if q == 49:
            if d >= 3:
                return Row(section, "q=49, e>=2a+3", 6, 3 + 25 * q + 2 * q * q, _b(3, 1) * _b(27, 5))
            return Row(section, "q=49, e=2a+2", 6, 3 + 26 * q + q**3, _b(26, 25) * _b(12, 11))
        if q == 7:
            if d >= 3:
                return Row(section, "q=7, e>=2a+3", 1, 4 + 5 * q, _b(5, 1))
            return Row(section, "q=7, e=2a+2", 1, 4 + 5 * q, 1)
        if q == 25:
            return Row(section, "q=25", 3, 14 + q, _b(14, 3))
        if q == 5:
            return Row(section, "q=5", 1, 3 + q + q**d, _b(3, 2))
        if q == 3:
            return Row(section, "q=3", 2, 1 + q**d, 2)
        return None
    if section == "5.2":
        if q > 4:
            return Row(section, "q>4", q - 2, q - 1 + 3 * q, -1)
        return Row(section, "q=3, a>=3" if a >= 3 else "q=3, a=2", 2, 1 + q, 2 if a >= 3 else 1)
    if section == "6.1":
        if q == 9:
            return Row(section, "q=9", 1, 5 + 2 * q, 1)
        if q == 3:
            return Row(section, "q=3", 1, 2 * q ** (e - a - 1) - 1, 1)
        return None
    raise NoClosedForm(section)


ROW_SECTIONS = ("4.1", "4.2", "5.1", "5.2", "6.1")


def select_row(params: CaseParams) -> Row:
    """The table row for params; generic sections pick the least u with C != 0 mod p."""
    sec, q, p = params.section, params.q, params.p
    if sec not in ROW_SECTIONS:
        raise NoClosedForm(sec)
    if params.u is not None and sec in ("4.1", "5.1", "6.1"):
        return generic_row(sec, q, params.u)
    row = specific_row(sec, q, params.e, params.a)
    if row is not None:
        return row
    for u in admissible_us(sec, q):
        if generic_value_mod_p(sec, u, p):
            return generic_row(sec, q, u)
    raise NoClosedForm(f"no u gives a nonzero coefficient for q={q} in section {sec}")


def closed_value_mod_p(params: CaseParams) -> tuple[int, int]:
    """(N, C(N) mod p) for the formula-only sections 6.2, 7 and 8."""
    q, p, e = params.q, params.p, params.e
    if params.section == "6.2":
        return q * q - 1, p - 1
    if params.section == "7":
        u = params.u
        if params.v == e:
            # e | a: every coefficient is u + 1 and the formula does not apply
            raise NoClosedForm("e divides a; no closed value for N = q - 1")
        return q - 1, -(u + 1) * pow(u, q - 2, p) % p
    if params.section == "8":
        return q**params.k - 1, p - 1
    raise NoClosedForm(params.section)


def reduced_coefficients(params: CaseParams) -> dict[int, int]:
    """{j: coefficient of X^(q^j - 2)} of f reduced mod X^(q^e) - X."""
    q, p, e, a = params.q, params.p, params.e, params.a
    if params.section == "6.2":
        return {j: 1 for j in range(1, e)}
    if params.section == "7":
        u, v = params.u, params.v
        return {j: (u + 1 if j <= v else u) % p for j in range(1, e + 1)}
    if params.section == "8":
        return {j: p - 1 for j in range(params.k, e + 1)}
    raise NoClosedForm(params.section)


def lemma_for(params: CaseParams) -> tuple[str, int | None]:
    return {"6.2": ("6.5", None), "7": ("7.1", None), "8": ("8.1", params.k)}[params.section]
