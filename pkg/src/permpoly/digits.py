"""Base-q digit arithmetic, borrow sets and the per-case exponent plans."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence


class PlanError(ValueError):
    """The (r, s) pair does not satisfy the template's preconditions."""


@dataclass(frozen=True)
class DigitVector:
    """Finitely supported sequence of nonnegative digits (trailing zeros dropped)."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        d = list(self.digits)
        if any(x < 0 for x in d):
            raise ValueError("digits must be nonnegative")
        while d and d[-1] == 0:
            d.pop()
        object.__setattr__(self, "digits", tuple(d))

    def __getitem__(self, j: int) -> int:
        return self.digits[j] if 0 <= j < len(self.digits) else 0

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @property
    def value(self) -> int:
        return sum(d * self.base**j for j, d in enumerate(self.digits))

    @property
    def weight(self) -> int:
        return sum(self.digits)

    @property
    def is_canonical(self) -> bool:
        return all(d < self.base for d in self.digits)

    def support(self) -> dict[int, int]:
        return {j: d for j, d in enumerate(self.digits) if d}

    def padded(self, length: int) -> tuple[int, ...]:
        return self.digits + (0,) * (length - len(self.digits))


def base_q_digits(s: int, q: int) -> DigitVector:
    if s < 0:
        raise ValueError("s must be nonnegative")
    if q < 2:
        raise ValueError("base must be at least 2")
    out = []
    while s:
        s, d = divmod(s, q)
        out.append(d)
    return DigitVector(tuple(out), q)


def weight_q(s: int, q: int) -> int:
    """|s|_q, the base-q digit sum."""
    return base_q_digits(s, q).weight


def normalize_exponent(E: int, q: int, e: int) -> int:
    """The representative of E mod q^e - 1 in [1, q^e - 1]."""
    m = q**e - 1
    r = E % m
    return r if r else m


def _min_weight(value: int, top: int, q: int) -> int:
    """Least digit sum writing `value` with positions 0..top only."""
    if top < 0:
        return 0 if value == 0 else -1
    head, tail = divmod(value, q**top)
    return head + weight_q(tail, q)


def enumerate_borrow_set(S: int, target_weight: int, q: int) -> list[DigitVector]:
    """All digit sequences with value S and digit sum `target_weight`.

    Starting from the canonical digits, every borrow (one unit at j+1 becomes
    q units at j) preserves the value and raises the weight by q - 1, so the
    set is empty unless the target is reachable that way.  The search runs
    from the top position down, with memoisation on (position, remaining
    value, remaining weight).  Result is sorted lexicographically.
    """
    if S < 0:
        raise ValueError("S must be nonnegative")
    canon = base_q_digits(S, q)
    if target_weight < canon.weight or (target_weight - canon.weight) % (q - 1):
        return []
    if target_weight == canon.weight:
        return [canon]
    top = max(len(canon) - 1, 0)

    @lru_cache(maxsize=None)
    def solve(pos: int, value: int, weight: int) -> tuple[tuple[int, ...], ...]:
        # returns digit tuples for positions 0..pos, low position first
        if pos == 0:
            return ((value,),) if value == weight else ()
        unit = q**pos
        out = []
        for d in range(min(value // unit, weight), -1, -1):
            rest_v, rest_w = value - d * unit, weight - d
            lo = _min_weight(rest_v, pos - 1, q)
            if lo < 0 or rest_w < lo or rest_w > rest_v or (rest_w - lo) % (q - 1):
                continue
            for tail in solve(pos - 1, rest_v, rest_w):
                out.append(tail + (d,))
        return tuple(out)

    found = [DigitVector(t, q) for t in solve(top, S, target_weight)]
    width = top + 1
    return sorted(found, key=lambda v: v.padded(width))


# -- exponent plans -----------------------------------------------------------

CASES = ("4", "5", "6")


@dataclass(frozen=True)
class ExponentPlan:
    """N and the borrow-set data for one (case, q, e, a, r, s).

    ``variant`` is "E1" (sum over E_1 with window exponents a_j + s_j) or
    "E2" (sum over E_2 with window exponents s_j).
    """

    case: str
    q: int
    e: int
    a: int
    r: int
    s: int
    N: int
    S1: int | None
    S2: int
    variant: str
    target_weight: int
    window_exponents: Mapping[int, int] = field(hash=False)

    @property
    def target_sum(self) -> int:
        return self.S1 if self.variant == "E1" else self.S2


def _congruence_multiplier(case: str) -> int:
    return {"4": 7, "5": 3, "6": 1}[case]


def admissible_s(case: str, q: int, r: int) -> int:
    """Least positive s with s = -c*r mod (q-1) and 2s = r mod q."""
    c = _congruence_multiplier(case)
    for s in range(1, q * (q - 1) + 1):
        if (s + c * r) % (q - 1) == 0 and (2 * s - r) % q == 0:
            return s
    raise PlanError(f"no s for case {case}, q={q}, r={r}")


def s_bounds(case: str, q: int, e: int, a: int) -> dict[str, int]:
    """Largest s for which each variant's coefficient formula holds."""
    if case == "4":
        return {"E1": q ** (e - 2 * a - 1) * (q - 1), "E2": q ** (e - 3 * a - 1) * (q - 1)}
    if case == "5":
        return {"E1": q ** (e - a - 1) * (q - 1), "E2": q ** (e - 2 * a - 1) * (q - 1)}
    if case == "6":
        return {"E2": q ** (e - a - 1) * (q - 1)}
    raise PlanError(f"unknown case {case!r}")


def build_plan(case: str, q: int, e: int, a: int, r: int, s: int,
               variant: str | None = None) -> ExponentPlan:
    """Assemble N, S1, S2 and the window product for the chosen variant.

    With ``variant=None`` the E2 form is used when s is small enough for it,
    otherwise E1.
    """
    case = str(case).lstrip("§").split(".")[0]
    if case not in CASES:
        raise PlanError(f"unknown case {case!r}")
    if not 0 < r < q:
        raise PlanError(f"r={r} not in (0, q)")
    if s <= 0:
        raise PlanError("s must be positive")
    depth = {"4": 3, "5": 2, "6": 1}[case]
    if e - depth * a - 1 < 0:
        raise PlanError(f"e={e} too small for case {case} with a={a}")
    c = _congruence_multiplier(case)
    if (s + c * r) % (q - 1):
        raise PlanError(f"s={s} violates s = -{c}r mod (q-1)")
    if (2 * s - r) % q:
        raise PlanError(f"s={s} violates s = r/2 mod q")

    bounds = s_bounds(case, q, e, a)
    if variant is None:
        variant = "E2" if s <= bounds["E2"] else "E1"
    if variant not in bounds:
        raise PlanError(f"variant {variant} not available for case {case}")
    if s > bounds[variant]:
        raise PlanError(f"s={s} exceeds the {variant} bound {bounds[variant]}")

    half = (2 * s - r) // q
    if case == "4":
        N = r * (q ** (e - a) + 2 * q ** (e - 2 * a) + 4 * q ** (e - 3 * a)) + s
        S1 = 4 * r * q ** (e - 2 * a - 1) + 8 * r * q ** (e - 3 * a - 1) + half
        S2 = 8 * r * q ** (e - 3 * a - 1) + half
        lead = q ** (e - 3 * a) * 4 * r
        lead_weight = weight_q(4 * r, q)
    elif case == "5":
        N = r * (q ** (e - a) + 2 * q ** (e - 2 * a)) + s
        S1 = 2 * r * q ** (e - a - 1) + 4 * r * q ** (e - 2 * a - 1) + half
        S2 = 4 * r * q ** (e - 2 * a - 1) + half
        lead = q ** (e - 2 * a) * 2 * r
        lead_weight = weight_q(2 * r, q)
    else:
        N = r * q ** (e - a) + s
        S1 = None
        S2 = 2 * r * q ** (e - a - 1) + half
        lead = 0
        lead_weight = 0

    if not 0 < N < q**e - 1:
        raise PlanError(f"N={N} outside (0, q^e - 1)")
    windows = dict(base_q_digits(s, q).support())
    if variant == "E1":
        for j, d in base_q_digits(lead, q).support().items():
            windows[j] = windows.get(j, 0) + d
        target_weight = lead_weight + weight_q(s, q)
    else:
        target_weight = weight_q(s, q)
    return ExponentPlan(case, q, e, a, r, s, N, S1, S2, variant, target_weight,
                        dict(sorted(windows.items())))


def digit_vector(values: Sequence[int], q: int) -> DigitVector:
    return DigitVector(tuple(values), q)
