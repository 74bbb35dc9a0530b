"""Coefficients of products of sliding-window linear forms.

A window product is prod_j (X_j + X_{j+1} + ... + X_{j+w-1})^{m_j}.  Its
coefficient at prod_k X_k^{d_k} is a sum over arrays a_{ij} (the share of
factor j given to variable X_{i+j}) of prod_j multinomial(m_j; a_{0j}, ...).
:func:`extract_coefficient` evaluates that sum one variable at a time.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .combinat import binomial_mod_p


@dataclass(frozen=True)
class WindowProduct:
    width: int
    factors: Mapping[int, int] = field(hash=False)

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("window width must be at least 1")
        if any(m < 0 for m in self.factors.values()):
            raise ValueError("exponents must be nonnegative")
        if any(j < 0 for j in self.factors):
            raise ValueError("window indices must be nonnegative")
        object.__setattr__(self, "factors", {j: m for j, m in sorted(self.factors.items()) if m})

    @property
    def degree(self) -> int:
        return sum(self.factors.values())

    def shifted(self, by: int) -> "WindowProduct":
        return WindowProduct(self.width, {j + by: m for j, m in self.factors.items()})


def monomial(exponents) -> dict[int, int]:
    """Normalise a target given as a sequence or a {index: exponent} map."""
    if isinstance(exponents, Mapping):
        items = exponents.items()
    else:
        items = enumerate(exponents)
    out = {}
    for k, d in items:
        if d < 0:
            raise ValueError("target exponents must be nonnegative")
        if d:
            out[k] = d
    return out


def _splits(total: int, caps: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Ways to write total = sum(b_i) with 0 <= b_i <= caps[i]."""
    if not caps:
        if total == 0:
            yield ()
        return
    rest_cap = sum(caps[1:])
    for b in range(max(0, total - rest_cap), min(caps[0], total) + 1):
        for tail in _splits(total - b, caps[1:]):
            yield (b,) + tail


def extract_coefficient(prod: WindowProduct, target, p: int | None = None) -> int:
    """Coefficient of the target monomial in `prod`, reduced mod p.

    With ``p=None`` the exact integer is returned.

    The state after processing X_k maps the undistributed remainders of
    the factors j in (k-w, k] to an accumulated weight.  Giving b units of a
    factor with remainder m to X_k contributes binom(m, b); the factor that
    leaves the window at X_k must be exhausted there.
    """
    w = prod.width
    fac = prod.factors
    tgt = monomial(target)
    if prod.degree != sum(tgt.values()):
        return 0
    if not fac:
        return 1 % p if p else 1
    lo = min(min(fac), min(tgt, default=0))
    if tgt and min(tgt) < min(fac):
        return 0
    hi = max(max(fac) + w - 1, max(tgt, default=0))
    if tgt and max(tgt) > max(fac) + w - 1:
        return 0

    if p is None:
        def binom(n, m):
            return math.comb(n, m)
    else:
        def binom(n, m):
            return binomial_mod_p(n, m, p)

    # suffix demand: units still needed by X_k, X_{k+1}, ...
    demand_after = {}
    acc = 0
    for k in range(hi, lo - 1, -1):
        acc += tgt.get(k, 0)
        demand_after[k] = acc

    # state: tuple of remainders of factors k-w+1 .. k (oldest first)
    states: dict[tuple[int, ...], int] = {(0,) * (w - 1): 1}
    for k in range(lo, hi + 1):
        need = tgt.get(k, 0)
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for state, weight in states.items():
            active = state + (fac.get(k, 0),)
            oldest = active[0]
            if oldest > need:
                continue
            if sum(active) > demand_after[k]:
                continue
            for split in _splits(need - oldest, active[1:]):
                c = weight
                for m, b in zip(active[1:], split):
                    if b:
                        c *= binom(m, b)
                if p is not None:
                    c %= p
                if not c:
                    continue
                rem = tuple(m - b for m, b in zip(active[1:], split))
                nxt[rem] += c
        if p is not None:
            states = {s: v % p for s, v in nxt.items() if v % p}
        else:
            states = {s: v for s, v in nxt.items() if v}
        if not states:
            return 0
    total = states.get((0,) * (w - 1), 0)
    return total % p if p is not None else total


def expand_dense(prod: WindowProduct) -> dict[tuple[int, ...], int]:
    """Fully expand the product over the integers (small instances only).

    Keys are exponent tuples over X_0 .. X_{max index}.
    """
    if not prod.factors:
        return {(): 1}
    nvars = max(prod.factors) + prod.width
    poly: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for j, m in prod.factors.items():
        for _ in range(m):
            nxt: dict[tuple[int, ...], int] = defaultdict(int)
            for mono, c in poly.items():
                for v in range(j, j + prod.width):
                    t = list(mono)
                    t[v] += 1
                    nxt[tuple(t)] += c
            poly = dict(nxt)
    return poly


def dense_coefficient(prod: WindowProduct, target) -> int:
    tgt = monomial(target)
    if not prod.factors:
        return 1 if not tgt else 0
    nvars = max(prod.factors) + prod.width
    if tgt and max(tgt) >= nvars:
        return 0
    key = tuple(tgt.get(k, 0) for k in range(nvars))
    return expand_dense(prod).get(key, 0)


def coefficient_by_arrays(prod: WindowProduct, target, p: int | None = None) -> int:
    """Direct sum over the a_{ij} arrays (reference path for tests)."""
    from .combinat import multinomial

    tgt = monomial(target)
    w = prod.width
    items = list(prod.factors.items())
    if prod.degree != sum(tgt.values()):
        return 0

    def compositions(n, parts):
        if parts == 1:
            yield (n,)
            return
        for first in range(n + 1):
            for rest in compositions(n - first, parts - 1):
                yield (first,) + rest

    total = 0

    def rec(idx, load, acc):
        nonlocal total
        if idx == len(items):
            if {k: v for k, v in load.items() if v} == tgt:
                total += acc
            return
        j, m = items[idx]
        for comp in compositions(m, w):
            new = dict(load)
            ok = True
            for i, a in enumerate(comp):
                if a:
                    new[i + j] = new.get(i + j, 0) + a
                    if new[i + j] > tgt.get(i + j, 0):
                        ok = False
                        break
            if ok:
                rec(idx + 1, new, acc * multinomial(m, comp))

    rec(0, {}, 1)
    return total % p if p is not None else total
