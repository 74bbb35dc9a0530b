"""Exact arithmetic in F_{q^e}, q = p^k, built as a single extension of F_p.

Elements are coordinate vectors over the power basis of a fixed monic
irreducible modulus of degree k*e.  Every element also has an integer
*index* ``sum(c_i * p**i)`` which is what the vectorised (numpy) helpers
operate on; index order is the enumeration order of :func:`enumerate_elements`.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

# make_field refuses fields larger than this; exhaustive scans use SWEEP_CAP.
MAX_CARDINALITY = 1 << 64
SWEEP_CAP = 1 << 20


class FieldError(ValueError):
    pass


class CapExceeded(FieldError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = ps[0]
    k = round(math.log(q, p))
    while p**k > q:
        k -= 1
    while p**k < q:
        k += 1
    return p, k


# -- polynomials over F_p, coefficient lists constant term first -------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _poly_rem(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _poly_powmod(base: list[int], n: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_rem(list(base), m, p)
    while n:
        if n & 1:
            result = _poly_rem(_poly_mul(result, base, p), m, p)
        n >>= 1
        if n:
            base = _poly_rem(_poly_mul(base, base, p), m, p)
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Ben-Or test: gcd(X^(p^d) - X, m) = 1 for 1 <= d <= deg/2."""
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if m[0] % p == 0:
        return False
    xpow = [0, 1]
    for _ in range(n // 2):
        xpow = _poly_powmod(xpow, p, m, p)
        if len(_poly_gcd(list(m), _poly_sub(xpow, [0, 1], p), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n, ordered by sum(c_i p^i).

    That order compares coefficient vectors read from X^(n-1) down to the
    constant term, so X^3+X+1 precedes X^3+X^2+1 over F_2.
    """
    for idx in range(p**n):
        low = [(idx // p**i) % p for i in range(n)]
        m = tuple(low + [1])
        if is_irreducible(m, p):
            return m
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")  # pragma: no cover


# -- field spec and elements --------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    e: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"p={self.p} is not prime")
        if self.k < 1 or self.e < 1:
            raise FieldError("k and e must be positive")
        m = self.modulus
        if len(m) != self.k * self.e + 1 or m[-1] != 1:
            raise FieldError("modulus must be monic of degree k*e")
        if any(not 0 <= c < self.p for c in m):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if not is_irreducible(m, self.p):
            raise FieldError(f"modulus {m} is reducible over F_{self.p}")

    @property
    def n(self) -> int:
        """Degree over the prime field."""
        return self.k * self.e

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def cardinality(self) -> int:
        return self.p**self.n

    def __repr__(self):
        return f"FieldSpec(F_{self.q}^{self.e}, p={self.p}, modulus={list(self.modulus)})"

    # element constructors
    def element(self, index: int) -> "FieldElement":
        if not 0 <= index < self.cardinality:
            raise FieldError(f"index {index} out of range")
        coeffs = []
        for _ in range(self.n):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        c = [x % self.p for x in coeffs]
        c = _poly_rem(c, self.modulus, self.p) if len(c) > self.n else c
        return FieldElement(self, tuple(c + [0] * (self.n - len(c))))

    def scalar(self, c: int) -> "FieldElement":
        return self.from_coeffs([c])

    @property
    def zero(self) -> "FieldElement":
        return self.scalar(0)

    @property
    def one(self) -> "FieldElement":
        return self.scalar(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of X (a root of the modulus)."""
        return self.from_coeffs([0, 1])

    def random_element(self, rng: random.Random) -> "FieldElement":
        return self.element(rng.randrange(self.cardinality))


def make_field(p: int, k: int, e: int, cap: int = MAX_CARDINALITY) -> FieldSpec:
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if k < 1 or e < 1:
        raise FieldError("k and e must be positive")
    if p ** (k * e) > cap:
        raise CapExceeded(f"p^(k*e) = {p}^{k * e} exceeds cap {cap}")
    return _make_field(p, k, e)


@lru_cache(maxsize=None)
def _make_field(p: int, k: int, e: int) -> FieldSpec:
    return FieldSpec(p, k, e, smallest_irreducible(p, k * e))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec = field(repr=False)
    coeffs: tuple[int, ...]

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.spec != self.spec:
            raise FieldError("elements belong to different fields")

    @property
    def index(self) -> int:
        p = self.spec.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        s = self.spec
        prod = _poly_rem(_poly_mul(self.coeffs, other.coeffs, s.p), s.modulus, s.p)
        return s.from_coeffs(prod)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.spec.cardinality - 2)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        s = self.spec
        if n == 0:
            return s.one
        if self.is_zero():
            return s.zero
        # x^(Q-1) = 1 for x != 0, so reduce the exponent first
        n %= s.cardinality - 1
        if n == 0:
            return s.one
        return s.from_coeffs(_poly_powmod(list(self.coeffs), n, s.modulus, s.p))

    def frobenius(self, i: int = 1) -> "FieldElement":
        return frobenius_q(self, i)

    def __repr__(self):
        return f"<{list(self.coeffs)} in F_{self.spec.q}^{self.spec.e}>"


def field_arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
    ops = {"add": FieldElement.__add__, "sub": FieldElement.__sub__,
           "mul": FieldElement.__mul__, "div": FieldElement.__truediv__}
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return fn(x, y)


def element_pow(x: FieldElement, n: int) -> FieldElement:
    """x**n by square-and-multiply, with 0**0 = 1."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return x**n


@lru_cache(maxsize=64)
def _p_power_matrix(spec: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """Columns of the F_p-linear map x -> x^p on the power basis."""
    cols = []
    for i in range(spec.n):
        basis = [0] * i + [1]
        cols.append(tuple(spec.from_coeffs(_poly_powmod(basis, spec.p, spec.modulus, spec.p)).coeffs))
    return tuple(cols)


def frobenius_q(x: FieldElement, i: int) -> FieldElement:
    """x^(q^i) by i*k applications of the linear p-power map."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    spec = x.spec
    steps = (i * spec.k) % spec.n
    cols = _p_power_matrix(spec)
    v = x.coeffs
    p = spec.p
    for _ in range(steps):
        out = [0] * spec.n
        for c, col in zip(v, cols):
            if c:
                for r in range(spec.n):
                    out[r] += c * col[r]
        v = tuple(a % p for a in out)
    return FieldElement(spec, v)


def enumerate_elements(spec: FieldSpec, start: int = 0, stop: int | None = None,
                       cap: int = SWEEP_CAP) -> Iterator[FieldElement]:
    """Elements in index order, 0 first; [start, stop) selects a contiguous chunk."""
    if spec.cardinality > cap:
        raise CapExceeded(f"|F| = {spec.cardinality} exceeds sweep cap {cap}")
    stop = spec.cardinality if stop is None else min(stop, spec.cardinality)
    p, n = spec.p, spec.n
    first = spec.element(start).coeffs if start < stop else ()
    digits = list(first)
    for _ in range(start, stop):
        yield FieldElement(spec, tuple(digits))
        for j in range(n):
            digits[j] += 1
            if digits[j] < p:
                break
            digits[j] = 0


def subfield_q(spec: FieldSpec) -> list[FieldElement]:
    """The canonical copy of F_q inside F_{q^e} (fixed points of x -> x^q)."""
    t = tables(spec)
    idx = np.arange(spec.cardinality, dtype=np.int64)
    fixed = np.nonzero(t.pow(idx, spec.q) == idx)[0]
    return [spec.element(int(i)) for i in fixed]


# -- table-backed vectorised arithmetic ---------------------------------------

def find_primitive(spec: FieldSpec) -> FieldElement:
    """Smallest-index element of multiplicative order q^e - 1."""
    order = spec.cardinality - 1
    if order == 1:
        return spec.one
    ls = prime_factors(order)
    for idx in range(1, spec.cardinality):
        g = spec.element(idx)
        if all(g ** (order // l) != spec.one for l in ls):
            return g
    raise FieldError("no primitive element")  # pragma: no cover


class FieldTables:
    """Exp/log tables over element indices for fields up to SWEEP_CAP.

    ``exp[t]`` is the index of g^t, ``log[x]`` the discrete log of x (with
    ``log[0] = -1``); ``digits[x]`` holds the coordinate vector of x.
    """

    def __init__(self, spec: FieldSpec):
        if spec.cardinality > SWEEP_CAP:
            raise CapExceeded(f"|F| = {spec.cardinality} exceeds table cap {SWEEP_CAP}")
        self.spec = spec
        Q, n, p = spec.cardinality, spec.n, spec.p
        self.order = Q - 1
        self.weights = np.array([p**i for i in range(n)], dtype=np.int64)
        idx = np.arange(Q, dtype=np.int64)
        self.digits = np.stack([(idx // w) % p for w in self.weights], axis=1)
        g = find_primitive(spec)
        self.generator = g
        # multiplication by g as a matrix acting on coordinate vectors
        cols = np.array([(g * spec.from_coeffs([0] * i + [1])).coeffs for i in range(n)], dtype=np.int64)
        succ = ((self.digits @ cols) % p) @ self.weights
        exp = np.empty(Q - 1, dtype=np.int64)
        cur = 1
        succ_l = succ.tolist()
        for t in range(Q - 1):
            exp[t] = cur
            cur = succ_l[cur]
        if cur != 1:
            raise FieldError("generator table did not close")  # pragma: no cover
        log = np.full(Q, -1, dtype=np.int64)
        log[exp] = np.arange(Q - 1, dtype=np.int64)
        self.exp = exp
        self.log = log

    def encode(self, digits: np.ndarray) -> np.ndarray:
        return (digits % self.spec.p) @ self.weights

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.spec.p == 2:
            return np.bitwise_xor(x, y)
        return self.encode(self.digits[x] + self.digits[y])

    def scale(self, x: np.ndarray, c: int) -> np.ndarray:
        """Multiply by the prime-field scalar c."""
        c %= self.spec.p
        if c == 1:
            return x
        return self.encode(self.digits[x] * c)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        lx, ly = self.log[x], self.log[y]
        out = self.exp[(lx + ly) % self.order]
        return np.where((lx < 0) | (ly < 0), 0, out)

    def inv(self, x: np.ndarray) -> np.ndarray:
        lx = self.log[x]
        if np.any(lx < 0):
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-lx) % self.order]

    def pow(self, x: np.ndarray, n: int) -> np.ndarray:
        """Elementwise x**n with 0**0 = 1 and 0**n = 0 for n > 0."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        lx = self.log[x]
        m = n % self.order
        # (lx * m) can overflow int64 for big orders; reduce through Python ints
        if self.order * self.order < (1 << 62):
            out = self.exp[(lx * m) % self.order]
        else:  # pragma: no cover - SWEEP_CAP keeps us below this
            out = self.exp[np.array([(int(v) * m) % self.order for v in lx], dtype=np.int64)]
        zero = 1 if n == 0 else 0
        return np.where(lx < 0, zero, out)

    def zech(self, t: int) -> int:
        """Zech logarithm: g^Z(t) = 1 + g^t, or -1 when 1 + g^t = 0."""
        s = int(self.add(np.array([1]), np.array([self.exp[t % self.order]]))[0])
        return int(self.log[s])


@lru_cache(maxsize=16)
def tables(spec: FieldSpec) -> FieldTables:
    return FieldTables(spec)


def chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split range(total) into at most `parts` contiguous pieces."""
    parts = max(1, min(parts, total)) if total else 1
    bounds = [total * i // parts for i in range(parts + 1)]
    return list(itertools.pairwise(bounds))
