import math
from fractions import Fraction

import pytest

from permpoly.ffield import make_field
from permpoly.hasse import ceil_sqrt, hw_certificate, lambda_below, lambda_below_sqrt, point_bound
from permpoly.ppcheck import is_pp


def test_example_q3_e8_a2():
    c = hw_certificate(3, 8, 2)
    assert c.d == 6
    assert c.bound == 6561 - 20 * 81 - 75 - 8 == 4858
    assert c.lambda_check and c.certified
    assert all(c.chain)
    assert "irreducible" in c.assumption


def test_brute_force_agrees_q3_e8_a2():
    assert not is_pp(make_field(3, 1, 8), 2).is_pp


def test_half_integer_power():
    c = hw_certificate(121, 9, 2)
    assert 2 * 2 <= 9 / 2
    assert c.lambda_check and c.certified


def test_preconditions():
    with pytest.raises(ValueError):
        hw_certificate(3, 7, 2)
    with pytest.raises(ValueError):
        hw_certificate(3, 8, 1)


def test_ceil_sqrt():
    for n in range(1, 2000):
        r = ceil_sqrt(n)
        assert (r - 1) ** 2 < n <= r * r


def lam_fraction_bounds(d):
    """lambda bracketed by rationals through a tight integer square root."""
    A = (d - 1) * (d - 2)
    D = A * A + 2 * d * (d - 1) ** 2 + 4 * d + 12
    s = math.isqrt(D)
    return Fraction(A + s, 2), Fraction(A + s + 1, 2)


@pytest.mark.parametrize("d", [6, 22, 78, 240, 1000, 6558])
def test_lambda_tests_against_bracket(d):
    lo, hi = lam_fraction_bounds(d)
    for m in range(int(lo) - 3, int(hi) + 4):
        if m > hi:
            assert lambda_below(d, m)
        if m <= lo:
            assert not lambda_below(d, m)
    for Q in (int(lo) ** 2 - 1, int(hi + 1) ** 2, (int(hi) + 5) ** 2 + 3):
        if Q > hi * hi:
            assert lambda_below_sqrt(d, Q)
        if Q <= lo * lo:
            assert not lambda_below_sqrt(d, Q)


def test_bound_rounds_down():
    # odd e: the exact bound with sqrt(q^e) is never below the integer one
    for q, e, a in [(3, 9, 2), (5, 11, 2), (7, 13, 3)]:
        d = q**a - 3
        got = point_bound(q, e, d)
        approx = q**e - (d - 1) * (d - 2) * math.sqrt(q**e) - d * (d - 1) ** 2 / 2 - d - 2
        assert got <= approx


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121])
def test_grid(q):
    for a in range(2, 7):
        for e in range(4 * a, 4 * a + 9):
            c = hw_certificate(q, e, a)
            assert c.certified, (q, e, a)
            assert c.d == q**a - 3 and c.d**2 < q ** (2 * a)
