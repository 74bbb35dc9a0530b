import math

import numpy as np
import pytest

from permpoly.ffield import (CapExceeded, element_pow, enumerate_elements, find_primitive,
                             make_field)
from permpoly.ppcheck import (conjecture_expected, eval_f, eval_f_all, eval_terms, f_terms,
                              first_collision, g_identity_check, gcd_condition, is_pp,
                              kernel_test, reduce_a, reduce_exponent_class)

FIELDS = [(2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 1, 3), (5, 1, 2), (3, 2, 2), (7, 1, 2)]


def f_naive(spec, a, x):
    acc = spec.zero
    for i in range(1, a + 1):
        acc = acc + element_pow(x, spec.q**i - 2)
    return acc


def test_a1_q3_is_identity():
    spec = make_field(3, 1, 2)
    for x in enumerate_elements(spec):
        assert eval_f(spec, 1, x) == x


def test_q2_constant_term():
    spec = make_field(2, 1, 3)
    assert eval_f(spec, 2, spec.zero) == spec.one
    assert eval_f_all(spec, 2)[0] == 1


def test_f9_generator_value():
    spec = make_field(3, 1, 2)
    g = find_primitive(spec)
    assert eval_f(spec, 2, g) == g + element_pow(g, 7)


@pytest.mark.parametrize("p,k,e", FIELDS)
def test_fast_termwise_and_table_paths_agree(p, k, e):
    spec = make_field(p, k, e)
    for a in range(1, p * e + 3):
        table = eval_f_all(spec, a)
        for x in enumerate_elements(spec):
            fast = eval_f(spec, a, x, "fast")
            assert fast == eval_f(spec, a, x, "termwise")
            assert fast.index == table[x.index]
        if a <= 3:
            for x in enumerate_elements(spec, 0, 12):
                assert f_naive(spec, a, x).index == table[x.index]


def test_f_terms_folding():
    assert f_terms(3, 4, 5, 3) == {1: 2, 7: 1, 25: 1, 79: 1}
    assert f_terms(3, 2, 0, 3) == {}
    assert f_terms(3, 2, -1, 3) == {7: 2}
    assert f_terms(2, 3, 1, 2) == {0: 1}


def test_reduce_exponent_class():
    assert reduce_exponent_class(0, 9) == 0
    assert reduce_exponent_class(8, 9) == 8
    assert reduce_exponent_class(9, 9) == 1
    assert reduce_exponent_class(16, 9) == 8


def test_is_pp_examples():
    v = is_pp(make_field(2, 1, 3), 2)
    assert v.is_pp and v.expected and v.witness is None
    assert is_pp(make_field(3, 1, 2), 1).is_pp
    v = is_pp(make_field(5, 1, 2), 1)
    assert math.gcd(3, 24) == 3
    assert not v.is_pp and not v.expected
    x, y = v.witness
    assert x < y
    spec = make_field(5, 1, 2)
    assert eval_f(spec, 1, spec.element(x)) == eval_f(spec, 1, spec.element(y))


def test_witness_is_lexicographically_first():
    spec = make_field(3, 1, 3)
    for a in range(2, 7):
        v = is_pp(spec, a)
        vals = eval_f_all(spec, a)
        pairs = [(x, y) for x in range(27) for y in range(x + 1, 27) if vals[x] == vals[y]]
        assert v.witness == (pairs[0] if pairs else None)


def test_first_collision_none():
    assert first_collision(np.arange(5)) is None
    assert first_collision(np.array([3, 1, 3, 1])) == (0, 2)


def test_is_pp_threads_agree():
    spec = make_field(3, 1, 5)
    for a in (1, 2, 5):
        assert is_pp(spec, a, workers=3) == is_pp(spec, a)


def test_cap():
    with pytest.raises(CapExceeded):
        is_pp(make_field(3, 1, 13), 2)


def test_conjecture_examples():
    assert conjecture_expected(2, 5, 2)
    assert conjecture_expected(3, 2, 1)
    assert not conjecture_expected(7, 2, 3)
    assert not conjecture_expected(5, 2, 1)


def test_kernel_examples():
    assert not kernel_test(make_field(3, 1, 2), 3)
    assert kernel_test(make_field(3, 1, 4), 5)
    for p, k, e in FIELDS:
        assert kernel_test(make_field(p, k, e), 1)


@pytest.mark.parametrize("p,k,e", FIELDS + [(3, 1, 4), (5, 1, 3)])
def test_kernel_matches_gcd(p, k, e):
    spec = make_field(p, k, e)
    for a in range(1, 2 * p * e):
        assert kernel_test(spec, a) == gcd_condition(a, p, e)


def test_reduce_a_examples():
    p, e = 3, 4
    assert reduce_a(p * e, p, e) == 0
    assert reduce_a(p * e - 1, p, e) == -1
    assert all(reduce_a(a, p, e) == a for a in range(1, p * e - 1))
    assert reduce_a(-1, p, e) == -1


@pytest.mark.parametrize("e", [2, 3])
def test_reduction_pointwise(e):
    spec = make_field(3, 1, e)
    for a in range(1, 2 * 3 * e + 1):
        r = reduce_a(a, 3, e)
        raw = eval_f_all(spec, a)
        reduced = eval_terms(spec, f_terms(3, e, r, 3), np.arange(spec.cardinality))
        assert np.array_equal(raw, reduced)


@pytest.mark.parametrize("p,k,e,a", [(3, 1, 2, 1), (5, 1, 2, 2), (3, 1, 3, 2), (3, 2, 2, 1)])
def test_g_identity(p, k, e, a):
    assert g_identity_check(make_field(p, k, e), a)


def test_g_identity_at_zero():
    # left side f(0) = 0, right side 0 + 1 + 2^7 = 0 in F_3
    assert sum(c ** (3**2 - 2) for c in range(3)) % 3 == 0
