"""Limb-level kernels against big-integer arithmetic.

Expected values come from Python's own integers, which are the independent
oracle for everything in this file; the packed kernels never see them."""

import random

import pytest

from packed25519 import mp_arith
from packed25519.mp_arith import (
    P, add_mod, mul256, red512, sqr256, sub_mod, subp, value,
    _abs_diff, _mul32, _mul64, _mul128,
)

TWO_P = 2 * P


def le(v, n=32):
    return v.to_bytes(n, "little")


def test_value_round_trip():
    assert value(le(0)) == 0
    assert value(le(2**256 - 1)) == 2**256 - 1
    assert value(b"\x02" + b"\x00" * 31) == 2


def test_mul256_identities():
    x = le(0xDEADBEEF)
    assert value(mul256(le(0), x)) == 0
    assert value(mul256(le(1), x)) == 0xDEADBEEF
    a = 2**128 - 1
    assert value(mul256(le(a), le(a))) == 2**256 - 2**129 + 1
    top = 2**256 - 1
    assert value(mul256(le(top), le(top))) == top * top


def test_sqr256_matches_mul256_bit_for_bit():
    rng = random.Random(0xACE)
    for _ in range(300):
        a = le(rng.randrange(2**256))
        assert sqr256(a) == mul256(a, a)


def test_mul256_random_against_integers():
    rng = random.Random(0xBEE)
    for _ in range(500):
        x, y = rng.randrange(2**256), rng.randrange(2**256)
        assert value(mul256(le(x), le(y))) == x * y
        assert value(sqr256(le(x))) == x * x


@pytest.mark.parametrize("fn,limbs", [(_mul32, 4), (_mul64, 8), (_mul128, 16)])
def test_karatsuba_levels_reproduce_schoolbook(fn, limbs):
    # each recursion level, taken alone, must equal the plain product
    rng = random.Random(limbs)
    for _ in range(1000):
        a = [rng.randrange(256) for _ in range(limbs)]
        b = [rng.randrange(256) for _ in range(limbs)]
        got = fn(a, b)
        assert value(got) == value(a) * value(b)


def test_abs_diff():
    rng = random.Random(3)
    for n in (4, 8, 16):
        for _ in range(200):
            a = [rng.randrange(256) for _ in range(n)]
            b = [rng.randrange(256) for _ in range(n)]
            d, sign = _abs_diff(a, b)
            assert value(d) == abs(value(a) - value(b))
            assert sign == (1 if value(a) < value(b) else 0)
        same = [rng.randrange(256) for _ in range(n)]
        assert _abs_diff(same, same) == ([0] * n, 0)


def test_subp_examples():
    d, b = subp(le(P))
    assert (value(d), b) == (0, 0)
    d, b = subp(le(P + 1))
    assert (value(d), b) == (1, 0)
    d, b = subp(le(0))
    assert (value(d), b) == ((0 - P) % 2**256, 1)
    d, b = subp(le(P - 1))
    assert (value(d), b) == ((-1) % 2**256, 1)
    d, b = subp(le(2**256 - 1))
    assert (value(d), b) == (2**256 - 1 - P, 0)


def test_subp_identity_random():
    rng = random.Random(4)
    for _ in range(500):
        a = rng.randrange(2**256)
        d, b = subp(le(a))
        # d - 2^256*b == a - p exactly
        assert value(d) - 2**256 * b == a - P
        assert b == (1 if a < P else 0)


def test_red512_small_values_pass_through():
    for v in (0, 1, 19, 2**255 - 20):
        assert value(red512(le(v, 64))) == v


def test_red512_fold_constants():
    # one bit at position 256 is worth 38; one bit at 255 is worth 19
    assert value(red512(le(2**256, 64))) == 38
    assert value(red512(le(2**255, 64))) == 19
    assert value(red512(le(2**511, 64))) % P == 2**511 % P


def test_red512_congruence_and_range():
    rng = random.Random(5)
    cases = [rng.randrange(2**512) for _ in range(500)]
    cases += [0, 1, P, 2 * P, P * P, (P - 1) ** 2, 2**512 - 1,
              (2**256 - 1) ** 2, 2**256 - 1, 2**511]
    for m in cases:
        r = value(red512(le(m, 64)))
        assert r % P == m % P
        assert r < TWO_P


def test_add_mod_range_and_congruence():
    rng = random.Random(6)
    pairs = [(rng.randrange(2**256), rng.randrange(2**256)) for _ in range(500)]
    pairs += [(2**256 - 1, 2**256 - 1), (0, 0), (P, P), (TWO_P - 1, TWO_P - 1)]
    for x, y in pairs:
        s = value(add_mod(le(x), le(y)))
        assert s % P == (x + y) % P
        assert s < TWO_P


def test_sub_mod_range_and_congruence():
    rng = random.Random(7)
    pairs = [(rng.randrange(2**256), rng.randrange(2**256)) for _ in range(500)]
    pairs += [(0, 2**256 - 1), (2**256 - 1, 0), (0, 0), (1, TWO_P)]
    for x, y in pairs:
        d = value(sub_mod(le(x), le(y)))
        assert d % P == (x - y) % P
        assert d < TWO_P


def test_wrong_length_is_rejected():
    with pytest.raises(ValueError):
        mul256(b"\x00" * 31, b"\x00" * 32)
    with pytest.raises(ValueError):
        sqr256(b"\x00" * 33)
    with pytest.raises(ValueError):
        red512(b"\x00" * 32)
    with pytest.raises(ValueError):
        subp(b"")
    with pytest.raises(ValueError):
        add_mod(b"\x00" * 32, b"\x00" * 16)
    with pytest.raises(ValueError):
        sub_mod(b"\x00" * 16, b"\x00" * 32)
