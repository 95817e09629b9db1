import random

import pytest

from packed25519 import fe25519, ladder, oracle
from packed25519.ladder import BASE_POINT_U, clamp, cswap, ladderstep, mladder, scalarmult

P = oracle.P


def le(v):
    return v.to_bytes(32, "little")


def val(b):
    return int.from_bytes(b, "little")


# ----------------------------------------------------------------- clamp

def test_clamp_examples():
    assert clamp(le(0)) == 2**254
    assert clamp(le(7)) == 2**254
    assert clamp(le(2**255 - 1)) == 2**255 - 8
    assert clamp(le(2**256 - 1)) == 2**255 - 8


def test_clamp_image():
    rng = random.Random(21)
    for _ in range(1000):
        c = clamp(le(rng.randrange(2**256)))
        assert c % 8 == 0
        assert c % 2 == 0
        assert c >> 254 == 1          # bit 254 set, bit 255 clear
        k, r = divmod(c - 2**254, 8)
        assert r == 0 and 0 <= k < 2**251


def test_clamp_fixed_points():
    for s in (2**254, 2**254 + 8, 2**255 - 8):
        assert clamp(le(s)) == s


def test_clamp_is_idempotent():
    rng = random.Random(22)
    for _ in range(200):
        c = clamp(le(rng.randrange(2**256)))
        assert clamp(le(c)) == c


def test_clamp_rejects_wrong_length():
    with pytest.raises(ValueError):
        clamp(b"\x00" * 16)


# ----------------------------------------------------------------- cswap

def test_cswap():
    r0 = (le(1), le(2))
    r1 = (le(3), le(4))
    assert cswap(r0, r1, 0) == (r0, r1)
    assert cswap(r0, r1, 1) == (r1, r0)


# ------------------------------------------------------------- ladderstep

def reduced(pair):
    return val(pair[0]) % P, val(pair[1]) % P


def test_ladderstep_worked_examples():
    # doubling infinity leaves it alone; adding P to infinity with
    # difference P reproduces x(P) projectively
    r0, r1 = ladderstep(le(9), (le(1), le(0)), (le(9), le(1)))
    assert reduced(r0) == (1, 0)
    assert reduced(r1) == (324, 36)

    r0, r1 = ladderstep(le(9), (le(9), le(1)), (le(1), le(0)))
    assert reduced(r0) == (6400, 157681440)
    assert reduced(r1) == (324, 36)

    r0, r1 = ladderstep(le(2), (le(1), le(0)), (le(2), le(1)))
    assert reduced(r0) == (1, 0)
    assert reduced(r1) == (16, 8)


def test_ladderstep_against_formulas():
    rng = random.Random(23)
    for _ in range(100):
        xp, x0, z0, x1, z1 = (rng.randrange(P) for _ in range(5))
        g0, g1 = ladderstep(le(xp), (le(x0), le(z0)), (le(x1), le(z1)))
        want0 = oracle.double(oracle.Ratio(x0, z0))
        want1 = oracle.add(oracle.Ratio(x1, z1), oracle.Ratio(x0, z0),
                           oracle.Ratio(xp, 1))
        assert reduced(g0) == (want0.x % P, want0.z % P)
        assert reduced(g1) == (want1.x % P, want1.z % P)
        for part in (*g0, *g1):
            assert val(part) < 2 * P


def test_ladderstep_keeps_difference_fixed():
    # r1 - r0 = P is the ladder's loop invariant; after one step the new
    # difference is still P
    n = 11
    r0 = oracle.scale(n, 9)
    r1 = oracle.scale(n + 1, 9)
    g0, g1 = ladderstep(le(9), (le(r0.x), le(r0.z)), (le(r1.x), le(r1.z)))
    assert oracle.equiv(oracle.Ratio(*reduced(g0)), oracle.scale(2 * n, 9))
    assert oracle.equiv(oracle.Ratio(*reduced(g1)), oracle.scale(2 * n + 1, 9))


# ---------------------------------------------------------------- mladder

def test_mladder_matches_reference_componentwise():
    rng = random.Random(24)
    cases = [(2**254, 9), (2**254, 0), (2**254 + 8, 9)]
    cases += [(clamp(le(rng.randrange(2**256))), rng.randrange(P))
              for _ in range(3)]
    for n, xp in cases:
        X, Z = mladder(n, le(xp))
        want, _ = oracle.ladder(n, oracle.Ratio(xp, 1))
        assert val(X) % P == want.x % P
        assert val(Z) % P == want.z % P


def test_mladder_requires_bit_254():
    with pytest.raises(AssertionError):
        mladder(12345, le(9))
    with pytest.raises(AssertionError):
        mladder(2**255, le(9))


def test_mladder_runs_255_fixed_iterations():
    trace = []
    ladder._SWAP_TRACE = trace
    try:
        mladder(2**254, le(9))
    finally:
        ladder._SWAP_TRACE = None
    assert len(trace) == 255


def test_mladder_swap_count_equals_bit_transitions():
    rng = random.Random(25)
    for _ in range(10):
        n = clamp(le(rng.randrange(2**256)))
        trace = []
        ladder._SWAP_TRACE = trace
        try:
            mladder(n, le(9))
        finally:
            ladder._SWAP_TRACE = None
        bits = [(n >> i) & 1 for i in range(254, -1, -1)]
        transitions = sum(a != b for a, b in zip([0] + bits, bits))
        assert sum(trace) == transitions


def test_mladder_odd_scalar_lands_on_the_wrong_slot():
    """Regression: without the final swap that evenness makes unnecessary,
    an odd scalar returns x((n+1)P) instead of x(nP)."""
    for n in (2**254 + 1, 2**254 + 12345, 2**254 + 2**123 + 77):
        X, Z = mladder(n, le(9))
        got = oracle.Ratio(val(X) % P, val(Z) % P)
        want_n, want_n1 = oracle.ladder(n, oracle.Ratio(9, 1))
        assert not oracle.equiv(got, want_n)
        assert got == want_n1


# ------------------------------------------------------------- scalarmult

VECTOR_1 = ("a546e36bf0527c9d3b16154b82465edd62144c0ac1fc5a18506a2244ba449ac4",
            "e6db6867583030db3594c1a424b15f7c726624ec26b3353b10a903a6d0ab1c4c",
            "c3da55379de9c6908e94ea4df28d084f32eccf03491c71f754b4075577a28552")
VECTOR_2 = ("4b66e9d4d1b4673c5ad22691957d6af5c11b6421e0ea01d42ca4169e7918ba0d",
            "e5210f12786811d3f4b7959d0538ae2c31dbe7106fc03c3efc4cd549c715a493",
            "95cbde9476e8907d7aade45cb4b873f88b595a68799fa152e6f8f7647aac7957")


class TestRfc7748:
    def test_vector_1(self):
        s, u, want = (bytes.fromhex(h) for h in VECTOR_1)
        assert scalarmult(s, u) == want

    def test_vector_2(self):
        s, u, want = (bytes.fromhex(h) for h in VECTOR_2)
        assert scalarmult(s, u) == want

    def test_diffie_hellman_example(self):
        a_priv = bytes.fromhex(
            "77076d0a7318a57d3c16c17251b26645df4c2f87ebc0992ab177fba51db92c2a")
        b_priv = bytes.fromhex(
            "5dab087e624a8a4b79e17f8b83800ee66f3bb1292618b6fd1c2f8b27ff88e0eb")
        a_pub = scalarmult(a_priv, BASE_POINT_U)
        b_pub = scalarmult(b_priv, BASE_POINT_U)
        assert a_pub.hex() == \
            "8520f0098930a754748b7ddcb43ef75a0dbf3a0d26381af4eba4a98eaa9b4e6a"
        assert b_pub.hex() == \
            "de9edb7d7b7dc1b4d35b61c2ece435373f8343c85b78674dadfc7e146f882b4f"
        shared = scalarmult(a_priv, b_pub)
        assert shared == scalarmult(b_priv, a_pub)
        assert shared.hex() == \
            "4a5d9d5ba4ce2de1728e3bf480350f25e07e21c947d19e3376f09b3c1e161742"


def test_scalarmult_base_point_constant():
    assert val(BASE_POINT_U) == 9
    assert BASE_POINT_U.hex() == "09" + "00" * 31


def test_scalarmult_masks_u_top_bit():
    s = le(0x1234)
    assert scalarmult(s, le(2**255 + 100)) == scalarmult(s, le(100))


def test_scalarmult_accepts_non_canonical_u():
    # u in [p, 2^255) denotes u - p
    s = le(0xABCDEF)
    assert scalarmult(s, le(P + 3)) == scalarmult(s, le(3))


def test_scalarmult_zero_u_gives_zero():
    # x = 0 is the order-2 orbit; the ladder collapses and the pipeline
    # normalizes it to all-zero output
    for s in (le(0), le(1), le(2**256 - 1)):
        assert scalarmult(s, le(0)) == le(0)
        assert scalarmult(s, le(P)) == le(0)


def test_scalarmult_output_is_canonical():
    rng = random.Random(26)
    for _ in range(3):
        out = scalarmult(le(rng.randrange(2**256)), le(rng.randrange(2**256)))
        assert val(out) < P


def test_scalarmult_agrees_with_reference_pipeline():
    rng = random.Random(27)
    for _ in range(3):
        s, u = le(rng.randrange(2**256)), le(rng.randrange(2**256))
        n = clamp(s)
        xp = val(u) % 2**255
        want = oracle.affine(oracle.scale(n, xp))
        got = val(scalarmult(s, u))
        assert got == (0 if want is None else want)
