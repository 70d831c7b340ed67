"""SplitMix64 draw sequence, frozen against an independent C reference."""

import pytest
from hypothesis import given, strategies as st

from lineclip.prng import GOLDEN, MASK64, SplitMix64, mix64, stream_seed

# First five outputs for two seeds, produced by a standalone C program
# implementing the reference mix (state += 0x9E3779B97F4A7C15; xor-shift
# 30/27/31 with the two mix constants).  The seed-1234567 run also matches
# the vector circulated with the original algorithm release.
REFERENCE_U64 = {
    0: [
        16294208416658607535,
        7960286522194355700,
        487617019471545679,
        17909611376780542444,
        1961750202426094747,
    ],
    1234567: [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ],
}

# (next_u64() >> 11) * 2**-53 for seed 42, same C program.
REFERENCE_UNITS_42 = [
    0.7415648787718233,
    0.1599103928769201,
    0.27860113025513866,
    0.34419071652363753,
]


@pytest.mark.parametrize("seed", sorted(REFERENCE_U64))
def test_reference_vector(seed):
    g = SplitMix64(seed)
    assert [g.next_u64() for _ in range(5)] == REFERENCE_U64[seed]


def test_reference_units_bit_exact():
    g = SplitMix64(42)
    got = [g.next_unit() for _ in range(4)]
    assert got == REFERENCE_UNITS_42  # equality of exact float values


def test_state_advances_by_golden():
    g = SplitMix64(10)
    g.next_u64()
    assert g.state == (10 + GOLDEN) & MASK64


def test_mix64_matches_generator_output():
    # next_u64 is mix64 of the advanced state, nothing more.
    assert mix64(10 + GOLDEN) == SplitMix64(10).next_u64()


def test_stream_seed_is_kth_output():
    g = SplitMix64(1234567)
    outs = [g.next_u64() for _ in range(4)]
    assert [stream_seed(1234567, k) for k in range(4)] == outs


def test_stream_seed_rejects_negative_stream():
    with pytest.raises(ValueError):
        stream_seed(1, -1)


@given(st.integers(min_value=0, max_value=MASK64))
def test_unit_interval_bounds(seed):
    g = SplitMix64(seed)
    for _ in range(8):
        u = g.next_unit()
        assert 0.0 <= u < 1.0


@given(st.integers())
def test_seed_masked_to_64_bits(seed):
    assert SplitMix64(seed).next_u64() == SplitMix64(seed & MASK64).next_u64()


@given(st.integers(min_value=0, max_value=MASK64),
       st.floats(min_value=-1e9, max_value=1e9),
       st.floats(min_value=1e-9, max_value=1e9))
def test_uniform_stays_in_range(seed, lo, span):
    hi = lo + span
    u = SplitMix64(seed).uniform(lo, hi)
    assert lo <= u <= hi


def test_distinct_streams_differ():
    assert stream_seed(99, 0) != stream_seed(99, 1) != stream_seed(99, 2)
