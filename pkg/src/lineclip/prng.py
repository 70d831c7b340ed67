"""Deterministic 64-bit PRNG behind all workload generation.

The generator is SplitMix64: the state advances by the golden-ratio
increment 0x9E3779B97F4A7C15 and each output is the finalizing mix of the
new state (xor-shift 30, multiply 0xBF58476D1CE4E5B9, xor-shift 27,
multiply 0x94D049BB133111EB, xor-shift 31), all modulo 2**64.

Unit-interval conversion keeps the top 53 bits:

    u = (next_u64() >> 11) * 2.0**-53        # double in [0, 1)

and a uniform draw over [lo, hi) is ``lo + (hi - lo) * u`` evaluated in
exactly that order.  Every step is a fixed-width integer or IEEE-754
operation, so sequences are bit-identical across platforms and in the
compiled kernels, which embed the same constants and order of operations.

Streams: :func:`stream_seed` derives the seed for substream ``k`` as the
(k+1)-th output of a SplitMix64 seeded with the master seed.  Each
workload scenario consumes its own stream, so batches for different
scenarios are independent and can be produced in any order.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

_TWO53_INV = 2.0**-53


def mix64(z: int) -> int:
    """SplitMix64 output mix of a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    @property
    def state(self) -> int:
        return self._state

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        return mix64(self._state)

    def next_unit(self) -> float:
        """Next double in [0, 1), top 53 bits of the next output."""
        return (self.next_u64() >> 11) * _TWO53_INV

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_unit()


def stream_seed(seed: int, stream: int) -> int:
    """Seed for substream ``stream`` (0-based) of master ``seed``."""
    if stream < 0:
        raise ValueError("stream index must be >= 0")
    g = SplitMix64(seed)
    s = g.next_u64()
    for _ in range(stream):
        s = g.next_u64()
    return s
