"""Deterministic 64-bit PRNG (splitmix64) for the seeded generators.

splitmix64 is used because it is tiny and trivially portable: a
reimplementation in any language reproduces the exact same graph for the
same seed and parameters. The stream is

    state  = (state + 0x9E3779B97F4A7C15) mod 2^64
    z      = state
    z      = ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z      = ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z xor (z >> 31)

Bounded draws use rejection sampling (reject draws >= floor(2^64 / bound) *
bound, then reduce mod bound), so they are unbiased and still reproducible.
"""

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Seeded splitmix64 stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Unbiased draw from 0..bound-1."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (2**64 // bound) * bound
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound
