"""SplitMix64, a portable 64-bit generator.

The state advances by the golden-ratio increment ``0x9E3779B97F4A7C15``.
Each output applies the standard mix
``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31``
with all arithmetic modulo 2**64. Doubles take the top 53 bits, so any
implementation of this algorithm produces the same instances bit for bit.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = int(seed) & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, m: int) -> int:
        """Unbiased integer in [0, m), by rejection."""
        if m <= 0:
            raise ValueError("m must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            z = self.next_u64()
            if z < limit:
                return z % m

    def integer(self, lo: int, hi: int) -> int:
        """Integer in the closed range [lo, hi]."""
        return lo + self.below(hi - lo + 1)
