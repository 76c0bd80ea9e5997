"""Deterministic pseudo-random stream used by the model generators.

The generator is SplitMix64, fixed at the algorithm level so that seeded
corpora reproduce bit-for-bit on any platform or implementation language.
State update for a 64-bit state z (all arithmetic mod 2**64):

    z += 0x9E3779B97F4A7C15
    x = z
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB
    output = x ^ (x >> 31)

Bounded draws use rejection-free multiply-shift: (output * n) >> 64.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


class SplitMix64:
    """64-bit SplitMix64 stream seeded by an integer."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        x = self.state
        x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
        return x ^ (x >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n) via multiply-shift."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return (self.next_u64() * n) >> 64

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def coin(self, num: int = 1, den: int = 2) -> bool:
        """True with probability num/den."""
        return self.below(den) < num

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates using this stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
