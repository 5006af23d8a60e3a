"""Deterministic pseudo-random sampling.

Certificates echo their seed, and identical runs must be byte-identical across
platforms and Python versions, so the library never uses ``random``; this is a
self-contained SplitMix64.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform-enough integer in [0, n); modulo bias is irrelevant here."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.randrange(hi - lo + 1)

    def fork(self, salt: int) -> "SplitMix64":
        return SplitMix64(self.next_u64() ^ (salt * 0x9E3779B97F4A7C15))
