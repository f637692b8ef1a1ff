"""Counter-based deterministic random stream.

The generator is SplitMix64 (Steele, Lea, Flood 2014) used in counter mode:
output(seed, n) = finalize(seed + (n+1) * GOLDEN) where finalize is the
standard 64-bit avalanche. Gaussians come from Box-Muller on consecutive
53-bit uniforms. The stream for a given seed is therefore a pure function of
(seed, counter), reproducible across processes and platforms.
"""

from __future__ import annotations

import math

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4B8B1
_MIX2 = 0x94D049BB133111EB


def splitmix64(seed: int, counter: int) -> int:
    """n-th 64-bit output of the SplitMix64 stream for this seed."""
    z = (seed + (counter + 1) * _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Child seed for a numbered subtask (fuzz trial, generator draw)."""
    return splitmix64(seed & _MASK, index)


class Stream:
    """Sequential view over the counter-based stream."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK
        self.counter = 0

    def next_u64(self) -> int:
        z = splitmix64(self.seed, self.counter)
        self.counter += 1
        return z

    def uniform(self) -> float:
        """Uniform in [0, 1) with 53-bit resolution."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]. Modulo bias is irrelevant at our ranges."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)

    def normal_pair(self) -> tuple[float, float]:
        # u1 shifted into (0, 1] so log() is safe
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        t = 2.0 * math.pi * u2
        return r * math.cos(t), r * math.sin(t)

    def normals(self, n: int) -> list[float]:
        out: list[float] = []
        while len(out) < n:
            a, b = self.normal_pair()
            out.append(a)
            out.append(b)
        return out[:n]
