"""Seedable 64-bit random source for fixtures and property sweeps.

The generator is splitmix64 (Steele/Lea/Flood mixing constants) with
Gaussians drawn by Box-Muller, so every sampled fixture is reproducible
bit-for-bit from its integer seed on any platform.
"""

import math

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_TWO53 = float(1 << 53)


class SplitMix64:
    """splitmix64 stream seeded by a single integer."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_uint64() >> 11) / _TWO53

    def normal_pair(self) -> tuple[float, float]:
        """Two independent standard normals via Box-Muller."""
        u1 = ((self.next_uint64() >> 11) + 1) / _TWO53  # in (0, 1]
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        return r * math.cos(theta), r * math.sin(theta)

    def normals(self, count: int) -> np.ndarray:
        out = np.empty(count)
        for i in range(0, count - 1, 2):
            out[i], out[i + 1] = self.normal_pair()
        if count % 2:
            out[-1] = self.normal_pair()[0]
        return out

    def complex_normals(self, count: int) -> np.ndarray:
        """Complex entries with independent N(0,1) real and imaginary parts."""
        re = self.normals(count)
        im = self.normals(count)
        return re + 1j * im
