"""Deterministic pseudorandom number generation.

Every stochastic routine in this package draws from the xorshift64* stream
below, seeded through the splitmix64 mixer, so a (seed, index) pair fully
determines a sample sequence.  The generators avoid transcendental functions
wherever reproducibility matters (disc sampling is done by rejection, not by
polar coordinates), so identical seeds give identical point sets.

Constants, for reimplementation elsewhere:

* splitmix64 increment ``0x9E3779B97F4A7C15``
* splitmix64 mixers ``0xBF58476D1CE4E5B9`` and ``0x94D049BB133111EB``
* xorshift64* shifts 12, 25, 27 and multiplier ``0x2545F4914F6CDD1D``

Uniform doubles in [0, 1) take the top 53 bits of a 64-bit word.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_XSMULT = 0x2545F4914F6CDD1D


def mix64(z: int) -> int:
    """splitmix64 finalizer: avalanche a 64-bit word."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Child seed for the index-th subtask of a run.

    Defined as ``mix64(seed + (index + 1) * GOLDEN)``; per-trial streams built
    from these are independent of scheduling order.
    """
    return mix64((seed + (index + 1) * _GOLDEN) & _MASK64)


class Xorshift64Star:
    """Small 64-bit PRNG with a documented, portable update rule."""

    def __init__(self, seed: int):
        state = mix64(seed & _MASK64)
        # the all-zero state is a fixed point of xorshift
        self._state = state if state != 0 else _GOLDEN

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * _XSMULT) & _MASK64

    def random(self) -> float:
        """Uniform double in [0, 1)."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via the multiply-shift reduction."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return (self.next_u64() * n) >> 64

    def in_disc(self) -> tuple[float, float]:
        """Uniform point in the closed unit disc, by rejection from the square."""
        while True:
            x = 2.0 * self.random() - 1.0
            y = 2.0 * self.random() - 1.0
            if x * x + y * y <= 1.0:
                return x, y


def quantize(x: float, bits: int = 16) -> float:
    """Round to the dyadic grid of spacing 2**-bits (exactly representable)."""
    return math.ldexp(round(math.ldexp(x, bits)), -bits)
