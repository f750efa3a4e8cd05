"""Deterministic 64-bit PRNG used wherever the package needs randomness.

The generator is SplitMix64: the state advances by a fixed odd increment
("gamma") and each output is a bijective avalanche mix of the state.  It
was chosen because the whole algorithm is a handful of 64-bit operations,
which makes it trivial to reproduce bit-for-bit in the compiled kernels
(`_speedups.pyx`) and in pure Python.

Streams: ``SplitMix64(seed, stream)`` derives a distinct odd gamma from
``stream``, so runs that share a seed but use different stream ids draw
from statistically independent sequences.  This is what parallel sweeps
use instead of jumping ahead.

Bounded draws use rejection sampling against ``2**64 mod n`` and are
therefore exactly uniform.  Golden outputs for (seed=0, stream=0) are
pinned in the test suite; any change here is a breaking change for
recorded colorings.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Seeded generator; ``(seed, stream)`` fully determines the sequence."""

    __slots__ = ("_state", "_gamma")

    def __init__(self, seed: int, stream: int = 0):
        self._state = _mix(seed & _MASK)
        # Per-stream odd increment; stream 0 gives _mix(2**64 - 1) | 1.
        self._gamma = _mix(~stream & _MASK) | 1

    def next_u64(self) -> int:
        self._state = (self._state + self._gamma) & _MASK
        return _mix(self._state)

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection; n >= 1."""
        if n < 1:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) - n) % n  # == 2**64 mod n
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % n
