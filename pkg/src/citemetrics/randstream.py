"""Deterministic uniform stream used by the synthetic-corpus generator and
the permutation resampler.

The generator is SplitMix64: a 64-bit counter advanced by the golden-ratio
increment, mixed through two multiply-xorshift rounds. It is simple enough
to restate exactly in other runtimes, so a given seed pins the produced
corpus and permutation sequence regardless of interpreter or platform.
``_ckernels.pyx`` carries a C mirror of ``next_u64``; the two must stay in
lockstep (covered by the backend-equivalence tests).
"""

from __future__ import annotations

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4B1BE9
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def next_u64(state: int) -> tuple[int, int]:
    """Advance a SplitMix64 state; returns (new_state, 64-bit output)."""
    state = (state + _GAMMA) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return state, z ^ (z >> 31)


class UniformStream:
    """Seeded stream of uniforms on [0, 1) with 53-bit resolution."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_raw(self) -> int:
        """Next raw 64-bit word."""
        self._state, z = next_u64(self._state)
        return z

    def uniform(self) -> float:
        """Next float in [0, 1)."""
        return (self.next_raw() >> 11) * 2.0**-53

    def uniform_open(self) -> float:
        """Next float strictly inside (0, 1), for inverse-CDF sampling."""
        return ((self.next_raw() >> 11) + 0.5) * 2.0**-53
