"""
Random Streams

A RandomStream is a reproducible source of uniforms and standard normals keyed
by (seed, stream_id). The two integers feed numpy's SeedSequence (the stream id
as spawn key) and drive a counter-based Philox bit generator, so child streams
for parallel Monte Carlo never overlap and can be rebuilt independently.

Standard normals come from numpy's ziggurat sampler, an exact method.
A stream is single-owner mutable state: do not share one across threads.
"""

import logging

import numpy as np

from errors import DomainError

logger = logging.getLogger(__name__)

MAX_UINT64 = 2 ** 64 - 1


def _check_uint64(name: str, value: int) -> int:
    if not 0 <= int(value) <= MAX_UINT64:
        raise DomainError(f"{name} must be an unsigned 64-bit integer, got {value}")
    return int(value)


class RandomStream:
    """Seeded generator for one (seed, stream_id) pair."""

    def __init__(self, seed: int, stream_id: int = 0):
        self.seed = _check_uint64("seed", seed)
        self.stream_id = _check_uint64("stream_id", stream_id)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream_id,))
        self._generator = np.random.Generator(np.random.Philox(sequence))

    def __repr__(self) -> str:
        return f"RandomStream(seed={self.seed}, stream_id={self.stream_id})"

    def child(self, stream_id: int) -> "RandomStream":
        """Fresh stream sharing this seed under another stream id."""
        return RandomStream(self.seed, stream_id)

    def standard_normal(self, n: int) -> np.ndarray:
        return self._generator.standard_normal(n)

    def uniform(self, n: int) -> np.ndarray:
        """Uniforms on (0, 1]; never exactly zero, so their logs are finite."""
        return 1.0 - self._generator.random(n)
