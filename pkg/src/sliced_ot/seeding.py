"""Deterministic RNG stream derivation.

All sampling in this package is driven by streams derived from a base seed
and a stream index, so batched work can be split across workers without
changing the draws: stream ``k`` is the same object whether it is consumed
serially or on a thread pool.
"""

from __future__ import annotations

import numpy as np

# Directions handled per derived stream.  Fixed so that chunk boundaries
# (and therefore every draw) are independent of the worker count.
CHUNK = 4096


def derive_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Return the generator for stream ``stream`` of base seed ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream,)))


def spawn_seed(rng: np.random.Generator) -> int:
    """Draw a fresh base seed from an existing generator."""
    return int(rng.integers(0, 2**63 - 1))


def resolve_rng(rng: np.random.Generator | int | None) -> np.random.Generator:
    """Coerce a seed, generator, or None into a generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def resolve_seed(rng_or_seed: np.random.Generator | int) -> int:
    """Coerce a generator or integer seed into a base seed for stream derivation."""
    if isinstance(rng_or_seed, np.random.Generator):
        return spawn_seed(rng_or_seed)
    return int(rng_or_seed)
