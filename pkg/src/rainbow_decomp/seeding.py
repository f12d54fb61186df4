"""Deterministic seed derivation for independent pseudorandom streams."""

from __future__ import annotations

import numpy as np


def mix_seed(*components: int) -> int:
    """Collapse integer components into one 63-bit seed.

    Plain XOR of (seed, index) pairs collides across nearby seeds, which
    would hand identical partition streams to different trials; SeedSequence
    mixing keeps derived streams distinct.
    """
    for c in components:
        if c < 0:
            raise ValueError("seed components must be non-negative")
    ss = np.random.SeedSequence(list(components))
    return int(ss.generate_state(1, np.uint64)[0] >> 1)


def rng_from(*components: int) -> np.random.Generator:
    """Generator seeded deterministically from the given components."""
    return np.random.Generator(np.random.PCG64(mix_seed(*components)))
